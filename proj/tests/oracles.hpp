// Brute-force reference computations for the unit and acceptance tests.
// Nothing here uses the lookup tables, echelon forms or square kernel of
// the library; field arithmetic is redone with schoolbook polynomials.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

inline int degree(std::uint64_t p) {
  int d = -1;
  while (p >> (d + 1)) ++d;
  return d;
}

inline std::uint64_t poly_rem(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  for (int d = degree(a); d >= db; d = degree(a)) a ^= b << (d - db);
  return a;
}

/// Trial division by every polynomial of degree 1..deg-1.
inline bool irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree(q) < d; ++q) {
    if (poly_rem(p, q) == 0) return false;
  }
  return true;
}

inline std::uint64_t smallest_irreducible(int m) {
  for (std::uint64_t p = std::uint64_t{1} << m;; ++p) {
    if (irreducible(p)) return p;
  }
}

/// Full carryless product, then one reduction.
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly) {
  std::uint64_t wide = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) wide ^= std::uint64_t{a} << i;
  }
  return static_cast<std::uint32_t>(poly_rem(wide, poly));
}

/// Repeated multiplication (no square-and-multiply).
inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t poly) {
  std::uint32_t acc = 1;
  for (std::uint64_t i = 0; i < e; ++i) acc = mul(acc, a, poly);
  return acc;
}

/// Σ_{x∈X} (x + α)^(σ+1) over the element list.
inline std::uint32_t shifted_gold_sum(const std::vector<std::uint32_t>& xs, std::uint32_t alpha, std::uint32_t sigma,
                                      std::uint32_t poly) {
  std::uint32_t acc = 0;
  for (std::uint32_t x : xs) acc ^= pow(x ^ alpha, sigma + 1, poly);
  return acc;
}

/// The α with Σ (x+α)^(σ+1) = 0 for odd X, found by scanning all α;
/// returns every hit so callers can check uniqueness.
inline std::vector<std::uint32_t> member_cells(const std::vector<std::uint32_t>& xs, int m, std::uint32_t sigma,
                                               std::uint32_t poly) {
  std::vector<std::uint32_t> hits;
  if (xs.size() % 2 == 0) return hits;
  for (std::uint32_t a = 0; a < (1u << m); ++a) {
    if (shifted_gold_sum(xs, a, sigma, poly) == 0) hits.push_back(a);
  }
  return hits;
}

inline std::vector<std::uint32_t> elements_of_mask(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

/// Color of X △ {a, b} for every pair, from scanning member cells.
/// colors[a * n + b]; diagonal left as 0xffff.
inline std::vector<std::uint16_t> color_matrix(const std::vector<std::uint32_t>& base, int m, std::uint32_t sigma,
                                               std::uint32_t poly) {
  const std::uint32_t n = 1u << m;
  std::vector<std::uint16_t> colors(std::size_t{n} * n, 0xffff);
  std::vector<bool> in(n, false);
  for (std::uint32_t x : base) in[x] = true;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      std::vector<std::uint32_t> xs;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (in[x] != (x == a || x == b)) xs.push_back(x);
      }
      const auto hits = member_cells(xs, m, sigma, poly);
      const auto c = static_cast<std::uint16_t>(hits.size() == 1 ? hits.front() : 0xfffe);
      colors[std::size_t{a} * n + b] = colors[std::size_t{b} * n + a] = c;
    }
  }
  return colors;
}

/// Two-color squares by enumerating every 4-set and its three 4-cycles.
inline std::uint64_t count_squares(const std::vector<std::uint16_t>& colors, std::uint32_t n) {
  auto c = [&](std::uint32_t x, std::uint32_t y) { return colors[std::size_t{x} * n + y]; };
  std::uint64_t q = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      for (std::uint32_t d = b + 1; d < n; ++d)
        for (std::uint32_t e = d + 1; e < n; ++e) {
          const std::array<std::array<std::uint32_t, 4>, 3> cycles = {{{a, b, d, e}, {a, b, e, d}, {a, d, b, e}}};
          for (const auto& [x, y, z, v] : cycles) {
            if (c(x, y) == c(z, v) && c(y, z) == c(v, x)) ++q;
          }
        }
  return q;
}

}  // namespace oracle
