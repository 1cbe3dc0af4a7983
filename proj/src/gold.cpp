#include "goldpart/gold.hpp"

#include <numeric>
#include <tuple>
#include <utility>
#include <stdexcept>
#include <string>

namespace goldpart {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  std::int64_t r0 = static_cast<std::int64_t>(n), r1 = static_cast<std::int64_t>(a % n);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) throw std::invalid_argument(std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  if (t0 < 0) t0 += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t0);
}

GoldParams make_params(int m, int s, std::optional<std::uint32_t> modulus_poly) {
  if (m < 3 || m % 2 == 0 || m > kMaxDegree) {
    throw std::invalid_argument("m must be odd and in [3, 20], got " + std::to_string(m));
  }
  if (s < 1 || s >= m) throw std::invalid_argument("s must satisfy 1 <= s < m, got " + std::to_string(s));
  if (std::gcd(s, m) != 1) {
    throw std::invalid_argument("gcd(s, m) must be 1, got gcd(" + std::to_string(s) + ", " + std::to_string(m) +
                                ") = " + std::to_string(std::gcd(s, m)));
  }
  GoldParams p;
  p.m = m;
  p.s = s;
  p.sigma = std::uint32_t{1} << s;
  p.modulus = modulus_poly ? make_modulus(m, *modulus_poly) : find_modulus(m);
  p.d = inverse_mod(p.sigma + 1, (std::uint64_t{1} << m) - 1);
  return p;
}

FieldElement gold_map(FieldElement x, const GoldParams& p) { return Field(p.modulus).pow(x, p.sigma + 1); }

FieldElement gold_root(FieldElement y, const GoldParams& p) { return Field(p.modulus).pow(y, p.d); }

Gold::Gold(GoldParams params) : params_(params), field_(params.modulus), map_(size()), root_(size()) {
  for (std::uint32_t x = 0; x < size(); ++x) {
    map_[x] = field_.pow(FieldElement(x), params_.sigma + 1).value();
  }
  for (std::uint32_t x = 0; x < size(); ++x) root_[map_[x]] = x;
}

PowerSums Gold::sums(const SubsetVec& x) const {
  PowerSums out;
  std::uint32_t linear = 0, gold = 0;
  const auto elements = x.elements();
  for (std::uint32_t v : elements) {
    linear ^= v;
    gold ^= map_[v];
  }
  out.linear = FieldElement(linear);
  out.gold = FieldElement(gold);
  out.odd = elements.size() % 2 == 1;
  return out;
}

FieldElement Gold::color(const SubsetVec& x) const {
  if (x.length() != size()) throw std::invalid_argument("subset length does not match the field");
  const PowerSums s = sums(x);
  if (!s.odd) throw std::invalid_argument("color is defined only for odd-cardinality subsets");
  return color(s.linear, s.gold);
}

}  // namespace goldpart
