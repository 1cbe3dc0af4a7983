#include "goldpart/crooked.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "goldpart/codes.hpp"

namespace goldpart {

std::vector<FieldElement> difference_set(const PermTable& f, FieldElement alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("difference set needs alpha != 0");
  if (alpha.value() >= f.size()) throw std::invalid_argument("alpha outside the field");
  std::vector<bool> present(f.size(), false);
  for (std::uint32_t x = 0; x < f.size(); ++x) present[f(x) ^ f(x ^ alpha.value())] = true;
  std::vector<FieldElement> out;
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    if (present[v]) out.emplace_back(v);
  }
  return out;
}

bool is_affine_subspace(std::span<const FieldElement> set) {
  if (set.empty()) return false;
  std::vector<FieldElement> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!std::has_single_bit(sorted.size())) return false;
  // The shifted set lies in its own span; equal sizes force equality.
  const FieldElement shift = sorted.front();
  std::vector<std::uint32_t> basis;  // xor basis keyed by leading bit
  for (FieldElement e : sorted) {
    std::uint32_t v = (e + shift).value();
    for (std::uint32_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return (std::size_t{1} << basis.size()) == sorted.size();
}

bool is_affine_hyperplane(std::span<const FieldElement> set, int m) {
  return m >= 1 && set.size() == (std::size_t{1} << (m - 1)) && is_affine_subspace(set);
}

CrookedVerdict classify(const PermTable& f) {
  require_bijective(f);
  CrookedVerdict verdict;
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    const auto diffs = difference_set(f, FieldElement(a));
    const bool affine = is_affine_subspace(diffs);
    if (!affine && !verdict.first_non_affine) verdict.first_non_affine = a;
    if (!(affine && diffs.size() == f.size() / 2) && !verdict.first_non_hyperplane) verdict.first_non_hyperplane = a;
  }
  verdict.crooked = !verdict.first_non_hyperplane;
  verdict.affine_condition = !verdict.first_non_affine;
  return verdict;
}

bool is_crooked(const PermTable& f) { return classify(f).crooked; }

bool satisfies_affine_condition(const PermTable& f) { return classify(f).affine_condition; }

std::size_t generalized_overlap_failures(const PermTable& f, std::size_t pairs, std::mt19937_64& rng) {
  require_bijective(f);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto a = static_cast<std::uint32_t>(rng() % f.size());
    auto b = static_cast<std::uint32_t>(rng() % f.size());
    if (a == b) b ^= 1;
    const AffineCodeSpec both = stack(build_from_table(f, FieldElement(a), true), build_from_table(f, FieldElement(b), true));
    if (solve_affine(both)) ++failures;
  }
  return failures;
}

}  // namespace goldpart
