// The partition {H_α^1 : α ∈ F} of the odd-cardinality subsets of F.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "goldpart/codes.hpp"
#include "goldpart/gold.hpp"

namespace goldpart {

class PartitionHandle {
 public:
  explicit PartitionHandle(const Gold& gold) : gold_(&gold) {}

  const Gold& gold() const { return *gold_; }
  std::uint32_t cell_count() const { return gold_->size(); }
  /// H_α^1, built on demand.
  AffineCodeSpec cell(FieldElement alpha) const { return build_H_alpha_p(alpha, true, *gold_); }

 private:
  const Gold* gold_;
};

enum class VerifyMode { exhaustive, sampled };

struct PartitionReport {
  int m = 0;
  int s = 0;
  VerifyMode mode = VerifyMode::sampled;
  std::size_t samples = 0;
  std::vector<std::string> failures;
  std::size_t cell_size_log2 = 0;
  bool punctured = false;

  bool passed() const { return failures.empty(); }
};

/// Exhaustive (m = 3 only): every odd subset lies in exactly one cell, even
/// subsets in none, all cells have 2^(2^m-m-1) members, and the punctured
/// cells partition the (2^m-1)-cube into Hamming-code cosets.
/// Sampled: `samples` random odd X lie in cell color(X) and in none of 8
/// other random cells; cell ranks are checked for every cell when m <= 9 and
/// for the touched cells otherwise.
PartitionReport verify_partition(const PartitionHandle& h, VerifyMode mode, std::size_t samples,
                                 std::mt19937_64& rng);

/// Uniformly random odd-cardinality subset of F.
SubsetVec random_odd_subset(const Gold& gold, std::mt19937_64& rng);

/// Drops coordinate 0: bit i-1 of the result is bit i of X.
SubsetVec puncture(const SubsetVec& x);
/// The unique odd-cardinality preimage of a punctured word.
SubsetVec unpuncture(const SubsetVec& y);

/// m = 3 only: failures of the punctured-cell checks (sizes 2^(n-1-m), exact
/// cover of the (2^m-1)-cube, each cell a coset of a distance-3 linear code).
std::vector<std::string> check_punctured_cells(const Gold& gold);

/// X △ {Σ x}: the element of H at distance one from an odd X.
SubsetVec nearest_codeword(const SubsetVec& x, const Gold& gold);

struct CoincidenceReport {
  int m = 0;
  int s = 0;
  int s_mirror = 0;
  VerifyMode mode = VerifyMode::sampled;
  std::size_t samples = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Colors and cell memberships agree between parameter sets (m, s) and
/// (m, m - s) on the same modulus. Exhaustive over odd subsets at m = 3.
CoincidenceReport coincidence_check(const GoldParams& params, std::size_t samples, std::mt19937_64& rng);

/// An odd subset colored differently by the two parameter sets (same m and
/// modulus), searched over up to `attempts` random subsets.
std::optional<SubsetVec> find_color_difference(const Gold& a, const Gold& b, std::size_t attempts,
                                               std::mt19937_64& rng);

}  // namespace goldpart
