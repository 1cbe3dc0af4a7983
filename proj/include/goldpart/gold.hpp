// The Gold power map x -> x^(σ+1), σ = 2^s, and the cell color of a vertex.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goldpart/field.hpp"
#include "goldpart/subsets.hpp"

namespace goldpart {

struct GoldParams {
  int m = 0;
  int s = 0;
  std::uint32_t sigma = 0;  // 2^s
  Modulus modulus;
  std::uint64_t d = 0;  // (σ+1)^{-1} mod 2^m - 1

  std::uint32_t sigma_plus_1() const { return sigma + 1; }
  std::uint32_t field_size() const { return std::uint32_t{1} << m; }
};

/// Validates (m, s) and the optional modulus override. Requires m odd in
/// [3, 20], 1 <= s < m and gcd(s, m) = 1. Throws std::invalid_argument.
GoldParams make_params(int m, int s, std::optional<std::uint32_t> modulus_poly = std::nullopt);

/// Inverse of a modulo n via the extended Euclidean algorithm; throws if
/// gcd(a, n) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

/// Power sums of a subset: S = Σ x and P = Σ x^(σ+1).
struct PowerSums {
  FieldElement linear;
  FieldElement gold;
  bool odd = false;
};

/// A validated parameter set with lookup tables for the Gold map and its
/// inverse. Immutable after construction and safe to share across threads.
class Gold {
 public:
  explicit Gold(GoldParams params);

  const GoldParams& params() const { return params_; }
  const Field& field() const { return field_; }
  int m() const { return params_.m; }
  std::uint32_t size() const { return params_.field_size(); }

  FieldElement map(FieldElement x) const { return FieldElement(map_[x.value()]); }
  FieldElement root(FieldElement y) const { return FieldElement(root_[y.value()]); }
  std::span<const std::uint32_t> map_table() const { return map_; }
  std::span<const std::uint32_t> root_table() const { return root_; }

  PowerSums sums(const SubsetVec& x) const;

  /// α = S + (S^(σ+1) + P)^(1/(σ+1)) for odd X, the unique α with
  /// X ∈ H_α^1. Throws std::invalid_argument for even X.
  FieldElement color(const SubsetVec& x) const;
  /// Same formula from precomputed power sums (sums.odd must hold).
  FieldElement color(FieldElement linear_sum, FieldElement gold_sum) const {
    return linear_sum + root(map(linear_sum) + gold_sum);
  }

 private:
  GoldParams params_;
  Field field_;
  std::vector<std::uint32_t> map_;
  std::vector<std::uint32_t> root_;
};

/// Direct pow-based evaluation, independent of the tables.
FieldElement gold_map(FieldElement x, const GoldParams& p);
FieldElement gold_root(FieldElement y, const GoldParams& p);

}  // namespace goldpart
