// Codes and cosets over GF(2) given intensionally as affine systems
// {X : <row_i, X> = target_i}. Rows are 2^m-bit functionals on subsets.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "goldpart/gold.hpp"
#include "goldpart/perm_table.hpp"
#include "goldpart/subsets.hpp"

namespace goldpart {

struct AffineCodeSpec {
  std::vector<SubsetVec> rows;
  std::vector<std::uint8_t> targets;
  std::string label;
  // Export metadata; absent fields serialize as null.
  std::optional<std::uint32_t> alpha;
  std::optional<std::uint32_t> beta_or_p;

  std::size_t length() const { return rows.empty() ? 0 : rows.front().length(); }
  bool contains(const SubsetVec& x) const;
  bool is_linear() const;
};

/// H_α^p: parity p and Σ (x+α)^(σ+1) = 0.
AffineCodeSpec build_H_alpha_p(FieldElement alpha, bool p, const Gold& gold);
/// H_α(β): odd parity and Σ (x+α)^(σ+1) = β^(σ+1).
AffineCodeSpec build_H_alpha_beta(FieldElement alpha, FieldElement beta, const Gold& gold);
/// Extended Hamming code: even parity and Σ x = 0.
AffineCodeSpec build_H(const Gold& gold);
/// H with the extra condition Σ x^(σ+1) = 0.
AffineCodeSpec build_B(const Gold& gold);
/// Parity p and Σ f(x+α) = 0 for a permutation f. Throws if f is not bijective.
AffineCodeSpec build_from_table(const PermTable& f, FieldElement alpha, bool p);

/// Rows and targets of both systems; solutions are the intersection.
AffineCodeSpec stack(const AffineCodeSpec& a, const AffineCodeSpec& b);

std::size_t rank(const std::vector<SubsetVec>& rows);

/// Reduced row echelon form of an affine system, computed on a copy.
class EchelonSystem {
 public:
  explicit EchelonSystem(const AffineCodeSpec& spec);

  bool feasible() const { return feasible_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// log2 of the number of solutions (valid only when feasible).
  std::size_t nullity() const { return length_ - rows_.size(); }

  /// The solution with every free coordinate zero.
  SubsetVec particular() const;
  /// Uniform solution: free coordinates drawn at random, pivots solved.
  SubsetVec sample(std::mt19937_64& rng) const;

 private:
  SubsetVec complete(SubsetVec free_part) const;

  std::size_t length_ = 0;
  bool feasible_ = true;
  std::vector<SubsetVec> rows_;
  std::vector<std::uint8_t> targets_;
  std::vector<std::size_t> pivots_;
};

struct Solution {
  SubsetVec particular;
  std::size_t nullity = 0;
};

/// nullopt when the system is inconsistent.
std::optional<Solution> solve_affine(const AffineCodeSpec& spec);

/// log2 |solutions|, or nullopt (the -inf marker) when infeasible.
std::optional<std::size_t> cardinality_log2(const AffineCodeSpec& spec);

/// Searches supports of size 1..limit for a nonzero codeword of a linear
/// spec (all targets zero, at most 64 rows). Returns the support of one
/// codeword found, or nullopt. Throws std::invalid_argument for affine specs.
std::optional<std::vector<std::uint32_t>> min_weight_at_most(const AffineCodeSpec& spec, int limit);

/// One JSON header line {m, s, label, alpha, beta_or_p}, then one line per
/// row: "<row hex> <target bit>".
void write_matrix(std::ostream& out, const AffineCodeSpec& spec, const GoldParams& params);

}  // namespace goldpart
