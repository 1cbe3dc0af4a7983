// Difference-set conditions on permutations of F under which the cells
// built from f stay pairwise disjoint.
#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "goldpart/field.hpp"
#include "goldpart/perm_table.hpp"

namespace goldpart {

/// {f(x) + f(x + α) : x ∈ F}, sorted. Throws std::invalid_argument for α = 0.
std::vector<FieldElement> difference_set(const PermTable& f, FieldElement alpha);

/// S + t is a GF(2)-linear subspace for t ∈ S. False for empty S.
bool is_affine_subspace(std::span<const FieldElement> set);
/// Affine subspace with exactly 2^(m-1) elements.
bool is_affine_hyperplane(std::span<const FieldElement> set, int m);

/// Every difference set (α != 0) is an affine hyperplane. Throws for
/// non-bijective f.
bool is_crooked(const PermTable& f);
/// Every difference set (α != 0) is an affine subspace of any dimension.
bool satisfies_affine_condition(const PermTable& f);

struct CrookedVerdict {
  bool crooked = false;
  bool affine_condition = false;
  std::optional<std::uint32_t> first_non_hyperplane;  // smallest offending α
  std::optional<std::uint32_t> first_non_affine;
};
CrookedVerdict classify(const PermTable& f);

/// Samples `pairs` random α != β and counts those where the generalized
/// cells build_from_table(f, α, 1) and (f, β, 1) intersect.
std::size_t generalized_overlap_failures(const PermTable& f, std::size_t pairs, std::mt19937_64& rng);

}  // namespace goldpart
