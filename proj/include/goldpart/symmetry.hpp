// Isometries that stabilize the family of cells H_α(β), and the s-class
// of a vertex.
#pragma once

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "goldpart/codes.hpp"
#include "goldpart/gold.hpp"
#include "goldpart/subsets.hpp"
#include "json.hpp"

namespace goldpart {

/// X -> X △ Y for a fixed Y ∈ H.
struct CosetTranslate {
  SubsetVec y;
};

using Isometry = std::variant<Translate, Scale, Frobenius, CosetTranslate>;

/// Throws std::invalid_argument for scale(0), Y ∉ H, or wrong lengths.
void validate(const Isometry& iso, const Gold& gold);
SubsetVec apply(const Isometry& iso, const SubsetVec& x, const Gold& gold);

/// Σ_{y∈Y} y^(σ+1) for Y ∈ H; throws std::invalid_argument otherwise.
FieldElement s_invariant(const SubsetVec& y, const Gold& gold);

/// β' with X △ Y ∈ H_α(β') whenever X ∈ H_α(β).
FieldElement coset_translate_target(FieldElement beta, const SubsetVec& y, const Gold& gold);

/// Index pair (α, β) of a cell H_α(β).
struct CellIndex {
  FieldElement alpha;
  FieldElement beta;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

/// Where `iso` sends the cell H_α(β):
///   translate(δ)    -> H_{α+δ}(β)
///   scale(μ)        -> H_{μα}(μβ)
///   frobenius       -> H_{α²}(β²)
///   coset_translate -> H_α((β^(σ+1) + s_Y)^(1/(σ+1)))
CellIndex image_cell(const Isometry& iso, CellIndex cell, const Gold& gold);

enum class SClass { zero, nonzero };
const char* to_string(SClass c);

/// zero iff the nearest H-codeword of the odd vertex X has s-invariant 0.
SClass s_class(const SubsetVec& x, const Gold& gold);

struct CanonicalReps {
  SubsetVec zero_class;     // {0}
  SubsetVec nonzero_class;  // lexicographically smallest triple of class nonzero
};
CanonicalReps canonical_reps(const Gold& gold);

nlohmann::ordered_json to_json(const Isometry& iso);
Isometry isometry_from_json(const nlohmann::json& j, const Gold& gold);

/// Random isometry of the given kind index (0 translate, 1 scale,
/// 2 frobenius, 3 coset translate by a uniform element of H). When
/// `automorphism_only`, coset translates draw Y from B so s_Y = 0.
Isometry random_isometry(int kind, const Gold& gold, std::mt19937_64& rng, bool automorphism_only = false);

struct IsometryCheck {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
};

/// For each of the four isometry kinds: draw a random cell H_α(β), a random
/// member X of it, and a random isometry; check the image lies in
/// image_cell(...). Returns one result per kind.
std::vector<IsometryCheck> verify_isometry_images(const Gold& gold, std::size_t samples, std::mt19937_64& rng);

}  // namespace goldpart
