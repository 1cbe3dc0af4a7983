#include <gtest/gtest.h>

#include <random>

#include "goldpart/partition.hpp"
#include "goldpart/symmetry.hpp"

using namespace goldpart;

namespace {

FieldElement random_element(const Gold& gold, std::mt19937_64& rng) {
  return FieldElement(static_cast<std::uint32_t>(rng() % gold.size()));
}

}  // namespace

TEST(IsometryImages, ImagesLandInPredictedCells) {
  for (int m : {3, 5, 7, 9}) {
    const Gold gold(make_params(m, m == 3 ? 1 : 2));
    std::mt19937_64 rng(m);
    for (const IsometryCheck& r : verify_isometry_images(gold, 50, rng)) {
      EXPECT_EQ(r.failures, 0u) << r.name << " m=" << m;
      EXPECT_EQ(r.samples, 50u);
    }
  }
}

TEST(IsometryImages, ExplicitSingletonImages) {
  const Gold gold(make_params(5, 1));
  const Field& f = gold.field();
  const std::uint32_t zero[] = {0};
  const SubsetVec x = SubsetVec::from_elements(5, zero);  // in H_0(0)
  const SubsetVec moved = apply(Translate{FieldElement(9)}, x, gold);
  EXPECT_EQ(gold.color(moved), FieldElement(9));
  // {a} lies in H_0(a); scaling by μ gives {μa} ∈ H_0(μa).
  const std::uint32_t three[] = {3};
  const CellIndex cell{FieldElement(0), FieldElement(3)};
  const CellIndex target = image_cell(Scale{FieldElement(6)}, cell, gold);
  EXPECT_EQ(target.beta, f.mul(FieldElement(6), FieldElement(3)));
  EXPECT_TRUE(build_H_alpha_beta(target.alpha, target.beta, gold)
                  .contains(apply(Scale{FieldElement(6)}, SubsetVec::from_elements(5, three), gold)));
}

TEST(SInvariant, ValuesAndErrors) {
  const Gold gold(make_params(3, 1));
  EXPECT_EQ(s_invariant(SubsetVec::for_field(3), gold), FieldElement(0));
  EXPECT_EQ(s_invariant(SubsetVec::all(8), gold), FieldElement(0));  // F ∈ B
  // Scan weight-4 words of H for one outside B.
  bool found = false;
  for (std::uint64_t mask = 0; mask < 256 && !found; ++mask) {
    if (std::popcount(mask) != 4) continue;
    SubsetVec y = SubsetVec::for_field(3);
    y.words()[0] = mask;
    if (!build_H(gold).contains(y)) continue;
    if (!build_B(gold).contains(y)) {
      EXPECT_NE(s_invariant(y, gold), FieldElement(0));
      found = true;
    }
  }
  EXPECT_TRUE(found);
  const std::uint32_t one[] = {1};
  EXPECT_THROW(s_invariant(SubsetVec::from_elements(3, one), gold), std::invalid_argument);
}

TEST(SInvariant, InBIsZero) {
  std::mt19937_64 rng(1);
  const Gold gold(make_params(7, 1));
  const EchelonSystem b(build_B(gold));
  for (int i = 0; i < 50; ++i) EXPECT_EQ(s_invariant(b.sample(rng), gold), FieldElement(0));
}

TEST(CosetTranslateTarget, Formula) {
  std::mt19937_64 rng(2);
  const Gold gold(make_params(5, 2));
  const EchelonSystem h(build_H(gold));
  const EchelonSystem b(build_B(gold));
  for (int i = 0; i < 100; ++i) {
    const FieldElement beta = random_element(gold, rng);
    EXPECT_EQ(coset_translate_target(beta, b.sample(rng), gold), beta);
    const SubsetVec y = h.sample(rng);
    const FieldElement t = s_invariant(y, gold);
    EXPECT_EQ(coset_translate_target(FieldElement(0), y, gold), gold.root(t));
    EXPECT_EQ(coset_translate_target(coset_translate_target(beta, y, gold), y, gold), beta);
  }
}

TEST(SClass, Examples) {
  const Gold gold(make_params(5, 1));
  for (std::uint32_t a = 0; a < 32; ++a) {
    const std::uint32_t single[] = {a};
    EXPECT_EQ(s_class(SubsetVec::from_elements(5, single), gold), SClass::zero);
  }
  const CanonicalReps reps = canonical_reps(gold);
  const std::uint32_t zero[] = {0}, triple[] = {0, 1, 2};
  EXPECT_EQ(reps.zero_class, SubsetVec::from_elements(5, zero));
  EXPECT_EQ(reps.nonzero_class, SubsetVec::from_elements(5, triple));
  EXPECT_EQ(s_class(reps.nonzero_class, gold), SClass::nonzero);
  EXPECT_THROW(s_class(SubsetVec::for_field(5), gold), std::invalid_argument);
}

TEST(SClass, InvariantUnderAutomorphisms) {
  for (int m : {5, 7, 9}) {
    const Gold gold(make_params(m, 1));
    std::mt19937_64 rng(m);
    for (int i = 0; i < 200; ++i) {
      const SubsetVec x = random_odd_subset(gold, rng);
      const Isometry iso = random_isometry(static_cast<int>(rng() % 4), gold, rng, /*automorphism_only=*/true);
      const SubsetVec y = apply(iso, x, gold);
      ASSERT_EQ(s_class(x, gold), s_class(y, gold)) << to_json(iso).dump();
    }
  }
}

TEST(Isometry, ValidationAndJson) {
  const Gold gold(make_params(3, 1));
  EXPECT_THROW(validate(Scale{FieldElement(0)}, gold), std::invalid_argument);
  const std::uint32_t bad[] = {1, 2};
  EXPECT_THROW(validate(CosetTranslate{SubsetVec::from_elements(3, bad)}, gold), std::invalid_argument);
  const std::uint32_t good[] = {1, 2, 3, 0};
  const Isometry iso = CosetTranslate{SubsetVec::from_elements(3, good)};
  EXPECT_EQ(to_json(iso).dump(), R"({"kind":"coset_translate","Y":"0f"})");
  EXPECT_EQ(to_json(Scale{FieldElement(5)}).dump(), R"({"kind":"scale","mu":5})");
  for (const Isometry& i : {Isometry(Translate{FieldElement(3)}), Isometry(Scale{FieldElement(2)}),
                            Isometry(Frobenius{}), iso}) {
    EXPECT_EQ(to_json(isometry_from_json(nlohmann::json::parse(to_json(i).dump()), gold)), to_json(i));
  }
  EXPECT_THROW(isometry_from_json(nlohmann::json::parse(R"({"kind":"rotate"})"), gold), std::invalid_argument);
  EXPECT_THROW(isometry_from_json(nlohmann::json::parse(R"({"kind":"scale"})"), gold), std::invalid_argument);
}
