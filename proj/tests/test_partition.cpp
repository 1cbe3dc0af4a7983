#include <gtest/gtest.h>

#include <random>

#include "goldpart/partition.hpp"

using namespace goldpart;

TEST(Partition, ExhaustiveM3) {
  const Gold gold(make_params(3, 1));
  std::mt19937_64 rng(1);
  const PartitionReport r = verify_partition(PartitionHandle(gold), VerifyMode::exhaustive, 0, rng);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.cell_size_log2, 4u);
  EXPECT_EQ(r.samples, 256u);
  EXPECT_TRUE(r.punctured);
}

TEST(Partition, ExhaustiveRefusedAboveM3) {
  const Gold gold(make_params(5, 1));
  std::mt19937_64 rng(1);
  EXPECT_THROW(verify_partition(PartitionHandle(gold), VerifyMode::exhaustive, 0, rng), std::invalid_argument);
}

TEST(Partition, SampledAllM) {
  for (int m = 5; m <= 13; m += 2) {
    const Gold gold(make_params(m, 2));
    std::mt19937_64 rng(m);
    const PartitionReport r = verify_partition(PartitionHandle(gold), VerifyMode::sampled, m <= 9 ? 1000 : 100, rng);
    EXPECT_TRUE(r.passed()) << "m=" << m << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.cell_size_log2, gold.size() - m - 1u);
  }
}

TEST(Partition, RandomOddSubsetsAreOdd) {
  const Gold gold(make_params(7, 1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) ASSERT_TRUE(random_odd_subset(gold, rng).parity());
}

TEST(Puncture, Examples) {
  const std::uint32_t zero[] = {0}, five[] = {5};
  EXPECT_TRUE(puncture(SubsetVec::from_elements(3, zero)).none());
  const SubsetVec p = puncture(SubsetVec::from_elements(3, five));
  EXPECT_EQ(p.length(), 7u);
  EXPECT_EQ(p.elements(), std::vector<std::uint32_t>{4});
  EXPECT_EQ(unpuncture(p), SubsetVec::from_elements(3, five));
  EXPECT_EQ(unpuncture(SubsetVec(7)), SubsetVec::from_elements(3, zero));
}

TEST(Puncture, CellsAreHammingCosetsAtM3) {
  for (int s : {1, 2}) {
    EXPECT_TRUE(check_punctured_cells(Gold(make_params(3, s))).empty());
  }
  EXPECT_THROW(check_punctured_cells(Gold(make_params(5, 1))), std::invalid_argument);
}

TEST(NearestCodeword, UniqueNeighbourInH) {
  const Gold gold(make_params(3, 1));
  const AffineCodeSpec h = build_H(gold);
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SubsetVec x = SubsetVec::for_field(3);
    x.words()[0] = mask;
    if (!x.parity()) continue;
    std::size_t neighbours = 0;
    for (std::uint32_t e = 0; e < 8; ++e) {
      SubsetVec y = x;
      y.flip(e);
      if (h.contains(y)) {
        ++neighbours;
        EXPECT_EQ(y, nearest_codeword(x, gold));
      }
    }
    ASSERT_EQ(neighbours, 1u);
  }
  EXPECT_THROW(nearest_codeword(SubsetVec::for_field(3), gold), std::invalid_argument);
}

TEST(Coincidence, MirrorParameters) {
  std::mt19937_64 rng(5);
  const CoincidenceReport r3 = coincidence_check(make_params(3, 1), 0, rng);
  EXPECT_TRUE(r3.passed());
  EXPECT_EQ(r3.mode, VerifyMode::exhaustive);
  EXPECT_EQ(r3.samples, 128u);
  for (int m : {5, 7, 9}) {
    const CoincidenceReport r = coincidence_check(make_params(m, 1), 1000, rng);
    EXPECT_TRUE(r.passed()) << "m=" << m;
    EXPECT_EQ(r.s_mirror, m - 1);
  }
}

TEST(Coincidence, DifferentExponentsGiveDifferentColors) {
  std::mt19937_64 rng(6);
  const Gold s1(make_params(5, 1)), s2(make_params(5, 2));
  const auto witness = find_color_difference(s1, s2, 1000, rng);
  ASSERT_TRUE(witness.has_value());
  EXPECT_NE(s1.color(*witness), s2.color(*witness));
}
