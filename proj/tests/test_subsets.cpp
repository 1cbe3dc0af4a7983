#include <gtest/gtest.h>

#include <random>

#include "goldpart/gold.hpp"
#include "goldpart/subsets.hpp"

using namespace goldpart;

namespace {

SubsetVec random_subset(int m, std::mt19937_64& rng) {
  SubsetVec x = SubsetVec::for_field(m);
  for (std::uint32_t i = 0; i < x.length(); ++i) {
    if (rng() & 1u) x.set(i);
  }
  return x;
}

SubsetVec set_of(int m, std::initializer_list<std::uint32_t> xs) {
  return SubsetVec::from_elements(m, std::vector<std::uint32_t>(xs));
}

}  // namespace

TEST(Subsets, Parity) {
  EXPECT_FALSE(SubsetVec::for_field(3).parity());
  EXPECT_TRUE(set_of(3, {0}).parity());
  for (int m = 1; m <= 8; ++m) EXPECT_FALSE(SubsetVec::all(std::size_t{1} << m).parity());
}

TEST(Subsets, PowerSums) {
  const Field f(find_modulus(3));
  EXPECT_EQ(power_sum(SubsetVec::for_field(3), 3, f), FieldElement(0));
  EXPECT_EQ(power_sum(set_of(3, {0, 5}), 3, f), f.pow(FieldElement(5), 3));
  // Direct sum over the whole field: 0 ^ 1 ^ ... ^ 7 = 0.
  std::uint32_t acc = 0;
  for (std::uint32_t x = 0; x < 8; ++x) acc ^= x;
  EXPECT_EQ(acc, 0u);
  EXPECT_EQ(power_sum(SubsetVec::all(8), 1, f), FieldElement(acc));
}

TEST(Subsets, SymDiff) {
  const SubsetVec x = set_of(4, {1, 2, 9});
  EXPECT_EQ(sym_diff(x, SubsetVec::for_field(4)), x);
  EXPECT_TRUE(sym_diff(x, x).none());
  EXPECT_EQ(sym_diff(set_of(3, {0}), set_of(3, {0, 6})), set_of(3, {6}));
  EXPECT_THROW(sym_diff(SubsetVec::for_field(3), SubsetVec::for_field(4)), std::invalid_argument);
}

TEST(Subsets, PowerSumOfSymmetricDifference) {
  std::mt19937_64 rng(5);
  const Field f(find_modulus(7));
  for (int i = 0; i < 200; ++i) {
    const SubsetVec x = random_subset(7, rng), y = random_subset(7, rng);
    SubsetVec x_only = x, y_only = y;
    for (std::uint32_t e : x.elements()) {
      if (y.test(e)) {
        x_only.reset(e);
        y_only.reset(e);
      }
    }
    for (std::uint64_t e : {1u, 3u, 5u}) {
      ASSERT_EQ(power_sum(sym_diff(x, y), e, f), power_sum(x_only, e, f) + power_sum(y_only, e, f));
    }
  }
}

TEST(Subsets, PointMapsPreserveCardinalityAndInvert) {
  std::mt19937_64 rng(9);
  const Field f(find_modulus(5));
  const SubsetVec x = set_of(5, {0, 3, 17});
  EXPECT_EQ(apply_point_map(x, Translate{FieldElement(0)}, f), x);
  EXPECT_EQ(apply_point_map(x, Scale{FieldElement(1)}, f), x);
  EXPECT_EQ(apply_point_map(set_of(5, {0}), Translate{FieldElement(12)}, f), set_of(5, {12}));
  EXPECT_THROW(apply_point_map(x, Scale{FieldElement(0)}, f), std::invalid_argument);
  for (int i = 0; i < 200; ++i) {
    const SubsetVec s = random_subset(5, rng);
    const FieldElement delta(static_cast<std::uint32_t>(rng() % 32));
    const FieldElement mu(1 + static_cast<std::uint32_t>(rng() % 31));
    ASSERT_EQ(apply_point_map(apply_point_map(s, Translate{delta}, f), Translate{delta}, f), s);
    const SubsetVec scaled = apply_point_map(s, Scale{mu}, f);
    ASSERT_EQ(scaled.count(), s.count());
    ASSERT_EQ(apply_point_map(scaled, Scale{f.inverse(mu)}, f), s);
    // Frobenius has order m.
    SubsetVec frob = s;
    for (int k = 0; k < 5; ++k) frob = apply_point_map(frob, Frobenius{}, f);
    ASSERT_EQ(frob, s);
  }
}

TEST(Subsets, HexEncoding) {
  EXPECT_EQ(set_of(3, {0}).to_hex(), "01");
  EXPECT_EQ(set_of(3, {1, 7}).to_hex(), "82");
  EXPECT_EQ(set_of(5, {0, 1, 2}).to_hex(), "00000007");
  const SubsetVec big = set_of(7, {0, 64, 127});
  EXPECT_EQ(big.to_hex(), "0000000000000001" "8000000000000001");
  EXPECT_EQ(big.to_hex().size(), 128u / 4);
  std::mt19937_64 rng(1);
  for (int m : {3, 5, 7, 9}) {
    for (int i = 0; i < 20; ++i) {
      const SubsetVec s = random_subset(m, rng);
      ASSERT_EQ(s.to_hex().size(), s.length() / 4);
      ASSERT_EQ(SubsetVec::from_hex(s.length(), s.to_hex()), s);
    }
  }
  EXPECT_THROW(SubsetVec::from_hex(8, "1"), std::invalid_argument);
  EXPECT_THROW(SubsetVec::from_hex(8, "zz"), std::invalid_argument);
}

TEST(Subsets, ParseSubset) {
  EXPECT_EQ(parse_subset(3, "0"), set_of(3, {0}));
  EXPECT_EQ(parse_subset(3, "1,2,7"), set_of(3, {1, 2, 7}));
  EXPECT_EQ(parse_subset(3, "hex:82"), set_of(3, {1, 7}));
  EXPECT_TRUE(parse_subset(3, "").none());
  EXPECT_THROW(parse_subset(3, "8"), std::invalid_argument);
  EXPECT_THROW(parse_subset(3, "1,1"), std::invalid_argument);
  EXPECT_THROW(parse_subset(3, "1,,2"), std::invalid_argument);
}
