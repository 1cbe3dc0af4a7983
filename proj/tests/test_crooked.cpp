#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "goldpart/crooked.hpp"
#include "goldpart/gold.hpp"

using namespace goldpart;

namespace {

std::vector<FieldElement> elems(std::initializer_list<std::uint32_t> xs) {
  std::vector<FieldElement> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(DifferenceSet, Examples) {
  const PermTable id = PermTable::identity(4);
  for (std::uint32_t a = 1; a < 16; ++a) EXPECT_EQ(difference_set(id, FieldElement(a)), elems({a}));
  EXPECT_THROW(difference_set(id, FieldElement(0)), std::invalid_argument);

  const Gold gold(make_params(3, 1));
  const PermTable g = PermTable::gold(gold);
  for (std::uint32_t a = 1; a < 8; ++a) {
    const auto d = difference_set(g, FieldElement(a));
    EXPECT_EQ(d.size(), 4u);
    EXPECT_TRUE(is_affine_hyperplane(d, 3));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const PermTable f = PermTable::random(5, rng);
    const auto d = difference_set(f, FieldElement(1 + static_cast<std::uint32_t>(rng() % 31)));
    EXPECT_FALSE(std::binary_search(d.begin(), d.end(), FieldElement(0)));
    EXPECT_LE(d.size(), 16u);
  }
}

TEST(AffineSubspace, Predicates) {
  EXPECT_TRUE(is_affine_subspace(elems({5})));
  EXPECT_FALSE(is_affine_hyperplane(elems({5}), 3));
  std::vector<FieldElement> all;
  for (std::uint32_t x = 0; x < 8; ++x) all.emplace_back(x);
  EXPECT_TRUE(is_affine_subspace(all));
  EXPECT_FALSE(is_affine_hyperplane(all, 3));
  EXPECT_FALSE(is_affine_subspace(elems({1, 2, 3})));
  EXPECT_FALSE(is_affine_subspace(elems({0, 1, 2, 4})));
  EXPECT_TRUE(is_affine_subspace(elems({1, 2, 4, 7})));  // 1 + span{3, 5}
  EXPECT_TRUE(is_affine_hyperplane(elems({1, 2, 4, 7}), 3));
  EXPECT_FALSE(is_affine_subspace({}));
  EXPECT_TRUE(is_affine_subspace(elems({9, 9})));
}

TEST(AffineSubspace, AgreesWithClosureOracle) {
  // Closure under x + y + z for all triples characterizes affine subspaces.
  std::mt19937_64 rng(12);
  for (int i = 0; i < 3000; ++i) {
    std::vector<FieldElement> set;
    const std::uint32_t size = 1 + static_cast<std::uint32_t>(rng() % 8);
    while (set.size() < size) {
      const FieldElement e(static_cast<std::uint32_t>(rng() % 16));
      if (std::find(set.begin(), set.end(), e) == set.end()) set.push_back(e);
    }
    bool closed = true;
    for (auto a : set)
      for (auto b : set)
        for (auto c : set) closed &= std::find(set.begin(), set.end(), a + b + c) != set.end();
    ASSERT_EQ(is_affine_subspace(set), closed);
  }
}

TEST(Crooked, GoldIsCrooked) {
  for (int m : {3, 5, 7}) {
    for (int s = 1; s < m; ++s) {
      if (std::gcd(s, m) != 1) continue;
      const PermTable g = PermTable::gold(Gold(make_params(m, s)));
      EXPECT_TRUE(is_crooked(g)) << "m=" << m << " s=" << s;
      EXPECT_TRUE(satisfies_affine_condition(g));
    }
  }
}

TEST(Crooked, IdentityAndRandom) {
  const PermTable id = PermTable::identity(5);
  EXPECT_FALSE(is_crooked(id));
  EXPECT_TRUE(satisfies_affine_condition(id));
  const CrookedVerdict v = classify(id);
  EXPECT_EQ(v.first_non_hyperplane, 1u);
  EXPECT_FALSE(v.first_non_affine.has_value());

  std::mt19937_64 rng(100);
  int crooked = 0;
  for (int i = 0; i < 100; ++i) crooked += is_crooked(PermTable::random(5, rng));
  EXPECT_EQ(crooked, 0);

  PermTable broken = PermTable::identity(3);
  broken.images[0] = 1;
  EXPECT_THROW(is_crooked(broken), std::invalid_argument);
}

TEST(Crooked, GeneralizedCellsStayDisjoint) {
  std::mt19937_64 rng(8);
  for (int m : {3, 5}) {
    const PermTable g = PermTable::gold(Gold(make_params(m, 1)));
    EXPECT_EQ(generalized_overlap_failures(g, 100, rng), 0u);
    EXPECT_EQ(generalized_overlap_failures(PermTable::identity(m), 100, rng), 0u);
    // An affine-equivalent permutation x -> A(g(x)) + c keeps the condition.
    PermTable h = g;
    for (auto& y : h.images) y = ((y << 1) | (y >> (m - 1))) & ((1u << m) - 1) ^ 3u;
    ASSERT_TRUE(satisfies_affine_condition(h));
    EXPECT_EQ(generalized_overlap_failures(h, 100, rng), 0u);
  }
}

TEST(PermTableFile, RoundTripAndErrors) {
  std::mt19937_64 rng(1);
  const PermTable f = PermTable::random(4, rng);
  std::stringstream io;
  write_perm_table(io, f);
  EXPECT_EQ(io.str().substr(0, 8), "{\"m\":4}\n");
  const PermTable back = read_perm_table(io);
  EXPECT_EQ(back.m, 4);
  EXPECT_EQ(back.images, f.images);

  std::istringstream missing("{\"m\":2}\n0 1\n1 0\n2 3\n");
  EXPECT_THROW(read_perm_table(missing), std::invalid_argument);
  std::istringstream repeated("{\"m\":1}\n0 1\n0 0\n");
  EXPECT_THROW(read_perm_table(repeated), std::invalid_argument);
  std::istringstream bad_header("m=2\n");
  EXPECT_THROW(read_perm_table(bad_header), std::invalid_argument);
  std::istringstream junk("{\"m\":1}\n0 1 2\n1 0\n");
  EXPECT_THROW(read_perm_table(junk), std::invalid_argument);
}
