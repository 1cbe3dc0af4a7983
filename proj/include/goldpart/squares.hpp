// Two-color squares around a vertex: the invariant Q that separates the
// s-classes, the equal-color pair count D, and the octahedron check.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "goldpart/errors.hpp"
#include "goldpart/gold.hpp"
#include "goldpart/subsets.hpp"

namespace goldpart {

/// Colors c(x, y) = α(X △ {x, y}) of all 2-flips of a fixed odd vertex X,
/// stored as a dense symmetric n x n matrix (diagonal unused).
class ColorTable {
 public:
  static constexpr std::uint16_t kNone = 0xffff;
  static constexpr int kMaxDegree = 11;

  std::uint32_t size() const { return n_; }
  const SubsetVec& base() const { return base_; }
  FieldElement base_color() const { return base_color_; }

  std::uint16_t at(std::uint32_t x, std::uint32_t y) const { return colors_[std::size_t{x} * n_ + y]; }
  std::span<const std::uint16_t> row(std::uint32_t x) const {
    return {colors_.data() + std::size_t{x} * n_, n_};
  }
  /// Number of unordered pairs {x, y}: n(n-1)/2.
  std::uint64_t entry_count() const { return std::uint64_t{n_} * (n_ - 1) / 2; }
  /// Per color, the number of unordered pairs with that color.
  std::vector<std::uint64_t> class_sizes() const;

 private:
  friend ColorTable build_color_table(const SubsetVec& x, const Gold& gold);
  std::uint32_t n_ = 0;
  SubsetVec base_;
  FieldElement base_color_;
  std::vector<std::uint16_t> colors_;
};

/// Throws std::invalid_argument for even X and BudgetExceeded for m > 11.
ColorTable build_color_table(const SubsetVec& x, const Gold& gold);

struct SquareOptions {
  unsigned threads = 1;
  bool allow_long = false;  // permit m = 11
};

/// Q for a prebuilt table. For each unordered diagonal {x, z} and each
/// y, the partner v is forced: c(z, v) = c(x, y) has exactly one solution
/// because distinct 2-flips sharing a point get distinct colors. The
/// square counts when c(v, x) = c(y, z). Each square is seen from both
/// diagonals in both orientations, so the total is divided by 4.
/// Throws std::logic_error if a forced partner ever collides with x, y or z.
std::uint64_t count_two_color_squares(const ColorTable& table, unsigned threads = 1);

/// Budget-checked wrapper: m <= 9 always, m = 11 with allow_long, larger
/// m refused with BudgetExceeded.
std::uint64_t count_two_color_squares(const SubsetVec& x, const Gold& gold, const SquareOptions& options = {});

/// Unordered pairs of distinct 2-subsets with equal colors. m <= 9.
std::uint64_t equal_color_pair_count(const SubsetVec& x, const Gold& gold);

/// (2^m - 1)(2^(m-1) - 1) 2^(m-2).
std::uint64_t expected_equal_color_pairs(int m);

/// A square as its cycle (x, y, z, v): edges xy, yz, zv, vx.
using Square = std::array<std::uint32_t, 4>;

struct OctahedronResult {
  std::uint64_t squares = 0;
  std::vector<Square> violations;  // squares with c(x, z) == c(y, v)
};

/// Enumerates every two-color square once and checks its diagonals get
/// different colors. m <= 7.
OctahedronResult octahedron_check(const SubsetVec& x, const Gold& gold);

}  // namespace goldpart
