// Lookup-table functions F -> F.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace goldpart {

class Gold;

struct PermTable {
  int m = 0;
  std::vector<std::uint32_t> images;  // images[x] = f(x)

  std::uint32_t size() const { return std::uint32_t{1} << m; }
  std::uint32_t operator()(std::uint32_t x) const { return images[x]; }

  /// Every image in range and the image multiset equals F.
  bool is_bijective() const;

  static PermTable identity(int m);
  static PermTable gold(const Gold& gold);
  static PermTable random(int m, std::mt19937_64& rng);
};

/// Throws std::invalid_argument unless f is a permutation of GF(2^m).
void require_bijective(const PermTable& f);

/// Text format: a JSON header line {"m": <m>} followed by 2^m lines
/// "<x_hex> <image_hex>" (lowercase, no prefix). Lines may come in any
/// order but every x must appear exactly once.
void write_perm_table(std::ostream& out, const PermTable& f);
PermTable read_perm_table(std::istream& in);

}  // namespace goldpart
