#include "goldpart/squares.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace goldpart {
namespace {

// inverse[z * n + c] = the unique v with c(z, v) = c.
std::vector<std::uint16_t> invert_rows(const ColorTable& table) {
  const std::uint32_t n = table.size();
  std::vector<std::uint16_t> inverse(std::size_t{n} * n, ColorTable::kNone);
  for (std::uint32_t z = 0; z < n; ++z) {
    const auto row = table.row(z);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (v == z) continue;
      std::uint16_t& slot = inverse[std::size_t{z} * n + row[v]];
      if (slot != ColorTable::kNone) throw std::logic_error("two 2-flips sharing a point have the same color");
      slot = static_cast<std::uint16_t>(v);
    }
  }
  return inverse;
}

struct DiagonalTally {
  std::uint64_t hits = 0;
  std::uint64_t degenerate = 0;
};

// All ordered (y, v) completing diagonal {x, z} to a two-color square.
template <typename OnSquare>
DiagonalTally scan_diagonal(const ColorTable& table, std::span<const std::uint16_t> inverse_z, std::uint32_t x,
                            std::uint32_t z, OnSquare&& on_square) {
  const std::uint32_t n = table.size();
  const auto cx = table.row(x);
  const auto cz = table.row(z);
  DiagonalTally t;
  for (std::uint32_t y = 0; y < n; ++y) {
    if (y == x || y == z) continue;
    const std::uint32_t v = inverse_z[cx[y]];
    if (v == ColorTable::kNone || v == x || v == y) {
      ++t.degenerate;
      continue;
    }
    if (cx[v] == cz[y]) {
      ++t.hits;
      on_square(y, v);
    }
  }
  return t;
}

void require_degree(const Gold& gold, int max_m, const char* what) {
  if (gold.m() > max_m) {
    throw BudgetExceeded(std::string(what) + " is limited to m <= " + std::to_string(max_m) + ", got m = " +
                         std::to_string(gold.m()));
  }
}

}  // namespace

std::vector<std::uint64_t> ColorTable::class_sizes() const {
  std::vector<std::uint64_t> sizes(n_, 0);
  for (std::uint32_t x = 0; x < n_; ++x) {
    for (std::uint32_t y = x + 1; y < n_; ++y) ++sizes[at(x, y)];
  }
  return sizes;
}

ColorTable build_color_table(const SubsetVec& x, const Gold& gold) {
  require_degree(gold, ColorTable::kMaxDegree, "the color table");
  ColorTable table;
  table.base_color_ = gold.color(x);
  table.base_ = x;
  const std::uint32_t n = gold.size();
  table.n_ = n;
  table.colors_.assign(std::size_t{n} * n, ColorTable::kNone);
  const PowerSums sums = gold.sums(x);
  const auto map = gold.map_table();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      // Flipping a and b changes Σ x by a + b and Σ x^(σ+1) by the two maps.
      const FieldElement linear(sums.linear.value() ^ a ^ b);
      const FieldElement gold_sum(sums.gold.value() ^ map[a] ^ map[b]);
      const auto c = static_cast<std::uint16_t>(gold.color(linear, gold_sum).value());
      table.colors_[std::size_t{a} * n + b] = c;
      table.colors_[std::size_t{b} * n + a] = c;
    }
  }
  return table;
}

std::uint64_t count_two_color_squares(const ColorTable& table, unsigned threads) {
  const std::uint32_t n = table.size();
  const std::vector<std::uint16_t> inverse = invert_rows(table);
  threads = std::clamp(threads, 1u, n);

  std::atomic<std::uint32_t> next{0};
  std::vector<DiagonalTally> partial(threads);
  auto worker = [&](unsigned id) {
    DiagonalTally local;
    for (std::uint32_t x = next++; x < n; x = next++) {
      for (std::uint32_t z = x + 1; z < n; ++z) {
        const std::span<const std::uint16_t> inverse_z(inverse.data() + std::size_t{z} * n, n);
        const DiagonalTally t = scan_diagonal(table, inverse_z, x, z, [](std::uint32_t, std::uint32_t) {});
        local.hits += t.hits;
        local.degenerate += t.degenerate;
      }
    }
    partial[id] = local;
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
    worker(0);
  }

  DiagonalTally total;
  for (const auto& t : partial) {
    total.hits += t.hits;
    total.degenerate += t.degenerate;
  }
  if (total.degenerate != 0) {
    throw std::logic_error("forced square partner collided " + std::to_string(total.degenerate) + " times");
  }
  if (total.hits % 4 != 0) throw std::logic_error("square tally is not a multiple of 4");
  return total.hits / 4;
}

std::uint64_t count_two_color_squares(const SubsetVec& x, const Gold& gold, const SquareOptions& options) {
  if (gold.m() > 11) {
    throw BudgetExceeded("counting squares for m = " + std::to_string(gold.m()) + " is out of budget (m <= 11)");
  }
  if (gold.m() > 9 && !options.allow_long) {
    throw BudgetExceeded("counting squares for m = " + std::to_string(gold.m()) + " needs the long-run flag");
  }
  return count_two_color_squares(build_color_table(x, gold), options.threads);
}

std::uint64_t equal_color_pair_count(const SubsetVec& x, const Gold& gold) {
  require_degree(gold, 9, "the equal-color pair count");
  std::uint64_t total = 0;
  for (std::uint64_t k : build_color_table(x, gold).class_sizes()) total += k > 1 ? k * (k - 1) / 2 : 0;
  return total;
}

std::uint64_t expected_equal_color_pairs(int m) {
  const std::uint64_t n = std::uint64_t{1} << m;
  return (n - 1) * (n / 2 - 1) * (n / 4);
}

OctahedronResult octahedron_check(const SubsetVec& x, const Gold& gold) {
  require_degree(gold, 7, "the octahedron check");
  const ColorTable table = build_color_table(x, gold);
  const std::uint32_t n = table.size();
  const std::vector<std::uint16_t> inverse = invert_rows(table);
  OctahedronResult result;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t c = a + 1; c < n; ++c) {
      const std::span<const std::uint16_t> inverse_c(inverse.data() + std::size_t{c} * n, n);
      // Keep each square once: a is its smallest point and y < v.
      scan_diagonal(table, inverse_c, a, c, [&](std::uint32_t y, std::uint32_t v) {
        if (y < a || v < a || y > v) return;
        ++result.squares;
        if (table.at(a, c) == table.at(y, v)) result.violations.push_back({a, y, c, v});
      });
    }
  }
  return result;
}

}  // namespace goldpart
