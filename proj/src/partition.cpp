#include "goldpart/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace goldpart {
namespace {

std::string describe(const SubsetVec& x) { return "X=" + x.to_hex(); }

SubsetVec subset_from_mask(int m, std::uint64_t mask) {
  SubsetVec x = SubsetVec::for_field(m);
  x.words()[0] = mask;
  return x;
}

FieldElement random_element(const Gold& gold, std::mt19937_64& rng) {
  return FieldElement(static_cast<std::uint32_t>(rng() % gold.size()));
}

void exhaustive_scan(const PartitionHandle& h, PartitionReport& report) {
  const Gold& gold = h.gold();
  const int m = gold.m();
  std::vector<AffineCodeSpec> cells;
  for (std::uint32_t a = 0; a < h.cell_count(); ++a) cells.push_back(h.cell(FieldElement(a)));
  std::vector<std::size_t> cell_sizes(cells.size(), 0);
  const std::uint64_t total = std::uint64_t{1} << gold.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const SubsetVec x = subset_from_mask(m, mask);
    std::vector<std::uint32_t> hits;
    for (std::uint32_t a = 0; a < cells.size(); ++a) {
      if (cells[a].contains(x)) hits.push_back(a);
    }
    for (std::uint32_t a : hits) ++cell_sizes[a];
    if (!x.parity()) {
      if (!hits.empty()) report.failures.push_back("even subset in a cell: " + describe(x));
      continue;
    }
    if (hits.size() != 1) {
      report.failures.push_back("odd subset in " + std::to_string(hits.size()) + " cells: " + describe(x));
    } else if (gold.color(x).value() != hits.front()) {
      report.failures.push_back("color formula disagrees with membership: " + describe(x));
    }
  }
  const std::size_t expected = std::size_t{1} << report.cell_size_log2;
  for (std::uint32_t a = 0; a < cells.size(); ++a) {
    if (cell_sizes[a] != expected) {
      report.failures.push_back("cell " + std::to_string(a) + " has " + std::to_string(cell_sizes[a]) +
                                " members, expected " + std::to_string(expected));
    }
  }
}

}  // namespace

SubsetVec random_odd_subset(const Gold& gold, std::mt19937_64& rng) {
  SubsetVec x = SubsetVec::for_field(gold.m());
  auto words = x.words();
  for (auto& w : words) w = rng();
  if (x.length() < 64) words[0] &= (std::uint64_t{1} << x.length()) - 1;
  // Flipping one fixed bit is a bijection from even to odd subsets.
  if (!x.parity()) x.flip(0);
  return x;
}

PartitionReport verify_partition(const PartitionHandle& h, VerifyMode mode, std::size_t samples,
                                 std::mt19937_64& rng) {
  const Gold& gold = h.gold();
  const int m = gold.m();
  PartitionReport report;
  report.m = m;
  report.s = gold.params().s;
  report.mode = mode;
  report.cell_size_log2 = gold.size() - static_cast<std::size_t>(m) - 1;

  auto check_rank = [&](FieldElement alpha, const AffineCodeSpec& cell) {
    const auto log2 = cardinality_log2(cell);
    if (!log2 || *log2 != report.cell_size_log2) {
      report.failures.push_back("cell " + std::to_string(alpha.value()) + " has the wrong cardinality");
    }
  };

  if (mode == VerifyMode::exhaustive) {
    if (m != 3) throw std::invalid_argument("exhaustive partition verification is only available for m = 3");
    report.samples = std::size_t{1} << gold.size();
    for (std::uint32_t a = 0; a < h.cell_count(); ++a) check_rank(FieldElement(a), h.cell(FieldElement(a)));
    exhaustive_scan(h, report);
    for (auto& f : check_punctured_cells(gold)) report.failures.push_back("punctured: " + f);
    report.punctured = true;
    return report;
  }

  report.samples = samples;
  if (m <= 9) {
    for (std::uint32_t a = 0; a < h.cell_count(); ++a) check_rank(FieldElement(a), h.cell(FieldElement(a)));
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const SubsetVec x = random_odd_subset(gold, rng);
    const FieldElement alpha = gold.color(x);
    const AffineCodeSpec home = h.cell(alpha);
    if (!home.contains(x)) report.failures.push_back("not in its color cell: " + describe(x));
    if (m > 9) check_rank(alpha, home);
    for (int k = 0; k < 8; ++k) {
      FieldElement other = random_element(gold, rng);
      if (other == alpha) other = other + FieldElement(1);
      if (h.cell(other).contains(x)) {
        report.failures.push_back("also in cell " + std::to_string(other.value()) + ": " + describe(x));
      }
    }
  }
  return report;
}

SubsetVec puncture(const SubsetVec& x) {
  if (x.length() == 0) throw std::invalid_argument("cannot puncture an empty vector");
  SubsetVec out(x.length() - 1);
  for (std::uint32_t e : x.elements()) {
    if (e != 0) out.set(e - 1);
  }
  return out;
}

SubsetVec unpuncture(const SubsetVec& y) {
  SubsetVec out(y.length() + 1);
  for (std::uint32_t e : y.elements()) out.set(e + 1);
  if (!out.parity()) out.set(0);
  return out;
}

std::vector<std::string> check_punctured_cells(const Gold& gold) {
  if (gold.m() != 3) throw std::invalid_argument("punctured-cell enumeration is only available for m = 3");
  const std::uint32_t n = gold.size();
  std::map<std::uint32_t, std::vector<std::uint64_t>> cells;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const SubsetVec x = subset_from_mask(gold.m(), mask);
    if (!x.parity()) continue;
    const SubsetVec y = puncture(x);
    if (unpuncture(y) != x) return {"puncturing is not invertible on odd subsets"};
    cells[gold.color(x).value()].push_back(y.words()[0]);
  }

  std::vector<std::string> failures;
  const std::size_t expected = std::size_t{1} << (n - 1 - gold.m());
  std::set<std::uint64_t> covered;
  for (const auto& [alpha, words] : cells) {
    const std::string tag = "cell " + std::to_string(alpha);
    if (words.size() != expected) failures.push_back(tag + " has " + std::to_string(words.size()) + " words");
    std::set<std::uint64_t> diffs;
    for (std::uint64_t w : words) {
      covered.insert(w);
      diffs.insert(w ^ words.front());
    }
    const bool closed = std::all_of(diffs.begin(), diffs.end(), [&](std::uint64_t a) {
      return std::all_of(diffs.begin(), diffs.end(), [&](std::uint64_t b) { return diffs.contains(a ^ b); });
    });
    if (!closed) failures.push_back(tag + " is not a coset of a linear code");
    for (std::uint64_t d : diffs) {
      if (d != 0 && std::popcount(d) < 3) {
        failures.push_back(tag + " has minimum distance below 3");
        break;
      }
    }
  }
  if (cells.size() != n) failures.push_back("expected " + std::to_string(n) + " punctured cells");
  if (covered.size() != (std::size_t{1} << (n - 1))) failures.push_back("punctured cells do not cover the cube");
  return failures;
}

SubsetVec nearest_codeword(const SubsetVec& x, const Gold& gold) {
  const PowerSums sums = gold.sums(x);
  if (!sums.odd) throw std::invalid_argument("nearest codeword is defined for odd-cardinality subsets");
  SubsetVec y = x;
  y.flip(sums.linear.value());
  return y;
}

CoincidenceReport coincidence_check(const GoldParams& params, std::size_t samples, std::mt19937_64& rng) {
  const Gold a(params);
  const Gold b(make_params(params.m, params.m - params.s, params.modulus.poly));
  CoincidenceReport report;
  report.m = params.m;
  report.s = params.s;
  report.s_mirror = params.m - params.s;

  auto compare = [&](const SubsetVec& x) {
    if (a.color(x) != b.color(x)) report.failures.push_back("colors differ: X=" + x.to_hex());
  };
  if (params.m == 3) {
    report.mode = VerifyMode::exhaustive;
    report.samples = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
      const SubsetVec x = subset_from_mask(3, mask);
      if (!x.parity()) continue;
      compare(x);
      ++report.samples;
    }
  } else {
    report.mode = VerifyMode::sampled;
    report.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) compare(random_odd_subset(a, rng));
  }

  // The codes H_α^0 coincide as row spaces, and sampled members transfer.
  const std::size_t code_checks = std::min<std::size_t>(std::max<std::size_t>(samples / 10, 8), 64);
  for (std::size_t i = 0; i < code_checks; ++i) {
    const FieldElement alpha = random_element(a, rng);
    const AffineCodeSpec ca = build_H_alpha_p(alpha, false, a);
    const AffineCodeSpec cb = build_H_alpha_p(alpha, false, b);
    if (rank(stack(ca, cb).rows) != rank(ca.rows)) {
      report.failures.push_back("H_alpha^0 row spaces differ at alpha=" + std::to_string(alpha.value()));
    }
    const SubsetVec xa = EchelonSystem(ca).sample(rng);
    const SubsetVec xb = EchelonSystem(cb).sample(rng);
    if (!cb.contains(xa) || !ca.contains(xb)) {
      report.failures.push_back("membership differs at alpha=" + std::to_string(alpha.value()));
    }
  }
  return report;
}

std::optional<SubsetVec> find_color_difference(const Gold& a, const Gold& b, std::size_t attempts,
                                               std::mt19937_64& rng) {
  if (a.m() != b.m()) throw std::invalid_argument("color comparison needs equal field degree");
  for (std::size_t i = 0; i < attempts; ++i) {
    SubsetVec x = random_odd_subset(a, rng);
    if (a.color(x) != b.color(x)) return x;
  }
  return std::nullopt;
}

}  // namespace goldpart
