#include "goldpart/codes.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace goldpart {
namespace {

// Row {x : bit j of value(x) is 1} for each bit j, where value(x) = table[x ^ shift].
void append_bit_rows(AffineCodeSpec& spec, int m, std::span<const std::uint32_t> table, std::uint32_t shift,
                     std::uint32_t target_word) {
  const std::uint32_t n = std::uint32_t{1} << m;
  for (int j = 0; j < m; ++j) {
    SubsetVec row(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      if ((table[x ^ shift] >> j) & 1u) row.set(x);
    }
    spec.rows.push_back(std::move(row));
    spec.targets.push_back((target_word >> j) & 1u);
  }
}

void append_parity_row(AffineCodeSpec& spec, int m, bool p) {
  spec.rows.push_back(SubsetVec::all(std::size_t{1} << m));
  spec.targets.push_back(p ? 1 : 0);
}

std::vector<std::uint32_t> identity_values(int m) { return PermTable::identity(m).images; }

}  // namespace

bool AffineCodeSpec::contains(const SubsetVec& x) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dot(x) != (targets[i] != 0)) return false;
  }
  return true;
}

bool AffineCodeSpec::is_linear() const {
  return std::all_of(targets.begin(), targets.end(), [](std::uint8_t t) { return t == 0; });
}

AffineCodeSpec build_H_alpha_p(FieldElement alpha, bool p, const Gold& gold) {
  AffineCodeSpec spec;
  spec.label = "H_alpha_p";
  spec.alpha = alpha.value();
  spec.beta_or_p = p ? 1 : 0;
  append_parity_row(spec, gold.m(), p);
  append_bit_rows(spec, gold.m(), gold.map_table(), alpha.value(), 0);
  return spec;
}

AffineCodeSpec build_H_alpha_beta(FieldElement alpha, FieldElement beta, const Gold& gold) {
  AffineCodeSpec spec;
  spec.label = "H_alpha_beta";
  spec.alpha = alpha.value();
  spec.beta_or_p = beta.value();
  append_parity_row(spec, gold.m(), true);
  append_bit_rows(spec, gold.m(), gold.map_table(), alpha.value(), gold.map(beta).value());
  return spec;
}

AffineCodeSpec build_H(const Gold& gold) {
  AffineCodeSpec spec;
  spec.label = "H";
  append_parity_row(spec, gold.m(), false);
  const auto ident = identity_values(gold.m());
  append_bit_rows(spec, gold.m(), ident, 0, 0);
  return spec;
}

AffineCodeSpec build_B(const Gold& gold) {
  AffineCodeSpec spec = build_H(gold);
  spec.label = "B";
  append_bit_rows(spec, gold.m(), gold.map_table(), 0, 0);
  return spec;
}

AffineCodeSpec build_from_table(const PermTable& f, FieldElement alpha, bool p) {
  require_bijective(f);
  if (alpha.value() >= f.size()) throw std::invalid_argument("alpha outside GF(2^m)");
  AffineCodeSpec spec;
  spec.label = "H_f_alpha_p";
  spec.alpha = alpha.value();
  spec.beta_or_p = p ? 1 : 0;
  append_parity_row(spec, f.m, p);
  append_bit_rows(spec, f.m, f.images, alpha.value(), 0);
  return spec;
}

AffineCodeSpec stack(const AffineCodeSpec& a, const AffineCodeSpec& b) {
  AffineCodeSpec out = a;
  out.label = a.label + "+" + b.label;
  out.alpha.reset();
  out.beta_or_p.reset();
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  out.targets.insert(out.targets.end(), b.targets.begin(), b.targets.end());
  return out;
}

std::size_t rank(const std::vector<SubsetVec>& rows) {
  AffineCodeSpec spec;
  spec.rows = rows;
  spec.targets.assign(rows.size(), 0);
  return EchelonSystem(spec).rank();
}

EchelonSystem::EchelonSystem(const AffineCodeSpec& spec) : length_(spec.length()) {
  std::vector<SubsetVec> rows = spec.rows;
  std::vector<std::uint8_t> targets = spec.targets;
  std::size_t next = 0;
  for (std::size_t col = 0; col < length_ && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    std::swap(targets[pivot], targets[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(col)) {
        rows[r] ^= rows[next];
        targets[r] ^= targets[next];
      }
    }
    pivots_.push_back(col);
    ++next;
  }
  // Remaining rows are zero; any with target 1 reads 0 = 1.
  for (std::size_t r = next; r < rows.size(); ++r) {
    if (targets[r] != 0) feasible_ = false;
  }
  rows.resize(next);
  targets.resize(next);
  rows_ = std::move(rows);
  targets_ = std::move(targets);
}

SubsetVec EchelonSystem::complete(SubsetVec x) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) x.reset(pivots_[i]);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    // Pivot columns of other rows are zero in RREF, so only free bits matter.
    if (rows_[i].dot(x) != (targets_[i] != 0)) x.set(pivots_[i]);
  }
  return x;
}

SubsetVec EchelonSystem::particular() const {
  if (!feasible_) throw std::logic_error("particular solution of an infeasible system");
  return complete(SubsetVec(length_));
}

SubsetVec EchelonSystem::sample(std::mt19937_64& rng) const {
  if (!feasible_) throw std::logic_error("sampling an infeasible system");
  SubsetVec x(length_);
  auto words = x.words();
  for (auto& w : words) w = rng();
  if (length_ % 64 != 0) words.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
  return complete(std::move(x));
}

std::optional<Solution> solve_affine(const AffineCodeSpec& spec) {
  EchelonSystem system(spec);
  if (!system.feasible()) return std::nullopt;
  return Solution{system.particular(), system.nullity()};
}

std::optional<std::size_t> cardinality_log2(const AffineCodeSpec& spec) {
  EchelonSystem system(spec);
  if (!system.feasible()) return std::nullopt;
  return system.nullity();
}

std::optional<std::vector<std::uint32_t>> min_weight_at_most(const AffineCodeSpec& spec, int limit) {
  if (!spec.is_linear()) throw std::invalid_argument("minimum-weight search needs a linear code (zero targets)");
  if (spec.rows.size() > 64) throw std::invalid_argument("minimum-weight search supports at most 64 rows");
  if (limit < 1) return std::nullopt;

  const std::size_t n = spec.length();
  std::vector<std::uint64_t> syndrome(n, 0);
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    for (std::uint32_t x : spec.rows[r].elements()) syndrome[x] |= std::uint64_t{1} << r;
  }
  // Columns grouped by syndrome, ascending, so the last support element can
  // be looked up instead of enumerated.
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_syndrome;
  for (std::uint32_t x = 0; x < n; ++x) by_syndrome[syndrome[x]].push_back(x);

  std::vector<std::uint32_t> support;
  std::function<bool(std::size_t, std::uint32_t, std::uint64_t)> extend =
      [&](std::size_t remaining, std::uint32_t first, std::uint64_t partial) -> bool {
    if (remaining == 1) {
      auto it = by_syndrome.find(partial);
      if (it == by_syndrome.end()) return false;
      auto pos = std::lower_bound(it->second.begin(), it->second.end(), first);
      if (pos == it->second.end()) return false;
      support.push_back(*pos);
      return true;
    }
    for (std::uint32_t x = first; x + remaining <= n; ++x) {
      support.push_back(x);
      if (extend(remaining - 1, x + 1, partial ^ syndrome[x])) return true;
      support.pop_back();
    }
    return false;
  };
  for (int weight = 1; weight <= limit; ++weight) {
    support.clear();
    if (extend(static_cast<std::size_t>(weight), 0, 0)) return support;
  }
  return std::nullopt;
}

void write_matrix(std::ostream& out, const AffineCodeSpec& spec, const GoldParams& params) {
  nlohmann::ordered_json header;
  header["m"] = params.m;
  header["s"] = params.s;
  header["label"] = spec.label;
  header["alpha"] = spec.alpha ? nlohmann::ordered_json(*spec.alpha) : nlohmann::ordered_json(nullptr);
  header["beta_or_p"] = spec.beta_or_p ? nlohmann::ordered_json(*spec.beta_or_p) : nlohmann::ordered_json(nullptr);
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    out << spec.rows[i].to_hex() << ' ' << static_cast<int>(spec.targets[i]) << '\n';
  }
}

}  // namespace goldpart
