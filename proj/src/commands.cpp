#include "goldpart/commands.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "goldpart/codes.hpp"
#include "goldpart/crooked.hpp"
#include "goldpart/errors.hpp"
#include "goldpart/partition.hpp"
#include "goldpart/squares.hpp"
#include "goldpart/symmetry.hpp"

namespace goldpart {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxListedFailures = 10;

Json header(const char* command) {
  Json j;
  j["tool"] = "goldpart";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

const char* mode_name(VerifyMode mode) { return mode == VerifyMode::exhaustive ? "exhaustive" : "sampled"; }

struct Check {
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ++failure_count;
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(what));
  }
  bool passed() const { return failure_count == 0; }
  Json to_json() const {
    Json j;
    j["name"] = name;
    j["passed"] = passed();
    j["instances"] = instances;
    j["failure_count"] = failure_count;
    j["failures"] = failures;
    return j;
  }
};

FieldElement random_element(const Gold& gold, std::mt19937_64& rng) {
  return FieldElement(static_cast<std::uint32_t>(rng() % gold.size()));
}

// Pairs α != β: all of them for m = 3, else `count` random ones.
std::vector<std::pair<FieldElement, FieldElement>> alpha_pairs(const Gold& gold, std::size_t count,
                                                               std::mt19937_64& rng) {
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  if (gold.m() == 3) {
    for (std::uint32_t a = 0; a < gold.size(); ++a) {
      for (std::uint32_t b = a + 1; b < gold.size(); ++b) pairs.emplace_back(FieldElement(a), FieldElement(b));
    }
    return pairs;
  }
  while (pairs.size() < count) {
    const FieldElement a = random_element(gold, rng), b = random_element(gold, rng);
    if (a != b) pairs.emplace_back(a, b);
  }
  return pairs;
}

Check check_field(const Gold& gold, std::size_t samples, std::mt19937_64& rng) {
  Check c{"field_frobenius_additive"};
  const Field& f = gold.field();
  const std::uint32_t sigma = gold.params().sigma;
  for (std::size_t i = 0; i < samples; ++i) {
    const FieldElement a = random_element(gold, rng), b = random_element(gold, rng);
    ++c.instances;
    if (f.pow(a + b, sigma) != f.pow(a, sigma) + f.pow(b, sigma)) c.fail("a=" + std::to_string(a.value()));
  }
  return c;
}

Check check_gold_map(const Gold& gold) {
  Check c{"gold_map_bijective_no_sigma_roots"};
  const Field& f = gold.field();
  const std::uint32_t sigma = gold.params().sigma;
  std::vector<bool> plus(gold.size(), false), minus(gold.size(), false);
  for (std::uint32_t v = 0; v < gold.size(); ++v) {
    const FieldElement x(v);
    ++c.instances;
    plus[gold.map(x).value()] = true;
    minus[f.pow(x, sigma - 1).value()] = true;
    if (gold.root(gold.map(x)) != x) c.fail("root(map(x)) != x at x=" + std::to_string(v));
    if ((f.pow(x, sigma) + x + FieldElement(1)).is_zero()) c.fail("x^sigma + x + 1 = 0 at x=" + std::to_string(v));
  }
  if (std::find(plus.begin(), plus.end(), false) != plus.end()) c.fail("x^(sigma+1) is not a bijection");
  if (std::find(minus.begin(), minus.end(), false) != minus.end()) c.fail("x^(sigma-1) is not a bijection");
  return c;
}

std::pair<Check, Check> check_cell_pairs(const Gold& gold, std::size_t pair_count, std::mt19937_64& rng) {
  Check disjoint{"odd_cells_disjoint"};
  Check intersect{"even_cells_minimal_intersection"};
  const std::size_t expected_rank = 2 * static_cast<std::size_t>(gold.m());
  for (const auto& [a, b] : alpha_pairs(gold, pair_count, rng)) {
    const std::string tag = "alpha=" + std::to_string(a.value()) + " beta=" + std::to_string(b.value());
    ++disjoint.instances;
    if (solve_affine(stack(build_H_alpha_p(a, true, gold), build_H_alpha_p(b, true, gold)))) disjoint.fail(tag);
    ++intersect.instances;
    const AffineCodeSpec both = stack(build_H_alpha_p(a, false, gold), build_H_alpha_p(b, false, gold));
    const auto log2 = cardinality_log2(both);
    if (rank(both.rows) != expected_rank || !log2 || *log2 != gold.size() - expected_rank) intersect.fail(tag);
  }
  return {disjoint, intersect};
}

Check check_code_B(const Gold& gold, bool long_run) {
  Check c{"code_B_rank_and_distance"};
  const AffineCodeSpec b = build_B(gold);
  const std::size_t m = static_cast<std::size_t>(gold.m());
  ++c.instances;
  if (rank(b.rows) != 2 * m + 1) c.fail("rank of B is " + std::to_string(rank(b.rows)));
  const auto log2 = cardinality_log2(b);
  if (!log2 || *log2 != gold.size() - 2 * m - 1) c.fail("|B| is not 2^(2^m-2m-1)");
  if (gold.m() == 5 || (gold.m() == 7 && long_run)) {
    ++c.instances;
    if (auto w = min_weight_at_most(b, 5)) c.fail("B has a codeword of weight " + std::to_string(w->size()));
  }
  return c;
}

Check check_colors(const Gold& gold, std::size_t samples, std::mt19937_64& rng) {
  Check c{"color_membership"};
  const AffineCodeSpec h = build_H(gold);
  for (std::size_t i = 0; i < samples; ++i) {
    const SubsetVec x = random_odd_subset(gold, rng);
    const FieldElement alpha = gold.color(x);
    ++c.instances;
    if (!build_H_alpha_p(alpha, true, gold).contains(x)) c.fail("X=" + x.to_hex() + " not in its color cell");
    const SubsetVec y = nearest_codeword(x, gold);
    if (!h.contains(y)) c.fail("X=" + x.to_hex() + ": X + {sum} not in H");
    const std::uint32_t s = gold.sums(x).linear.value();
    for (int k = 0; k < 4; ++k) {
      auto e = static_cast<std::uint32_t>(rng() % gold.size());
      if (e == s) continue;
      SubsetVec z = x;
      z.flip(e);
      if (h.contains(z)) c.fail("X=" + x.to_hex() + " has a second neighbour in H");
    }
  }
  return c;
}

// m = 3: brute-force solution counts against 2^(n - rank) for every spec.
Check check_brute_force(const Gold& gold) {
  Check c{"brute_force_counts"};
  std::vector<AffineCodeSpec> specs = {build_H(gold), build_B(gold)};
  for (std::uint32_t a = 0; a < gold.size(); ++a) {
    for (bool p : {false, true}) specs.push_back(build_H_alpha_p(FieldElement(a), p, gold));
    for (std::uint32_t b = a + 1; b < gold.size(); ++b) {
      for (bool p : {false, true}) {
        specs.push_back(stack(build_H_alpha_p(FieldElement(a), p, gold), build_H_alpha_p(FieldElement(b), p, gold)));
      }
    }
  }
  for (const auto& spec : specs) {
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gold.size()); ++mask) {
      SubsetVec x = SubsetVec::for_field(gold.m());
      x.words()[0] = mask;
      if (spec.contains(x)) ++count;
    }
    const auto log2 = cardinality_log2(spec);
    const std::size_t predicted = log2 ? std::size_t{1} << *log2 : 0;
    ++c.instances;
    if (count != predicted) c.fail(spec.label + ": counted " + std::to_string(count));
  }
  return c;
}

Gold make_gold(const RunConfig& config) { return Gold(make_params(config.m, config.s, config.modulus)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SubsetVec representative(const RunConfig& config, const Gold& gold) {
  if (config.rep == "zero") return canonical_reps(gold).zero_class;
  if (config.rep == "nonzero") return canonical_reps(gold).nonzero_class;
  if (config.rep.starts_with("hex:")) return parse_subset(gold.m(), config.rep);
  throw std::invalid_argument("--rep must be zero, nonzero or hex:<subset>");
}

PermTable load_table(const RunConfig& config, const Gold& gold) {
  if (config.table == "gold") return PermTable::gold(gold);
  if (config.table == "identity") return PermTable::identity(gold.m());
  if (config.table == "random") {
    std::mt19937_64 rng(config.seed);
    return PermTable::random(gold.m(), rng);
  }
  std::ifstream in(config.table);
  if (!in) throw std::invalid_argument("cannot open permutation table '" + config.table + "'");
  PermTable f = read_perm_table(in);
  if (f.m != gold.m()) throw std::invalid_argument("table degree does not match --m");
  return f;
}

}  // namespace

std::size_t default_samples(int m) { return m <= 9 ? 1000 : 200; }

nlohmann::ordered_json params_json(const GoldParams& p) {
  Json j;
  j["m"] = p.m;
  j["s"] = p.s;
  j["sigma_plus_1"] = p.sigma_plus_1();
  j["modulus_hex"] = to_hex(p.modulus.poly);
  j["d"] = p.d;
  return j;
}

CommandResult cmd_verify(const RunConfig& config) {
  const Gold gold = make_gold(config);
  VerifyMode mode;
  if (config.mode == "exhaustive") {
    mode = VerifyMode::exhaustive;
    if (gold.m() != 3) throw std::invalid_argument("exhaustive verification is only available for m = 3");
  } else if (config.mode == "sampled") {
    mode = VerifyMode::sampled;
  } else {
    throw std::invalid_argument("--mode must be sampled or exhaustive");
  }
  const std::size_t samples = config.samples.value_or(default_samples(config.m));
  std::mt19937_64 rng(config.seed);

  std::vector<Check> checks;
  checks.push_back(check_field(gold, samples, rng));
  checks.push_back(check_gold_map(gold));
  auto [disjoint, intersect] = check_cell_pairs(gold, 50, rng);
  checks.push_back(std::move(disjoint));
  checks.push_back(std::move(intersect));
  checks.push_back(check_code_B(gold, config.long_run));

  const PartitionReport partition = verify_partition(PartitionHandle(gold), mode, samples, rng);
  Check part{"partition"};
  part.instances = partition.samples;
  for (const auto& f : partition.failures) part.fail(f);
  checks.push_back(std::move(part));

  checks.push_back(check_colors(gold, samples, rng));
  for (const IsometryCheck& r : verify_isometry_images(gold, samples, rng)) {
    Check c{r.name};
    c.instances = r.samples;
    c.failure_count = r.failures;
    checks.push_back(std::move(c));
  }
  const CoincidenceReport coincide = coincidence_check(gold.params(), samples, rng);
  Check co{"coincidence_s_mirror"};
  co.instances = coincide.samples;
  for (const auto& f : coincide.failures) co.fail(f);
  checks.push_back(std::move(co));
  if (mode == VerifyMode::exhaustive) checks.push_back(check_brute_force(gold));

  Json j = header("verify");
  j["params"] = params_json(gold.params());
  j["seed"] = config.seed;
  j["mode"] = mode_name(mode);
  j["samples"] = samples;
  Json partition_json;
  partition_json["m"] = partition.m;
  partition_json["s"] = partition.s;
  partition_json["mode"] = mode_name(partition.mode);
  partition_json["samples"] = partition.samples;
  partition_json["failures"] = partition.failures;
  partition_json["cell_size_log2"] = partition.cell_size_log2;
  partition_json["punctured"] = partition.punctured;
  j["partition"] = partition_json;
  j["checks"] = Json::array();
  const Check* first_failure = nullptr;
  for (const auto& c : checks) {
    j["checks"].push_back(c.to_json());
    if (!c.passed() && first_failure == nullptr) first_failure = &c;
  }
  j["passed"] = first_failure == nullptr;
  if (first_failure != nullptr) j["first_failure"] = first_failure->name;
  return {first_failure == nullptr ? kPass : kVerificationFailure, dump(j)};
}

CommandResult cmd_table(const RunConfig& config) {
  make_params(config.m, config.s, config.modulus);
  if (config.m >= 13) {
    throw BudgetExceeded("the Q table for m = " + std::to_string(config.m) +
                         " is out of scope: the O(8^m) square count exceeds the desk-scale budget");
  }
  if (config.m > 9 && !config.long_run) {
    throw BudgetExceeded("the Q table for m = " + std::to_string(config.m) + " needs --long");
  }
  std::ostringstream csv;
  csv << "n,sigma_plus_1,Q_zero_class,Q_nonzero_class\n";
  Json rows = Json::array();
  const SquareOptions options{config.threads, config.long_run};
  for (int s = 1; 2 * s < config.m; ++s) {
    if (std::gcd(s, config.m) != 1) continue;
    const Gold gold(make_params(config.m, s, config.modulus));
    const CanonicalReps reps = canonical_reps(gold);
    const std::uint64_t q_zero = count_two_color_squares(reps.zero_class, gold, options);
    const std::uint64_t q_nonzero = count_two_color_squares(reps.nonzero_class, gold, options);
    csv << gold.size() << ',' << gold.params().sigma_plus_1() << ',' << q_zero << ',' << q_nonzero << '\n';
    Json row;
    row["n"] = gold.size();
    row["sigma_plus_1"] = gold.params().sigma_plus_1();
    row["Q_zero_class"] = q_zero;
    row["Q_nonzero_class"] = q_nonzero;
    rows.push_back(row);
  }
  if (!config.json) return {kPass, csv.str()};
  Json j = header("table");
  j["m"] = config.m;
  j["modulus_hex"] = to_hex(make_params(config.m, config.s, config.modulus).modulus.poly);
  j["rows"] = rows;
  return {kPass, dump(j)};
}

CommandResult cmd_squares(const RunConfig& config) {
  const Gold gold = make_gold(config);
  const SubsetVec x = representative(config, gold);
  if (!x.parity()) throw std::invalid_argument("the representative must have odd cardinality");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t q = count_two_color_squares(x, gold, SquareOptions{config.threads, config.long_run});
  const auto elapsed = std::chrono::steady_clock::now() - start;

  Json j = header("squares");
  j["params"] = params_json(gold.params());
  j["m"] = gold.m();
  j["sigma_plus_1"] = gold.params().sigma_plus_1();
  j["rep"] = x.to_hex();
  j["rep_class"] = to_string(s_class(x, gold));
  j["Q"] = q;
  if (config.timing) j["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return {kPass, dump(j)};
}

CommandResult cmd_color(const RunConfig& config) {
  const Gold gold = make_gold(config);
  const SubsetVec x = parse_subset(gold.m(), config.subset);
  const FieldElement alpha = gold.color(x);
  const PartitionHandle partition(gold);
  bool membership = partition.cell(alpha).contains(x);
  // Uniqueness against every other cell where that is cheap.
  if (gold.m() <= 9) {
    for (std::uint32_t b = 0; b < gold.size(); ++b) {
      if (b != alpha.value() && partition.cell(FieldElement(b)).contains(x)) membership = false;
    }
  }
  const SClass cls = s_class(x, gold);
  const int code = membership ? kPass : kVerificationFailure;
  if (!config.json) {
    return {code, "alpha=" + std::to_string(alpha.value()) + " class=" + to_string(cls) +
                      " membership=" + (membership ? "ok" : "FAILED") + "\n"};
  }
  Json j = header("color");
  j["params"] = params_json(gold.params());
  j["subset"] = x.to_hex();
  j["alpha"] = alpha.value();
  j["s_class"] = to_string(cls);
  j["membership_ok"] = membership;
  return {code, dump(j)};
}

CommandResult cmd_orbit(const RunConfig& config) {
  const Gold gold = make_gold(config);
  const SubsetVec x = parse_subset(gold.m(), config.subset);
  const SubsetVec y = nearest_codeword(x, gold);
  const FieldElement s_y = s_invariant(y, gold);
  const SClass cls = s_y.is_zero() ? SClass::zero : SClass::nonzero;
  if (!config.json) return {kPass, std::string("class=") + to_string(cls) + " s_Y=" + std::to_string(s_y.value()) + "\n"};
  Json j = header("orbit");
  j["params"] = params_json(gold.params());
  j["subset"] = x.to_hex();
  j["nearest_codeword"] = y.to_hex();
  j["s_invariant"] = s_y.value();
  j["s_class"] = to_string(cls);
  return {kPass, dump(j)};
}

CommandResult cmd_crooked(const RunConfig& config) {
  const Gold gold = make_gold(config);
  const PermTable f = load_table(config, gold);
  const CrookedVerdict v = classify(f);
  if (!config.json) {
    return {kPass, std::string("crooked=") + (v.crooked ? "true" : "false") +
                       " affine_condition=" + (v.affine_condition ? "true" : "false") + "\n"};
  }
  Json j = header("crooked");
  j["params"] = params_json(gold.params());
  j["table"] = config.table;
  j["crooked"] = v.crooked;
  j["affine_condition"] = v.affine_condition;
  j["first_non_hyperplane_alpha"] = v.first_non_hyperplane ? Json(*v.first_non_hyperplane) : Json(nullptr);
  j["first_non_affine_alpha"] = v.first_non_affine ? Json(*v.first_non_affine) : Json(nullptr);
  return {kPass, dump(j)};
}

CommandResult cmd_export(const RunConfig& config) {
  const Gold gold = make_gold(config);
  if (config.alpha >= gold.size()) throw std::invalid_argument("--alpha outside the field");
  std::ostringstream out;
  write_matrix(out, build_H(gold), gold.params());
  write_matrix(out, build_B(gold), gold.params());
  write_matrix(out, build_H_alpha_p(FieldElement(config.alpha), false, gold), gold.params());
  return {kPass, out.str()};
}

CommandResult cmd_coincide(const RunConfig& config) {
  const Gold gold = make_gold(config);
  std::mt19937_64 rng(config.seed);
  const CoincidenceReport r = coincidence_check(gold.params(), config.samples.value_or(default_samples(config.m)), rng);
  Json j = header("coincide");
  j["params"] = params_json(gold.params());
  j["seed"] = config.seed;
  j["s_mirror"] = r.s_mirror;
  j["mode"] = mode_name(r.mode);
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return {r.passed() ? kPass : kVerificationFailure, dump(j)};
}

CommandResult run_command(const std::string& name, const RunConfig& config) {
  try {
    if (name == "verify") return cmd_verify(config);
    if (name == "table") return cmd_table(config);
    if (name == "squares") return cmd_squares(config);
    if (name == "color") return cmd_color(config);
    if (name == "orbit") return cmd_orbit(config);
    if (name == "crooked") return cmd_crooked(config);
    if (name == "export") return cmd_export(config);
    if (name == "coincide") return cmd_coincide(config);
    return {kUsageError, "unknown command '" + name + "'\n"};
  } catch (const BudgetExceeded& e) {
    return {kBudgetRefusal, std::string("refused: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kUsageError, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace goldpart
