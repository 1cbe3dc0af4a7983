#include "goldpart/symmetry.hpp"

#include <stdexcept>
#include <type_traits>

#include "goldpart/partition.hpp"

namespace goldpart {
namespace {

FieldElement random_element(const Gold& gold, std::mt19937_64& rng) {
  return FieldElement(static_cast<std::uint32_t>(rng() % gold.size()));
}

bool in_H(const SubsetVec& y, const Gold& gold) {
  const PowerSums sums = gold.sums(y);
  return !sums.odd && sums.linear.is_zero();
}

}  // namespace

void validate(const Isometry& iso, const Gold& gold) {
  if (const auto* s = std::get_if<Scale>(&iso); s && (s->mu.is_zero() || s->mu.value() >= gold.size())) {
    throw std::invalid_argument("scale factor must be a nonzero field element");
  }
  if (const auto* t = std::get_if<Translate>(&iso); t && t->delta.value() >= gold.size()) {
    throw std::invalid_argument("translation outside the field");
  }
  if (const auto* c = std::get_if<CosetTranslate>(&iso)) {
    if (c->y.length() != gold.size()) throw std::invalid_argument("coset translate has the wrong length");
    if (!in_H(c->y, gold)) throw std::invalid_argument("coset translate Y is not in the extended Hamming code H");
  }
}

SubsetVec apply(const Isometry& iso, const SubsetVec& x, const Gold& gold) {
  validate(iso, gold);
  return std::visit(
      [&](const auto& map) -> SubsetVec {
        using T = std::decay_t<decltype(map)>;
        if constexpr (std::is_same_v<T, CosetTranslate>) {
          return sym_diff(x, map.y);
        } else {
          return apply_point_map(x, PointMap(map), gold.field());
        }
      },
      iso);
}

FieldElement s_invariant(const SubsetVec& y, const Gold& gold) {
  if (!in_H(y, gold)) throw std::invalid_argument("s-invariant is defined for elements of H only");
  return gold.sums(y).gold;
}

FieldElement coset_translate_target(FieldElement beta, const SubsetVec& y, const Gold& gold) {
  return gold.root(gold.map(beta) + s_invariant(y, gold));
}

CellIndex image_cell(const Isometry& iso, CellIndex cell, const Gold& gold) {
  validate(iso, gold);
  const Field& f = gold.field();
  if (const auto* t = std::get_if<Translate>(&iso)) return {cell.alpha + t->delta, cell.beta};
  if (const auto* s = std::get_if<Scale>(&iso)) return {f.mul(s->mu, cell.alpha), f.mul(s->mu, cell.beta)};
  if (std::holds_alternative<Frobenius>(iso)) return {f.frobenius(cell.alpha), f.frobenius(cell.beta)};
  const auto& c = std::get<CosetTranslate>(iso);
  return {cell.alpha, coset_translate_target(cell.beta, c.y, gold)};
}

const char* to_string(SClass c) { return c == SClass::zero ? "zero" : "nonzero"; }

SClass s_class(const SubsetVec& x, const Gold& gold) {
  return s_invariant(nearest_codeword(x, gold), gold).is_zero() ? SClass::zero : SClass::nonzero;
}

CanonicalReps canonical_reps(const Gold& gold) {
  const std::uint32_t n = gold.size();
  const std::uint32_t zero[] = {0};
  CanonicalReps reps{SubsetVec::from_elements(gold.m(), zero), {}};
  // For distinct a < b < c the sum a+b+c is a fourth point, so the nearest
  // codeword is {a, b, c, a+b+c} and its s-invariant is a sum of four maps.
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      for (std::uint32_t c = b + 1; c < n; ++c) {
        const FieldElement fa(a), fb(b), fc(c);
        if (!(gold.map(fa) + gold.map(fb) + gold.map(fc) + gold.map(fa + fb + fc)).is_zero()) {
          const std::uint32_t triple[] = {a, b, c};
          reps.nonzero_class = SubsetVec::from_elements(gold.m(), triple);
          return reps;
        }
      }
    }
  }
  throw std::logic_error("no vertex with nonzero s-class");  // impossible: |B| < |H|
}

nlohmann::ordered_json to_json(const Isometry& iso) {
  nlohmann::ordered_json j;
  if (const auto* t = std::get_if<Translate>(&iso)) {
    j["kind"] = "translate";
    j["delta"] = t->delta.value();
  } else if (const auto* s = std::get_if<Scale>(&iso)) {
    j["kind"] = "scale";
    j["mu"] = s->mu.value();
  } else if (std::holds_alternative<Frobenius>(iso)) {
    j["kind"] = "frobenius";
  } else {
    j["kind"] = "coset_translate";
    j["Y"] = std::get<CosetTranslate>(iso).y.to_hex();
  }
  return j;
}

Isometry isometry_from_json(const nlohmann::json& j, const Gold& gold) {
  Isometry iso;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "translate") {
      iso = Translate{FieldElement(j.at("delta").get<std::uint32_t>())};
    } else if (kind == "scale") {
      iso = Scale{FieldElement(j.at("mu").get<std::uint32_t>())};
    } else if (kind == "frobenius") {
      iso = Frobenius{};
    } else if (kind == "coset_translate") {
      iso = CosetTranslate{SubsetVec::from_hex(gold.size(), j.at("Y").get<std::string>())};
    } else {
      throw std::invalid_argument("unknown isometry kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed isometry: ") + e.what());
  }
  validate(iso, gold);
  return iso;
}

Isometry random_isometry(int kind, const Gold& gold, std::mt19937_64& rng, bool automorphism_only) {
  switch (kind) {
    case 0:
      return Translate{random_element(gold, rng)};
    case 1: {
      FieldElement mu = random_element(gold, rng);
      while (mu.is_zero()) mu = random_element(gold, rng);
      return Scale{mu};
    }
    case 2:
      return Frobenius{};
    case 3: {
      const AffineCodeSpec code = automorphism_only ? build_B(gold) : build_H(gold);
      return CosetTranslate{EchelonSystem(code).sample(rng)};
    }
    default:
      throw std::invalid_argument("isometry kind must be 0..3");
  }
}

std::vector<IsometryCheck> verify_isometry_images(const Gold& gold, std::size_t samples, std::mt19937_64& rng) {
  static constexpr const char* kNames[] = {"translate_image", "scale_image", "frobenius_image",
                                           "coset_translate_image"};
  const EchelonSystem h_code(build_H(gold));
  std::vector<IsometryCheck> results;
  for (int kind = 0; kind < 4; ++kind) {
    IsometryCheck r{kNames[kind], samples, 0};
    for (std::size_t i = 0; i < samples; ++i) {
      const CellIndex cell{random_element(gold, rng), random_element(gold, rng)};
      const SubsetVec x = EchelonSystem(build_H_alpha_beta(cell.alpha, cell.beta, gold)).sample(rng);
      const Isometry iso = kind == 3 ? Isometry(CosetTranslate{h_code.sample(rng)})
                                     : random_isometry(kind, gold, rng);
      const CellIndex target = image_cell(iso, cell, gold);
      if (!build_H_alpha_beta(target.alpha, target.beta, gold).contains(apply(iso, x, gold))) ++r.failures;
    }
    results.push_back(r);
  }
  return results;
}

}  // namespace goldpart
