#include "goldpart/field.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace goldpart {
namespace {

int degree_of(std::uint64_t poly) { return std::bit_width(poly) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree_of(b);
  while (a != 0 && degree_of(a) >= db) a ^= b << (degree_of(a) - db);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int deg = degree_of(poly);
  if (deg < 1) return false;
  for (std::uint64_t q = 2; degree_of(q) * 2 <= deg; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

Modulus find_modulus(int m) {
  if (m < 2 || m > kMaxDegree) throw std::invalid_argument("field degree must be in [2, 20]");
  for (std::uint32_t poly = 1u << m; poly < (2u << m); ++poly) {
    if (is_irreducible(poly)) return Modulus{m, poly};
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Modulus make_modulus(int m, std::uint32_t poly) {
  if (m < 2 || m > kMaxDegree) throw std::invalid_argument("field degree must be in [2, 20]");
  if (degree_of(poly) != m) {
    throw std::invalid_argument("modulus " + to_hex(poly) + " does not have degree " + std::to_string(m));
  }
  if (!is_irreducible(poly)) throw std::invalid_argument("modulus " + to_hex(poly) + " is reducible");
  return Modulus{m, poly};
}

std::string to_hex(std::uint32_t value) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, 16);
  return "0x" + std::string(buf, end);
}

std::uint32_t parse_hex(const std::string& text) {
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("not a hexadecimal integer: '" + text + "'");
  }
  return value;
}

Field::Field(Modulus modulus) : modulus_(modulus) {
  if (!is_irreducible(modulus.poly) || degree_of(modulus.poly) != modulus.m) {
    throw std::invalid_argument("invalid modulus " + to_hex(modulus.poly));
  }
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  std::uint32_t x = a.value();
  std::uint32_t y = b.value();
  const std::uint32_t top = 1u << modulus_.m;
  std::uint32_t acc = 0;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus_.poly;
  }
  return FieldElement(acc);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement acc(1);
  while (e != 0) {
    if (e & 1u) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

FieldElement Field::inverse(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  return pow(a, size() - 2);
}

}  // namespace goldpart
