// Arithmetic in GF(2^m), polynomial basis.
//
// An element is the integer whose bit i is the coefficient of x^i. The
// modulus is a degree-m irreducible polynomial encoded the same way (bit m
// set). All routines are constexpr-free plain functions over small integers;
// m is limited to 20 so products fit comfortably in 64 bits.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace goldpart {

inline constexpr int kMaxDegree = 20;

/// Element of GF(2^m). Addition is xor; multiplication needs a Field.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  constexpr FieldElement& operator+=(FieldElement other) {
    value_ ^= other.value_;
    return *this;
  }
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.value_ ^ b.value_);
  }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_ = 0;
};

struct Modulus {
  int m = 0;
  std::uint32_t poly = 0;

  friend bool operator==(const Modulus&, const Modulus&) = default;
};

/// True iff `poly` (degree >= 1) has no factor of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Smallest (as an integer) irreducible polynomial of degree m.
Modulus find_modulus(int m);

/// Validates an explicit modulus for degree m; throws std::invalid_argument.
Modulus make_modulus(int m, std::uint32_t poly);

/// "0xb" style rendering and its inverse (accepts an optional 0x prefix).
std::string to_hex(std::uint32_t value);
std::uint32_t parse_hex(const std::string& text);

class Field {
 public:
  explicit Field(Modulus modulus);

  int degree() const { return modulus_.m; }
  std::uint32_t size() const { return std::uint32_t{1} << modulus_.m; }
  const Modulus& modulus() const { return modulus_; }

  bool contains(FieldElement a) const { return a.value() < size(); }

  static FieldElement add(FieldElement a, FieldElement b) { return a + b; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  // pow(0, 0) == 1 (empty product).
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement frobenius(FieldElement a) const { return mul(a, a); }
  FieldElement inverse(FieldElement a) const;

 private:
  Modulus modulus_;
};

}  // namespace goldpart
