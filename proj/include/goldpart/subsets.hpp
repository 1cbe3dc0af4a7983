// Subsets of F = GF(2^m) as dense bit vectors.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "goldpart/field.hpp"

namespace goldpart {

/// Bit vector of fixed length. For subsets of F the length is 2^m and bit i
/// stands for the field element with value i; punctured words use 2^m - 1.
class SubsetVec {
 public:
  SubsetVec() = default;
  explicit SubsetVec(std::size_t length);

  /// Empty subset of GF(2^m).
  static SubsetVec for_field(int m) { return SubsetVec(std::size_t{1} << m); }
  static SubsetVec from_elements(int m, std::span<const std::uint32_t> elements);
  static SubsetVec all(std::size_t length);

  std::size_t length() const { return length_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t count() const;
  bool parity() const { return count() & 1u; }
  bool none() const;
  /// Parity of |this ∩ other|: the GF(2) inner product.
  bool dot(const SubsetVec& other) const;

  SubsetVec& operator^=(const SubsetVec& other);
  friend SubsetVec operator^(SubsetVec a, const SubsetVec& b) { return a ^= b; }
  friend bool operator==(const SubsetVec&, const SubsetVec&) = default;

  /// Increasing list of set positions.
  std::vector<std::uint32_t> elements() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// Lowercase hex, least-significant 64-bit word first; each word is
  /// written most-significant digit first, padded to 16 digits (or to
  /// length/4 digits when length < 64).
  std::string to_hex() const;
  static SubsetVec from_hex(std::size_t length, const std::string& text);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

inline SubsetVec sym_diff(const SubsetVec& x, const SubsetVec& y) { return x ^ y; }

/// Σ_{x∈X} x^e.
FieldElement power_sum(const SubsetVec& x, std::uint64_t e, const Field& field);

/// x -> x + delta.
struct Translate {
  FieldElement delta;
};
/// x -> mu * x, mu != 0.
struct Scale {
  FieldElement mu;
};
/// x -> x^2.
struct Frobenius {};

using PointMap = std::variant<Translate, Scale, Frobenius>;

FieldElement apply_point(const PointMap& map, FieldElement x, const Field& field);
/// Image {π(x) : x ∈ X}. Throws std::invalid_argument on scale(0).
SubsetVec apply_point_map(const SubsetVec& x, const PointMap& map, const Field& field);

/// "0,3,5" or "hex:<digits>" into a subset of GF(2^m).
SubsetVec parse_subset(int m, const std::string& text);

}  // namespace goldpart
