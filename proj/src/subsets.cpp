#include "goldpart/subsets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace goldpart {

SubsetVec::SubsetVec(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

SubsetVec SubsetVec::from_elements(int m, std::span<const std::uint32_t> elements) {
  SubsetVec out = for_field(m);
  for (std::uint32_t e : elements) {
    if (e >= out.length()) throw std::invalid_argument("element " + std::to_string(e) + " is outside GF(2^m)");
    out.flip(e);
  }
  return out;
}

SubsetVec SubsetVec::all(std::size_t length) {
  SubsetVec out(length);
  std::fill(out.words_.begin(), out.words_.end(), ~std::uint64_t{0});
  if (length % 64 != 0) out.words_.back() = (std::uint64_t{1} << (length % 64)) - 1;
  return out;
}

std::size_t SubsetVec::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool SubsetVec::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool SubsetVec::dot(const SubsetVec& other) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

SubsetVec& SubsetVec::operator^=(const SubsetVec& other) {
  if (other.length_ != length_) throw std::invalid_argument("symmetric difference of vectors of different length");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::vector<std::uint32_t> SubsetVec::elements() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string SubsetVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits_per_word = length_ < 64 ? (length_ + 3) / 4 : 16;
  std::string out;
  out.reserve(words_.size() * digits_per_word);
  for (std::uint64_t w : words_) {
    for (std::size_t d = digits_per_word; d-- > 0;) out.push_back(kDigits[(w >> (4 * d)) & 0xf]);
  }
  return out;
}

SubsetVec SubsetVec::from_hex(std::size_t length, const std::string& text) {
  SubsetVec out(length);
  const std::size_t digits_per_word = length < 64 ? (length + 3) / 4 : 16;
  if (text.size() != out.words_.size() * digits_per_word) {
    throw std::invalid_argument("subset hex must have exactly " + std::to_string(out.words_.size() * digits_per_word) +
                                " digits, got " + std::to_string(text.size()));
  }
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    const char* first = text.data() + w * digits_per_word;
    auto [ptr, ec] = std::from_chars(first, first + digits_per_word, out.words_[w], 16);
    if (ec != std::errc() || ptr != first + digits_per_word) throw std::invalid_argument("malformed subset hex");
  }
  if (length % 64 != 0 && (out.words_.back() >> (length % 64)) != 0) {
    throw std::invalid_argument("subset hex has bits beyond the vector length");
  }
  return out;
}

FieldElement power_sum(const SubsetVec& x, std::uint64_t e, const Field& field) {
  FieldElement acc;
  for (std::uint32_t v : x.elements()) acc += field.pow(FieldElement(v), e);
  return acc;
}

FieldElement apply_point(const PointMap& map, FieldElement x, const Field& field) {
  struct Visitor {
    FieldElement x;
    const Field& field;
    FieldElement operator()(const Translate& t) const { return x + t.delta; }
    FieldElement operator()(const Scale& s) const { return field.mul(s.mu, x); }
    FieldElement operator()(const Frobenius&) const { return field.frobenius(x); }
  };
  return std::visit(Visitor{x, field}, map);
}

SubsetVec apply_point_map(const SubsetVec& x, const PointMap& map, const Field& field) {
  if (const auto* s = std::get_if<Scale>(&map); s != nullptr && s->mu.is_zero()) {
    throw std::invalid_argument("scale(0) is not a permutation of F");
  }
  SubsetVec out(x.length());
  for (std::uint32_t v : x.elements()) out.set(apply_point(map, FieldElement(v), field).value());
  return out;
}

SubsetVec parse_subset(int m, const std::string& text) {
  const std::size_t length = std::size_t{1} << m;
  if (text.starts_with("hex:")) return SubsetVec::from_hex(length, text.substr(4));
  SubsetVec out = SubsetVec::for_field(m);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v >= length) {
      throw std::invalid_argument("bad subset element '" + item + "'");
    }
    if (out.test(v)) throw std::invalid_argument("duplicate subset element " + item);
    out.set(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace goldpart
