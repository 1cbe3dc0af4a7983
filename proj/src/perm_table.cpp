#include "goldpart/perm_table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "goldpart/gold.hpp"

namespace goldpart {

bool PermTable::is_bijective() const {
  if (images.size() != size()) return false;
  std::vector<bool> seen(size(), false);
  for (std::uint32_t y : images) {
    if (y >= size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

PermTable PermTable::identity(int m) {
  PermTable f{m, std::vector<std::uint32_t>(std::size_t{1} << m)};
  std::iota(f.images.begin(), f.images.end(), 0u);
  return f;
}

PermTable PermTable::gold(const Gold& gold) {
  const auto table = gold.map_table();
  return PermTable{gold.m(), std::vector<std::uint32_t>(table.begin(), table.end())};
}

PermTable PermTable::random(int m, std::mt19937_64& rng) {
  PermTable f = identity(m);
  // Fisher-Yates with an explicit draw so results do not depend on the
  // standard library's shuffle implementation.
  for (std::size_t i = f.images.size(); i > 1; --i) {
    std::swap(f.images[i - 1], f.images[rng() % i]);
  }
  return f;
}

void require_bijective(const PermTable& f) {
  if (!f.is_bijective()) throw std::invalid_argument("table is not a permutation of GF(2^m)");
}

void write_perm_table(std::ostream& out, const PermTable& f) {
  out << nlohmann::json{{"m", f.m}}.dump() << '\n';
  for (std::uint32_t x = 0; x < f.images.size(); ++x) {
    char a[16], b[16];
    auto ea = std::to_chars(a, a + sizeof a, x, 16).ptr;
    auto eb = std::to_chars(b, b + sizeof b, f.images[x], 16).ptr;
    out << std::string(a, ea) << ' ' << std::string(b, eb) << '\n';
  }
}

PermTable read_perm_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("permutation table: missing header");
  int m = 0;
  try {
    m = nlohmann::json::parse(line).at("m").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("permutation table: bad header: ") + e.what());
  }
  if (m < 1 || m > 20) throw std::invalid_argument("permutation table: m out of range");
  const std::uint32_t n = std::uint32_t{1} << m;
  PermTable f{m, std::vector<std::uint32_t>(n, 0)};
  std::vector<bool> filled(n, false);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) {
      throw std::invalid_argument("permutation table: malformed line '" + line + "'");
    }
    const std::uint32_t x = parse_hex(xs);
    const std::uint32_t y = parse_hex(ys);
    if (x >= n || filled[x]) throw std::invalid_argument("permutation table: bad or repeated input " + xs);
    filled[x] = true;
    f.images[x] = y;
    ++rows;
  }
  if (rows != n) throw std::invalid_argument("permutation table: expected " + std::to_string(n) + " rows");
  return f;
}

}  // namespace goldpart
