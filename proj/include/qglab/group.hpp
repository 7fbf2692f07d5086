// Finite groups given by Cayley tables, and the builtin library.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qglab {

/// Raised when a table fails a group axiom; the message names the axiom and
/// the offending indices.
struct GroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Multiplication table with identity at index 0: table[a][b] = a·b.
class GroupTable {
 public:
  GroupTable(std::string name, std::vector<std::vector<std::size_t>> table)
      : name_(std::move(name)), table_(std::move(table)) {
    validate();
    inverse_.resize(order());
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (table_[a][b] == 0) inverse_[a] = b;
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity_index() const noexcept { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  void validate() const {
    const auto n = table_.size();
    if (n == 0) throw GroupError("group '" + name_ + "': order must be positive");
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[i].size() != n)
        throw GroupError("group '" + name_ + "': row " + std::to_string(i) + " has " +
                         std::to_string(table_[i].size()) + " entries, expected " + std::to_string(n));
      for (std::size_t j = 0; j < n; ++j)
        if (table_[i][j] >= n)
          throw GroupError("group '" + name_ + "': entry [" + std::to_string(i) + "][" +
                           std::to_string(j) + "] = " + std::to_string(table_[i][j]) + " out of range");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[0][j] != j)
        throw GroupError("group '" + name_ + "': identity axiom fails at [0][" + std::to_string(j) + "]");
      if (table_[j][0] != j)
        throw GroupError("group '" + name_ + "': identity axiom fails at [" + std::to_string(j) + "][0]");
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[table_[i][j]])
          throw GroupError("group '" + name_ + "': Latin-square axiom fails, row " + std::to_string(i) +
                           " repeats " + std::to_string(table_[i][j]));
        if (col[table_[j][i]])
          throw GroupError("group '" + name_ + "': Latin-square axiom fails, column " + std::to_string(i) +
                           " repeats " + std::to_string(table_[j][i]));
        row[table_[i][j]] = true;
        col[table_[j][i]] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
            throw GroupError("group '" + name_ + "': associativity fails at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(k) + ")");
  }

  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

namespace detail {

// Builds a table from a list of elements and a composition rule; elements[0]
// must be the identity.
template <class Element, class Compose>
GroupTable table_from_elements(std::string name, const std::vector<Element>& elements, Compose compose) {
  const auto n = elements.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto prod = compose(elements[a], elements[b]);
      const auto it = std::find(elements.begin(), elements.end(), prod);
      if (it == elements.end()) throw GroupError("group '" + name + "': elements not closed");
      t[a][b] = static_cast<std::size_t>(it - elements.begin());
    }
  return {std::move(name), std::move(t)};
}

}  // namespace detail

inline GroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return {"Z" + std::to_string(n), std::move(t)};
}

/// S3 as permutations of {0,1,2}; (p·q)(k) = p(q(k)).
inline GroupTable symmetric_group_3() {
  using Perm = std::array<int, 3>;
  std::vector<Perm> elems;
  Perm p{0, 1, 2};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::table_from_elements("S3", elems, [](const Perm& a, const Perm& b) {
    return Perm{a[b[0]], a[b[1]], a[b[2]]};
  });
}

/// D4, symmetries of the square, as permutations of its vertices.
inline GroupTable dihedral_group_4() {
  using Perm = std::array<int, 4>;
  const Perm rot{1, 2, 3, 0};
  const Perm ref{0, 3, 2, 1};
  auto compose = [](const Perm& a, const Perm& b) { return Perm{a[b[0]], a[b[1]], a[b[2]], a[b[3]]}; };
  std::vector<Perm> elems{{0, 1, 2, 3}};
  for (int k = 1; k < 4; ++k) elems.push_back(compose(rot, elems.back()));
  for (int k = 0; k < 4; ++k) elems.push_back(compose(elems[static_cast<std::size_t>(k)], ref));
  return detail::table_from_elements("D4", elems, compose);
}

/// Q8 as ±{1, i, j, k}, encoded as (sign, unit) with unit 0..3 = 1, i, j, k.
inline GroupTable quaternion_group() {
  using Q = std::array<int, 2>;
  // unit products: mult[u][v] = (sign, unit)
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Q> elems;
  for (int s : {1, -1})
    for (int u = 0; u < 4; ++u) elems.push_back({s, u});
  return detail::table_from_elements("Q8", elems, [](const Q& a, const Q& b) {
    return Q{a[0] * b[0] * sign[a[1]][b[1]], unit[a[1]][b[1]]};
  });
}

inline std::vector<std::string> builtin_group_names() {
  return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "D4", "Q8"};
}

inline std::optional<GroupTable> builtin_group(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name == "D4") return dihedral_group_4();
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto n = std::stoul(name.substr(1));
    if (n >= 1 && n <= 8) return cyclic_group(n);
  }
  return std::nullopt;
}

}  // namespace qglab
