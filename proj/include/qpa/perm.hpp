#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qpa/cyclotomic.hpp"
#include "qpa/error.hpp"

namespace qpa {

inline constexpr std::size_t kDefaultOrderCap = 10080;

/// Permutation of {1..n} in one-line notation (0-based internally).
/// Composition is function composition: (p*q)(i) = p(q(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  /// cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "id"
  static Perm parse_cycles(const std::string& s, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;
  std::string cycle_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

enum class SubgroupFilter { All, Abelian, Cyclic };

/// Finite permutation group with fully enumerated elements, ordered
/// lexicographically on one-line notation so all downstream output is
/// reproducible.
class PermGroup {
 public:
  PermGroup() = default;
  /// orbit-of-identity closure; throws OrderLimitExceeded past the cap
  static PermGroup closure(int degree, std::vector<Perm> generators,
                           std::size_t cap = kDefaultOrderCap);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& element(int i) const { return elems_[i]; }
  const Perm& identity_element() const;

  bool contains(const Perm& p) const;
  int index_of(const Perm& p) const;  // -1 if absent
  int multiply(int i, int j) const { return index_of(elems_[i] * elems_[j]); }
  int inverse_of(int i) const { return index_of(elems_[i].inverse()); }

  bool is_abelian() const;
  bool is_cyclic() const;
  bool is_subgroup_of(const PermGroup& g) const;

  /// complete duplicate-free subgroup list (join-closure of the cyclic
  /// subgroups); deterministic order: by (order, element list)
  std::vector<PermGroup> subgroups(SubgroupFilter filter,
                                   std::size_t cap = kDefaultOrderCap) const;

  /// smallest subgroup of g containing every part
  static PermGroup generated_subgroup(const PermGroup& g, const std::vector<PermGroup>& parts);

  /// generating set chosen greedily by descending element order (ties by
  /// one-line order); used to keep certificate degrees small
  std::vector<Perm> greedy_generators() const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;  // sorted
};

/// One-dimensional characters chi: G -> roots of unity, enumerated via
/// generator images and consistency propagation. Values indexed by element.
struct Character {
  std::vector<Cyclotomic> values;
};
std::vector<Character> characters(const PermGroup& g);

/// Isomorphism test for small abstract groups given by multiplication tables
/// (table[i][j] = index of product, identity at index 0 not required).
bool tables_isomorphic(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b);

/// order profile {element order -> count} of a multiplication table
std::vector<std::pair<int, int>> table_order_profile(const std::vector<std::vector<int>>& t);

}  // namespace qpa
