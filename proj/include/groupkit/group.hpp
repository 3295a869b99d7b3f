#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupkit/element.hpp"

namespace groupkit {

/// Shape of a group's elements: permutation degree, or matrix dimension and
/// field modulus.
struct GroupShape {
  GroupElement::Kind kind = GroupElement::Kind::Permutation;
  std::uint32_t degree_or_dimension = 1;
  std::uint32_t modulus = 0; // 0 for permutation groups

  static GroupShape permutations(std::uint32_t degree) {
    return {GroupElement::Kind::Permutation, degree, 0};
  }
  static GroupShape matrices(std::uint32_t dimension, std::uint32_t modulus) {
    return {GroupElement::Kind::Matrix, dimension, modulus};
  }

  GroupElement identity() const {
    return kind == GroupElement::Kind::Permutation
               ? GroupElement::identity_permutation(degree_or_dimension)
               : GroupElement::identity_matrix(degree_or_dimension, modulus);
  }

  bool matches(const GroupElement &e) const {
    return e.kind() == kind && e.degree() == degree_or_dimension &&
           e.modulus() == modulus;
  }

  friend bool operator==(const GroupShape &, const GroupShape &) = default;
};

constexpr std::uint64_t kDefaultOrderCap = 100000;

/// A fully enumerated finite group. Elements are stored in breadth-first
/// closure order (identity first); a parallel index sorted by canonical key
/// backs every "canonically first" search.
///
/// Groups are immutable after construction and may be shared across threads.
/// Subgroups and conjugacy classes hold a pointer to their parent group, so
/// the parent must stay alive (and unmoved) while they are in use.
class FiniteGroup {
public:
  FiniteGroup(const FiniteGroup &) = delete;
  FiniteGroup &operator=(const FiniteGroup &) = delete;
  FiniteGroup(FiniteGroup &&) = default;
  FiniteGroup &operator=(FiniteGroup &&) = default;

  const std::string &name() const { return name_; }
  const GroupShape &shape() const { return shape_; }
  std::uint64_t order() const { return elements_.size(); }
  const GroupElement &identity() const { return elements_[0]; }
  const std::vector<GroupElement> &elements() const { return elements_; }
  const std::vector<GroupElement> &generators() const { return generators_; }

  const GroupElement &element(std::uint32_t index) const {
    return elements_[index];
  }

  std::optional<std::uint32_t> index_of(const GroupElement &e) const;

  /// Like index_of but throws NotInGroupError when the element is missing.
  std::uint32_t require_index(const GroupElement &e) const;

  bool contains(const GroupElement &e) const {
    return index_of(e).has_value();
  }

  /// Index of element(a) * element(b).
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t inverse_index(std::uint32_t a) const { return inverses_[a]; }

  /// Cached element order.
  std::uint64_t order_of(std::uint32_t a) const { return orders_[a]; }

  /// Element indices sorted by canonical key.
  const std::vector<std::uint32_t> &by_key() const { return by_key_; }

  /// Position of an element in the canonical key order.
  std::uint32_t key_rank(std::uint32_t index) const {
    return key_rank_[index];
  }

  /// Distinct primes dividing the group order, ascending.
  const std::vector<std::uint64_t> &prime_divisors() const {
    return prime_divisors_;
  }

  /// Largest power of p dividing the group order; requires p | order.
  std::uint64_t p_part(std::uint64_t p) const;

  friend FiniteGroup generate_group(std::string name, const GroupShape &shape,
                                    std::vector<GroupElement> generators,
                                    std::uint64_t cap);

private:
  FiniteGroup() = default;

  std::string name_;
  GroupShape shape_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> by_key_;
  std::vector<std::uint32_t> key_rank_;
  std::vector<std::uint64_t> prime_divisors_;
};

/// Breadth-first closure of the generators; deterministic insertion order.
/// Empty generator list yields the trivial group of the declared shape.
/// Throws OrderCapExceededError when the closure grows past `cap`.
FiniteGroup generate_group(std::string name, const GroupShape &shape,
                           std::vector<GroupElement> generators,
                           std::uint64_t cap = kDefaultOrderCap);

} // namespace groupkit
