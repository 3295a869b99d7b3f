#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupkit/group.hpp"

namespace groupkit {

/// A conjugacy class of a fully enumerated group. Members are parent element
/// indices sorted by canonical key; the representative is the canonically
/// smallest member.
struct ConjugacyClass {
  const FiniteGroup *parent = nullptr;
  std::string label;
  std::uint32_t representative = 0;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::vector<std::uint32_t> members; // sorted by canonical key

  const GroupElement &representative_element() const {
    return parent->element(representative);
  }
};

/// A subgroup of an enumerated parent group: member indices (sorted by
/// canonical key), a membership mask, and the generators it was built from.
class Subgroup {
public:
  Subgroup(const FiniteGroup &parent, std::vector<std::uint32_t> members,
           std::vector<GroupElement> generators);

  /// The whole group viewed as a subgroup of itself.
  static Subgroup whole(const FiniteGroup &G);

  const FiniteGroup &parent() const { return *parent_; }
  std::uint64_t order() const { return members_.size(); }
  const std::vector<std::uint32_t> &members() const { return members_; }
  const std::vector<GroupElement> &generators() const { return generators_; }
  bool contains(std::uint32_t index) const { return mask_[index]; }
  bool same_member_set(const Subgroup &other) const;

private:
  const FiniteGroup *parent_;
  std::vector<std::uint32_t> members_; // sorted by canonical key
  std::vector<bool> mask_;
  std::vector<GroupElement> generators_;
};

/// All conjugacy classes, ordered by (element order, class size, smallest
/// canonical member key) and labeled "1A", "2A", "2B", ... in that order.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup &G);

/// Number of h in G commuting with g. Throws NotInGroupError if g is not a
/// member.
std::uint64_t centralizer_order(const FiniteGroup &G, const GroupElement &g);

/// Smallest subgroup containing S. Throws NotInGroupError for elements
/// outside G. Empty S yields the trivial subgroup.
Subgroup subgroup_generated(const FiniteGroup &G,
                            const std::vector<GroupElement> &S);

/// Subgroup generated by all commutators a^-1 b^-1 a b over pairs in H.
Subgroup derived_subgroup(const Subgroup &H);
Subgroup derived_subgroup(const FiniteGroup &G);

/// Derived series evidence returned by is_solvable: the orders of
/// G >= G' >= G'' >= ... until the series stabilizes or reaches 1.
struct SolvabilityResult {
  bool solvable = false;
  std::vector<std::uint64_t> series_orders;
};

SolvabilityResult is_solvable(const FiniteGroup &G);

/// { g in G : g H g^-1 = H }.
Subgroup normalizer(const FiniteGroup &G, const Subgroup &H);

/// A Sylow p-subgroup, built deterministically by normalizer ascent from the
/// canonically first p-element. Throws PrimeNotDividingError if p does not
/// divide |G|.
Subgroup sylow_subgroup(const FiniteGroup &G, std::uint64_t p);

/// A Sylow subgroup containing x, by the same ascent seeded at <x>. Throws
/// NotPElementError when x is trivial or not of prime-power order.
Subgroup sylow_containing(const FiniteGroup &G, const GroupElement &x);

/// Distinct conjugates g P g^-1, in deterministic first-seen order (g runs
/// over G in canonical key order).
std::vector<Subgroup> sylow_conjugates(const FiniteGroup &G,
                                       const Subgroup &P);

} // namespace groupkit
