#include "groupkit/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace groupkit {

namespace {

void sort_by_key_rank(const FiniteGroup &G, std::vector<std::uint32_t> &v) {
  std::sort(v.begin(), v.end(), [&](std::uint32_t a, std::uint32_t b) {
    return G.key_rank(a) < G.key_rank(b);
  });
}

std::string class_letters(std::size_t i) {
  // A..Z, then AA, AB, ...
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + i % 26));
    i = i / 26;
  } while (i-- > 0);
  return s;
}

/// Closure of a member-index set under products, entirely inside the parent.
std::vector<std::uint32_t> close_under_product(const FiniteGroup &G,
                                               std::vector<std::uint32_t> seed) {
  std::vector<bool> in(G.order(), false);
  std::vector<std::uint32_t> out;
  auto push = [&](std::uint32_t idx) {
    if (!in[idx]) {
      in[idx] = true;
      out.push_back(idx);
    }
  };
  push(G.require_index(G.identity()));
  for (auto s : seed) push(s);
  // generators of the closure are the seed elements
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto s : seed) push(G.product(out[head], s));
  return out;
}

} // namespace

Subgroup::Subgroup(const FiniteGroup &parent,
                   std::vector<std::uint32_t> members,
                   std::vector<GroupElement> generators)
    : parent_(&parent),
      members_(std::move(members)),
      mask_(parent.order(), false),
      generators_(std::move(generators)) {
  sort_by_key_rank(parent, members_);
  for (auto m : members_) mask_[m] = true;
}

Subgroup Subgroup::whole(const FiniteGroup &G) {
  std::vector<std::uint32_t> all(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) all[i] = i;
  return Subgroup(G, std::move(all), G.generators());
}

bool Subgroup::same_member_set(const Subgroup &other) const {
  return parent_ == other.parent_ && members_ == other.members_;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup &G) {
  const auto n = static_cast<std::uint32_t>(G.order());
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;

  for (auto start : G.by_key()) {
    if (assigned[start]) continue;
    ConjugacyClass c;
    c.parent = &G;
    c.representative = start;
    c.element_order = G.order_of(start);
    for (std::uint32_t g = 0; g < n; ++g) {
      std::uint32_t conj = G.product(G.product(g, start), G.inverse_index(g));
      if (!assigned[conj]) {
        assigned[conj] = true;
        c.members.push_back(conj);
      }
    }
    c.size = c.members.size();
    sort_by_key_rank(G, c.members);
    classes.push_back(std::move(c));
  }

  std::sort(classes.begin(), classes.end(),
            [&](const ConjugacyClass &a, const ConjugacyClass &b) {
              if (a.element_order != b.element_order)
                return a.element_order < b.element_order;
              if (a.size != b.size) return a.size < b.size;
              return G.key_rank(a.representative) <
                     G.key_rank(b.representative);
            });

  std::map<std::uint64_t, std::size_t> per_order;
  for (auto &c : classes)
    c.label = std::to_string(c.element_order) +
              class_letters(per_order[c.element_order]++);
  return classes;
}

std::uint64_t centralizer_order(const FiniteGroup &G, const GroupElement &g) {
  const std::uint32_t gi = G.require_index(g);
  std::uint64_t count = 0;
  for (std::uint32_t h = 0; h < G.order(); ++h)
    if (G.product(h, gi) == G.product(gi, h)) ++count;
  return count;
}

Subgroup subgroup_generated(const FiniteGroup &G,
                            const std::vector<GroupElement> &S) {
  std::vector<std::uint32_t> seed;
  seed.reserve(S.size());
  for (const auto &e : S) seed.push_back(G.require_index(e));
  return Subgroup(G, close_under_product(G, std::move(seed)), S);
}

Subgroup derived_subgroup(const Subgroup &H) {
  const FiniteGroup &G = H.parent();
  std::vector<bool> seen(G.order(), false);
  std::vector<std::uint32_t> commutators;
  std::vector<GroupElement> gens;
  for (auto a : H.members()) {
    const std::uint32_t ai = G.inverse_index(a);
    for (auto b : H.members()) {
      const std::uint32_t comm =
          G.product(G.product(ai, G.inverse_index(b)), G.product(a, b));
      if (!seen[comm]) {
        seen[comm] = true;
        commutators.push_back(comm);
        gens.push_back(G.element(comm));
      }
    }
  }
  return Subgroup(G, close_under_product(G, std::move(commutators)),
                  std::move(gens));
}

Subgroup derived_subgroup(const FiniteGroup &G) {
  return derived_subgroup(Subgroup::whole(G));
}

SolvabilityResult is_solvable(const FiniteGroup &G) {
  SolvabilityResult result;
  result.series_orders.push_back(G.order());
  Subgroup current = Subgroup::whole(G);
  while (true) {
    Subgroup next = derived_subgroup(current);
    result.series_orders.push_back(next.order());
    if (next.order() == 1) {
      result.solvable = true;
      return result;
    }
    if (next.order() == current.order()) {
      result.solvable = false; // series stabilized above the trivial subgroup
      return result;
    }
    current = std::move(next);
  }
}

Subgroup normalizer(const FiniteGroup &G, const Subgroup &H) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    const std::uint32_t gi = G.inverse_index(g);
    bool normalizes = true;
    for (auto h : H.members()) {
      if (!H.contains(G.product(G.product(g, h), gi))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(g);
  }
  // greedy generating set, canonically smallest first
  std::vector<std::uint32_t> by_key = members;
  sort_by_key_rank(G, by_key);
  std::vector<GroupElement> gens;
  std::vector<std::uint32_t> closed = close_under_product(G, {});
  for (auto m : by_key) {
    if (std::find(closed.begin(), closed.end(), m) != closed.end()) continue;
    gens.push_back(G.element(m));
    std::vector<std::uint32_t> seed;
    for (const auto &e : gens) seed.push_back(G.require_index(e));
    closed = close_under_product(G, std::move(seed));
    if (closed.size() == members.size()) break;
  }
  return Subgroup(G, std::move(members), std::move(gens));
}

namespace {

/// Normalizer ascent from a p-subgroup seed up to full p-part order.
Subgroup sylow_ascent(const FiniteGroup &G, std::uint64_t p, Subgroup P) {
  const std::uint64_t target = G.p_part(p);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    bool grew = false;
    for (auto idx : G.by_key()) {
      if (!N.contains(idx) || P.contains(idx)) continue;
      if (prime_power_base(G.order_of(idx)) != p) continue;
      std::vector<GroupElement> gens = P.generators();
      gens.push_back(G.element(idx));
      P = subgroup_generated(G, gens);
      grew = true;
      break;
    }
    if (!grew)
      throw Error("sylow ascent stalled below the full p-part for " +
                  G.name() + ", p = " + std::to_string(p));
  }
  return P;
}

} // namespace

Subgroup sylow_subgroup(const FiniteGroup &G, std::uint64_t p) {
  if (!is_prime(p))
    throw PrimeNotDividingError(std::to_string(p) + " is not a prime");
  if (G.order() % p != 0)
    throw PrimeNotDividingError("prime " + std::to_string(p) +
                                " does not divide the order of " + G.name());
  for (auto idx : G.by_key()) {
    if (prime_power_base(G.order_of(idx)) == p)
      return sylow_ascent(G, p, subgroup_generated(G, {G.element(idx)}));
  }
  throw Error("no p-element found although p divides the group order");
}

Subgroup sylow_containing(const FiniteGroup &G, const GroupElement &x) {
  const std::uint32_t xi = G.require_index(x);
  const std::uint64_t p = prime_power_base(G.order_of(xi));
  if (p == 0)
    throw NotPElementError("element " + x.to_string() +
                           " is trivial or not of prime-power order");
  return sylow_ascent(G, p, subgroup_generated(G, {x}));
}

std::vector<Subgroup> sylow_conjugates(const FiniteGroup &G,
                                       const Subgroup &P) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Subgroup> out;
  for (auto g : G.by_key()) {
    const std::uint32_t gi = G.inverse_index(g);
    std::vector<std::uint32_t> members;
    members.reserve(P.members().size());
    for (auto h : P.members()) members.push_back(G.product(G.product(g, h), gi));
    std::vector<std::uint32_t> dedup_key = members;
    std::sort(dedup_key.begin(), dedup_key.end());
    if (!seen.insert(std::move(dedup_key)).second) continue;
    std::vector<GroupElement> gens;
    gens.reserve(P.generators().size());
    for (const auto &s : P.generators())
      gens.push_back(G.element(G.product(
          G.product(g, G.require_index(s)), gi)));
    out.emplace_back(G, std::move(members), std::move(gens));
  }
  return out;
}

} // namespace groupkit
