#include "groupkit/triples.hpp"

#include <algorithm>
#include <numeric>

namespace groupkit {

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

/// Element indices in canonical key order whose cached order satisfies pred.
template <typename Pred>
std::vector<std::uint32_t> candidates_by_key(const FiniteGroup &G,
                                             Pred &&pred) {
  std::vector<std::uint32_t> out;
  for (auto idx : G.by_key())
    if (pred(G.order_of(idx))) out.push_back(idx);
  return out;
}

TripleWitness make_witness(const FiniteGroup &G, std::uint32_t x,
                           std::uint32_t y, std::uint32_t z, TripleFlavor f,
                           std::uint64_t odd_prime = 0) {
  TripleWitness w{G.element(x), G.element(y), G.element(z),
                  {G.order_of(x), G.order_of(y), G.order_of(z)},
                  f,
                  odd_prime};
  validate_witness(G, w);
  return w;
}

/// Generic canonically-first search: x over xs, y over ys (both already in
/// key order), z = (xy)^-1 accepted by zpred.
template <typename ZPred>
std::optional<TripleWitness> first_triple(const FiniteGroup &G,
                                          const std::vector<std::uint32_t> &xs,
                                          const std::vector<std::uint32_t> &ys,
                                          ZPred &&zpred, TripleFlavor flavor,
                                          std::uint64_t odd_prime = 0) {
  for (auto x : xs) {
    for (auto y : ys) {
      const std::uint32_t z = G.inverse_index(G.product(x, y));
      const std::uint64_t oz = G.order_of(z);
      if (oz == 1) continue;
      if (zpred(G.order_of(x), G.order_of(y), oz))
        return make_witness(G, x, y, z, flavor, odd_prime);
    }
  }
  return std::nullopt;
}

} // namespace

const char *flavor_name(TripleFlavor f) {
  switch (f) {
    case TripleFlavor::Thompson: return "thompson";
    case TripleFlavor::KaplanLevy: return "kaplan-levy";
    case TripleFlavor::ThreePO: return "3po";
    case TripleFlavor::ThreePPO: return "3ppo";
  }
  return "?";
}

void validate_witness(const FiniteGroup &G, const TripleWitness &w) {
  auto fail = [&](const std::string &msg) {
    throw InvalidWitnessError("invalid " + std::string(flavor_name(w.flavor)) +
                              " triple: " + msg);
  };
  for (const GroupElement *e : {&w.x, &w.y, &w.z}) {
    if (!G.contains(*e)) fail("element " + e->to_string() + " not in group");
    if (e->is_identity()) fail("component is the identity");
  }
  if (!(w.x * w.y * w.z).is_identity()) fail("product is not the identity");
  const std::array<std::uint64_t, 3> actual{w.x.order(), w.y.order(),
                                            w.z.order()};
  if (actual != w.orders) fail("stated orders do not match the elements");

  switch (w.flavor) {
    case TripleFlavor::Thompson:
      for (int i = 0; i < 3; ++i)
        if (gcd64(actual[i], actual[(i + 1) % 3]) != 1)
          fail("orders are not pairwise coprime");
      break;
    case TripleFlavor::KaplanLevy: {
      if (prime_power_base(actual[0]) != 2) fail("order(x) is not a 2-power");
      const std::uint64_t p = prime_power_base(actual[1]);
      if (p == 0 || p == 2) fail("order(y) is not an odd prime power");
      if (w.odd_prime != p) fail("stated odd prime does not match order(y)");
      if (actual[2] < 2 || gcd64(actual[2], 2 * p) != 1)
        fail("order(z) is not coprime to 2p");
      break;
    }
    case TripleFlavor::ThreePO:
      for (auto o : actual)
        if (!is_prime(o)) fail("order " + std::to_string(o) + " is not prime");
      if (actual[0] == actual[1] || actual[0] == actual[2] ||
          actual[1] == actual[2])
        fail("prime orders are not distinct");
      break;
    case TripleFlavor::ThreePPO: {
      std::array<std::uint64_t, 3> base{};
      for (int i = 0; i < 3; ++i) {
        base[i] = prime_power_base(actual[i]);
        if (base[i] == 0)
          fail("order " + std::to_string(actual[i]) + " is not a prime power");
      }
      if (base[0] == base[1] || base[0] == base[2] || base[1] == base[2])
        fail("prime-power orders do not involve three distinct primes");
      break;
    }
  }
}

void validate_witness(const FiniteGroup &G, const SylowWitness &w) {
  auto fail = [&](const std::string &msg) {
    throw InvalidWitnessError("invalid sylow witness: " + msg);
  };
  if (w.primes[0] == w.primes[1] || w.primes[0] == w.primes[2] ||
      w.primes[1] == w.primes[2])
    fail("primes are not distinct");
  const Subgroup *parts[3] = {&w.P1, &w.P2, &w.P3};
  for (int i = 0; i < 3; ++i) {
    if (&parts[i]->parent() != &G) fail("subgroup belongs to another group");
    if (parts[i]->order() != G.p_part(w.primes[i]))
      fail("subgroup " + std::to_string(i + 1) +
           " does not have full Sylow order");
    for (auto m : parts[i]->members())
      if (prime_power_base(G.order_of(m)) != w.primes[i] &&
          G.order_of(m) != 1)
        fail("subgroup contains an element of foreign order");
  }
  if (w.product_set_size >= w.order_product())
    fail("product set is not strictly smaller than the order product");
  bool all_distinct = true;
  for (int i = 0; i < 3; ++i)
    if (w.first[i] == w.second[i]) all_distinct = false;
  if (!all_distinct) fail("collision triples are not componentwise distinct");
  const Subgroup *homes[3] = {&w.P1, &w.P2, &w.P3};
  GroupElement prod_first = w.first[0] * w.first[1] * w.first[2];
  GroupElement prod_second = w.second[0] * w.second[1] * w.second[2];
  if (prod_first != prod_second) fail("collision products differ");
  for (int i = 0; i < 3; ++i) {
    if (!homes[i]->contains(G.require_index(w.first[i])) ||
        !homes[i]->contains(G.require_index(w.second[i])))
      fail("collision component lies outside its subgroup");
  }
}

std::optional<TripleWitness> find_thompson_triple(const FiniteGroup &G) {
  auto nontrivial = candidates_by_key(G, [](std::uint64_t o) { return o > 1; });
  for (auto x : nontrivial) {
    const std::uint64_t ox = G.order_of(x);
    for (auto y : nontrivial) {
      const std::uint64_t oy = G.order_of(y);
      if (gcd64(ox, oy) != 1) continue;
      const std::uint32_t z = G.inverse_index(G.product(x, y));
      const std::uint64_t oz = G.order_of(z);
      if (oz == 1 || gcd64(oz, ox) != 1 || gcd64(oz, oy) != 1) continue;
      return make_witness(G, x, y, z, TripleFlavor::Thompson);
    }
  }
  return std::nullopt;
}

std::optional<TripleWitness> find_kaplan_levy_triple(const FiniteGroup &G) {
  auto two_power =
      candidates_by_key(G, [](std::uint64_t o) { return prime_power_base(o) == 2; });
  for (auto p : G.prime_divisors()) {
    if (p == 2) continue;
    auto p_power = candidates_by_key(
        G, [p](std::uint64_t o) { return prime_power_base(o) == p; });
    auto hit = first_triple(
        G, two_power, p_power,
        [p](std::uint64_t, std::uint64_t, std::uint64_t oz) {
          return gcd64(oz, 2 * p) == 1;
        },
        TripleFlavor::KaplanLevy, p);
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<TripleWitness> find_3po_triple(const FiniteGroup &G) {
  if (G.prime_divisors().size() < 3) return std::nullopt;
  auto prime_order =
      candidates_by_key(G, [](std::uint64_t o) { return is_prime(o); });
  return first_triple(
      G, prime_order, prime_order,
      [](std::uint64_t ox, std::uint64_t oy, std::uint64_t oz) {
        return ox != oy && is_prime(oz) && oz != ox && oz != oy;
      },
      TripleFlavor::ThreePO);
}

bool is_3po(const FiniteGroup &G) { return find_3po_triple(G).has_value(); }

std::optional<TripleWitness> find_3ppo_triple(const FiniteGroup &G) {
  if (G.prime_divisors().size() < 3) return std::nullopt;
  auto pp_order = candidates_by_key(
      G, [](std::uint64_t o) { return prime_power_base(o) != 0; });
  return first_triple(
      G, pp_order, pp_order,
      [](std::uint64_t ox, std::uint64_t oy, std::uint64_t oz) {
        const auto px = prime_power_base(ox), py = prime_power_base(oy),
                   pz = prime_power_base(oz);
        return px != py && pz != 0 && pz != px && pz != py;
      },
      TripleFlavor::ThreePPO);
}

bool is_3ppo(const FiniteGroup &G) { return find_3ppo_triple(G).has_value(); }

namespace {

struct ProductScan {
  std::uint64_t distinct = 0;
  bool collided = false;
  std::array<std::uint32_t, 3> first{}, second{};
};

/// Enumerates all |P1||P2||P3| products in canonical member order and
/// records the first repeated product.
ProductScan scan_products(const Subgroup &P1, const Subgroup &P2,
                          const Subgroup &P3) {
  const FiniteGroup &G = P1.parent();
  if (&P2.parent() != &G || &P3.parent() != &G)
    throw IncompatibleElementsError(
        "product-set factors belong to different parent groups");
  ProductScan scan;
  constexpr std::uint64_t kNone = ~0ull;
  // first (x1,x2,x3) hitting each product, packed as flat position
  std::vector<std::uint64_t> first_at(G.order(), kNone);
  std::uint64_t pos = 0;
  const auto &m2 = P2.members(), &m3 = P3.members();
  const std::uint64_t n2 = m2.size(), n3 = m3.size();
  for (auto a : P1.members()) {
    for (auto b : m2) {
      const std::uint32_t ab = G.product(a, b);
      for (auto c : m3) {
        const std::uint32_t abc = G.product(ab, c);
        if (first_at[abc] == kNone) {
          first_at[abc] = pos;
          ++scan.distinct;
        } else if (!scan.collided) {
          scan.collided = true;
          const std::uint64_t f = first_at[abc];
          scan.first = {P1.members()[f / (n2 * n3)], m2[(f / n3) % n2],
                        m3[f % n3]};
          scan.second = {a, b, c};
        }
        ++pos;
      }
    }
  }
  return scan;
}

} // namespace

std::uint64_t product_set_size(const Subgroup &P1, const Subgroup &P2,
                               const Subgroup &P3) {
  return scan_products(P1, P2, P3).distinct;
}

std::optional<SylowWitness> find_3ss_witness(const FiniteGroup &G,
                                             SearchMode mode) {
  const auto &primes = G.prime_divisors();
  if (primes.size() < 3) return std::nullopt;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      for (std::size_t k = j + 1; k < primes.size(); ++k) {
        const Subgroup P1 = sylow_subgroup(G, primes[i]);
        const Subgroup rep2 = sylow_subgroup(G, primes[j]);
        const Subgroup rep3 = sylow_subgroup(G, primes[k]);
        std::vector<Subgroup> c2, c3;
        if (mode == SearchMode::Exhaustive) {
          c2 = sylow_conjugates(G, rep2);
          c3 = sylow_conjugates(G, rep3);
        } else {
          c2.push_back(rep2);
          c3.push_back(rep3);
        }
        for (const auto &P2 : c2) {
          for (const auto &P3 : c3) {
            ProductScan scan = scan_products(P1, P2, P3);
            if (scan.distinct < P1.order() * P2.order() * P3.order()) {
              SylowWitness w{
                  {primes[i], primes[j], primes[k]},
                  P1,
                  P2,
                  P3,
                  scan.distinct,
                  {G.element(scan.first[0]), G.element(scan.first[1]),
                   G.element(scan.first[2])},
                  {G.element(scan.second[0]), G.element(scan.second[1]),
                   G.element(scan.second[2])}};
              validate_witness(G, w);
              return w;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_3ss(const FiniteGroup &G, SearchMode mode) {
  return find_3ss_witness(G, mode).has_value();
}

TripleWitness collision_to_ppo_triple(const SylowWitness &w) {
  const FiniteGroup &G = w.P1.parent();
  if (w.first == w.second)
    throw InvalidWitnessError("collision triples are equal");
  if (w.first[0] * w.first[1] * w.first[2] !=
      w.second[0] * w.second[1] * w.second[2])
    throw InvalidWitnessError("collision products differ");

  const GroupElement &x1 = w.first[0], &x2 = w.first[1], &x3 = w.first[2];
  const GroupElement &y1 = w.second[0], &y2 = w.second[1], &y3 = w.second[2];
  GroupElement a = y1.inverse() * x1;
  GroupElement b = x2 * y2.inverse();
  GroupElement c = y2 * x3 * y3.inverse() * y2.inverse();
  if (a.is_identity() || b.is_identity() || c.is_identity())
    throw InvalidWitnessError(
        "collision triples are not componentwise distinct");
  TripleWitness t{a, b, c, {a.order(), b.order(), c.order()},
                  TripleFlavor::ThreePPO, 0};
  validate_witness(G, t);
  return t;
}

SylowWitness ppo_triple_to_sylow_witness(const FiniteGroup &G,
                                         const TripleWitness &t) {
  if (t.flavor != TripleFlavor::ThreePPO && t.flavor != TripleFlavor::ThreePO)
    throw InvalidWitnessError(
        "witness conversion requires a 3PO or 3PPO triple");
  validate_witness(G, t); // throws for malformed input
  SylowWitness w{{prime_power_base(t.x.order()), prime_power_base(t.y.order()),
                  prime_power_base(t.z.order())},
                 sylow_containing(G, t.x),
                 sylow_containing(G, t.y),
                 sylow_containing(G, t.z),
                 0,
                 {t.x, t.y, t.z},
                 {G.identity(), G.identity(), G.identity()}};
  w.product_set_size = product_set_size(w.P1, w.P2, w.P3);
  validate_witness(G, w); // checks the strict inequality among the rest
  return w;
}

std::uint64_t brute_count_triples(const FiniteGroup &G,
                                  const ConjugacyClass &C1,
                                  const ConjugacyClass &C2,
                                  const ConjugacyClass &C3) {
  for (const ConjugacyClass *c : {&C1, &C2, &C3})
    if (c->parent != &G)
      throw NotInGroupError("conjugacy class " + c->label +
                            " does not belong to group " + G.name());
  std::vector<bool> in_c3(G.order(), false);
  for (auto m : C3.members) in_c3[m] = true;
  std::uint64_t count = 0;
  for (auto x : C1.members) {
    for (auto y : C2.members) {
      if (in_c3[G.inverse_index(G.product(x, y))]) ++count;
    }
  }
  return count;
}

} // namespace groupkit
