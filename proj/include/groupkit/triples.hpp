#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "groupkit/structure.hpp"

namespace groupkit {

enum class TripleFlavor {
  Thompson,  // pairwise coprime orders
  KaplanLevy, // 2-power, odd-p-power, coprime to 2p
  ThreePO,   // three distinct prime orders
  ThreePPO,  // prime-power orders for three distinct primes
};

const char *flavor_name(TripleFlavor f);

/// Three nontrivial elements with x*y*z = identity whose orders satisfy the
/// flavor's constraint.
struct TripleWitness {
  GroupElement x, y, z;
  std::array<std::uint64_t, 3> orders{};
  TripleFlavor flavor = TripleFlavor::Thompson;
  std::uint64_t odd_prime = 0; // the p of a Kaplan-Levy witness, else 0
};

/// Sylow subgroups for three distinct primes whose product set is strictly
/// smaller than the order product, plus one concrete collision: two
/// componentwise distinct triples with equal products.
struct SylowWitness {
  std::array<std::uint64_t, 3> primes{};
  Subgroup P1, P2, P3;
  std::uint64_t product_set_size = 0;
  std::array<GroupElement, 3> first;  // (x1, x2, x3)
  std::array<GroupElement, 3> second; // (y1, y2, y3)

  std::uint64_t order_product() const {
    return P1.order() * P2.order() * P3.order();
  }
};

enum class SearchMode {
  Exhaustive, // all conjugate pairs (P2, P3)
  Fast,       // canonical representatives only
};

/// Revalidates a witness against its own invariants; throws
/// InvalidWitnessError with a description of the violated condition.
void validate_witness(const FiniteGroup &G, const TripleWitness &w);
void validate_witness(const FiniteGroup &G, const SylowWitness &w);

/// Canonically first triple of nontrivial elements with pairwise coprime
/// orders and x*y*z = identity (x, then y in canonical key order; z is
/// computed, never searched).
std::optional<TripleWitness> find_thompson_triple(const FiniteGroup &G);

/// Canonically first triple with order(x) a power of 2, order(y) a power of
/// an odd prime p, order(z) > 1 coprime to 2p; odd primes p are tried in
/// increasing order.
std::optional<TripleWitness> find_kaplan_levy_triple(const FiniteGroup &G);

/// Canonically first triple whose orders are three distinct primes.
std::optional<TripleWitness> find_3po_triple(const FiniteGroup &G);
bool is_3po(const FiniteGroup &G);

/// Canonically first triple whose orders are powers of three distinct
/// primes.
std::optional<TripleWitness> find_3ppo_triple(const FiniteGroup &G);
bool is_3ppo(const FiniteGroup &G);

/// |{ x1*x2*x3 : xi in Pi }| by exhaustive enumeration. The subgroups must
/// share a parent group.
std::uint64_t product_set_size(const Subgroup &P1, const Subgroup &P2,
                               const Subgroup &P3);

/// Searches prime triples p1 < p2 < p3 dividing |G|; P1 is the canonical
/// Sylow p1-subgroup (simultaneous conjugation preserves the product-set
/// size), P2 and P3 range over all conjugates (exhaustive mode) or just the
/// canonical representatives (fast mode). Returns the first witness in
/// deterministic order.
std::optional<SylowWitness> find_3ss_witness(
    const FiniteGroup &G, SearchMode mode = SearchMode::Exhaustive);
bool is_3ss(const FiniteGroup &G, SearchMode mode = SearchMode::Exhaustive);

/// The constructive direction 3SS -> 3PPO: from a collision
/// x1*x2*x3 = y1*y2*y3 builds the triple
/// (y1^-1*x1, x2*y2^-1, y2*x3*y3^-1*y2^-1) and revalidates it.
TripleWitness collision_to_ppo_triple(const SylowWitness &w);

/// The constructive direction 3PPO -> 3SS: P_i = sylow_containing(G, x_i),
/// collision ((x1,x2,x3), (1,1,1)); verifies the strict inequality.
SylowWitness ppo_triple_to_sylow_witness(const FiniteGroup &G,
                                         const TripleWitness &t);

/// #{(x,y,z) in C1 x C2 x C3 : x*y*z = identity} by direct enumeration:
/// for each (x, y), membership of (x*y)^-1 in C3 is tested.
std::uint64_t brute_count_triples(const FiniteGroup &G,
                                  const ConjugacyClass &C1,
                                  const ConjugacyClass &C2,
                                  const ConjugacyClass &C3);

} // namespace groupkit
