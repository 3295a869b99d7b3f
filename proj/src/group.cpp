#include "groupkit/group.hpp"

#include <algorithm>
#include <numeric>

namespace groupkit {

std::optional<std::uint32_t> FiniteGroup::index_of(
    const GroupElement &e) const {
  auto it = index_.find(e.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FiniteGroup::require_index(const GroupElement &e) const {
  auto idx = index_of(e);
  if (!idx)
    throw NotInGroupError("element " + e.to_string() +
                          " is not a member of group " + name_);
  return *idx;
}

std::uint32_t FiniteGroup::product(std::uint32_t a, std::uint32_t b) const {
  return index_.at((elements_[a] * elements_[b]).key());
}

std::uint64_t FiniteGroup::p_part(std::uint64_t p) const {
  std::uint64_t n = order();
  if (n % p != 0)
    throw PrimeNotDividingError("prime " + std::to_string(p) +
                                " does not divide the order of " + name_);
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

FiniteGroup generate_group(std::string name, const GroupShape &shape,
                           std::vector<GroupElement> generators,
                           std::uint64_t cap) {
  for (const auto &g : generators)
    if (!shape.matches(g))
      throw IncompatibleElementsError(
          "generator " + g.to_string() +
          " does not match the declared group shape");

  FiniteGroup G;
  G.name_ = std::move(name);
  G.shape_ = shape;
  G.generators_ = std::move(generators);

  auto push = [&](GroupElement e) -> bool {
    auto key = e.key();
    if (G.index_.contains(key)) return false;
    if (G.elements_.size() >= cap)
      throw OrderCapExceededError("group closure for " + G.name_ +
                                      " exceeds the order cap " +
                                      std::to_string(cap),
                                  cap);
    G.index_.emplace(std::move(key),
                     static_cast<std::uint32_t>(G.elements_.size()));
    G.elements_.push_back(std::move(e));
    return true;
  };

  push(shape.identity());
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto &gen : G.generators_) {
      // copy: push may reallocate elements_
      GroupElement e = G.elements_[head];
      push(e * gen);
    }
  }

  const auto n = static_cast<std::uint32_t>(G.elements_.size());

  G.inverses_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    G.inverses_[i] = G.index_.at(G.elements_[i].inverse().key());

  // element orders via the divisors of |G| (Lagrange), ascending
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  G.orders_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (auto d : divisors) {
      if (G.elements_[i].power(d).is_identity()) {
        G.orders_[i] = d;
        break;
      }
    }
  }

  G.by_key_.resize(n);
  std::iota(G.by_key_.begin(), G.by_key_.end(), 0u);
  std::sort(G.by_key_.begin(), G.by_key_.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return G.elements_[a] < G.elements_[b];
            });
  G.key_rank_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) G.key_rank_[G.by_key_[r]] = r;

  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    G.prime_divisors_.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) G.prime_divisors_.push_back(m);

  return G;
}

} // namespace groupkit
