#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "groupkit/io.hpp"
#include "groupkit/structure.hpp"
#include "oracles.hpp"

using namespace groupkit;

namespace {

const std::string kData = GROUPKIT_DATA_DIR;

FiniteGroup load(const std::string &name) {
  return load_group(kData + "/groups/" + name);
}

std::multiset<std::uint64_t> class_sizes(const FiniteGroup &G) {
  std::multiset<std::uint64_t> sizes;
  for (const auto &c : conjugacy_classes(G)) sizes.insert(c.size);
  return sizes;
}

} // namespace

TEST_CASE("conjugacy classes of S3") {
  auto G = load("s3.group");
  auto classes = conjugacy_classes(G);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].label == "1A");
  CHECK(classes[0].size == 1);
  CHECK(classes[1].element_order == 2);
  CHECK(classes[1].size == 3);
  CHECK(classes[2].element_order == 3);
  CHECK(classes[2].size == 2);
}

TEST_CASE("SL(2,5) has exactly 9 classes") {
  auto G = load("sl25.group");
  auto classes = conjugacy_classes(G);
  CHECK(classes.size() == 9);
  // orders with multiplicity: 1,2,3,4,5,5,6,10,10
  std::multiset<std::uint64_t> orders;
  for (const auto &c : classes) orders.insert(c.element_order);
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 3, 4, 5, 5, 6, 10, 10});
}

TEST_CASE("A5 class sizes against the pairwise-conjugacy oracle") {
  auto G = load("a5.group");
  CHECK(class_sizes(G) == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});
  auto naive = testing::naive_classes(G);
  std::multiset<std::uint64_t> naive_sizes;
  for (const auto &c : naive) naive_sizes.insert(c.size());
  CHECK(class_sizes(G) == naive_sizes);
}

TEST_CASE("classes partition the group and match the class equation") {
  for (const char *name : {"s4.group", "sl25.group", "a5.group"}) {
    auto G = load(name);
    auto classes = conjugacy_classes(G);
    std::uint64_t total = 0;
    std::vector<bool> seen(G.order(), false);
    for (const auto &c : classes) {
      total += c.size;
      CHECK(c.size == c.members.size());
      for (auto m : c.members) {
        CHECK(!seen[m]);
        seen[m] = true;
        CHECK(G.order_of(m) == c.element_order);
      }
      CHECK(c.size * centralizer_order(G, c.representative_element()) ==
            G.order());
      // members are pairwise conjugate: spot-check against the rep's orbit
      CHECK(G.order_of(c.representative) == c.element_order);
    }
    CHECK(total == G.order());
  }
}

TEST_CASE("class labels are deterministic") {
  auto G = load("sl25.group");
  auto classes = conjugacy_classes(G);
  std::vector<std::string> labels;
  for (const auto &c : classes) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"1A", "2A", "3A", "4A", "5A", "5B",
                                           "6A", "10A", "10B"});
}

TEST_CASE("centralizer orders") {
  auto S3 = load("s3.group");
  CHECK(centralizer_order(S3, S3.identity()) == 6);
  CHECK(centralizer_order(S3, parse_cycles("(1 2)", 3)) == 2);

  auto G = load("sl25.group");
  auto minus_identity = GroupElement::matrix(2, 5, {4, 0, 0, 4});
  CHECK(centralizer_order(G, minus_identity) == 120); // central involution

  CHECK_THROWS_AS(centralizer_order(S3, parse_cycles("(1 2 3 4)", 4)),
                  NotInGroupError);
}

TEST_CASE("subgroup_generated") {
  auto A5 = load("a5.group");
  CHECK(subgroup_generated(A5, {}).order() == 1);
  CHECK(subgroup_generated(A5, {parse_cycles("(1 2 3 4 5)", 5)}).order() == 5);

  auto S4 = load("s4.group");
  // closure of all commutators of S4 is A4, per the independent oracle
  auto commutator_keys =
      testing::naive_commutator_subgroup(S4.elements(), S4.identity());
  CHECK(commutator_keys.size() == 12);
  CHECK(derived_subgroup(S4).order() == 12);

  CHECK_THROWS_AS(subgroup_generated(S4, {parse_cycles("(1 2 3 4 5)", 5)}),
                  NotInGroupError);
}

TEST_CASE("derived subgroups") {
  auto C6 = load("c6.group");
  CHECK(derived_subgroup(C6).order() == 1); // abelian
  auto S3 = load("s3.group");
  CHECK(derived_subgroup(S3).order() == 3);
  auto A5 = load("a5.group");
  CHECK(derived_subgroup(A5).order() == 60); // perfect
}

TEST_CASE("solvability and the derived series") {
  auto S4 = load("s4.group");
  auto s = is_solvable(S4);
  CHECK(s.solvable);
  CHECK(s.series_orders == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(s.series_orders == testing::naive_derived_series(S4));

  auto sl25 = is_solvable(load("sl25.group"));
  CHECK(!sl25.solvable);
  auto a5 = is_solvable(load("a5.group"));
  CHECK(!a5.solvable);
  CHECK(a5.series_orders == std::vector<std::uint64_t>{60, 60});
}

TEST_CASE("normalizers") {
  auto S3 = load("s3.group");
  auto a3 = subgroup_generated(S3, {parse_cycles("(1 2 3)", 3)});
  CHECK(normalizer(S3, a3).order() == 6); // normal subgroup
  auto h = subgroup_generated(S3, {parse_cycles("(1 2)", 3)});
  auto n = normalizer(S3, h);
  CHECK(n.order() == 2);
  CHECK(n.same_member_set(h));

  auto A5 = load("a5.group");
  auto P5 = sylow_subgroup(A5, 5);
  CHECK(normalizer(A5, P5).order() == 10);
  CHECK(normalizer(A5, P5).order() == testing::naive_normalizer_order(A5, P5));
}

TEST_CASE("sylow subgroups") {
  auto S4 = load("s4.group");
  CHECK(sylow_subgroup(S4, 2).order() == 8);
  CHECK(sylow_subgroup(S4, 3).order() == 3);
  auto G = load("sl25.group");
  CHECK(sylow_subgroup(G, 5).order() == 5);
  CHECK(sylow_subgroup(G, 2).order() == 8);
  auto A5 = load("a5.group");
  CHECK(sylow_subgroup(A5, 2).order() == 4);
  CHECK_THROWS_AS(sylow_subgroup(A5, 7), PrimeNotDividingError);
  CHECK_THROWS_AS(sylow_subgroup(A5, 4), PrimeNotDividingError);

  // every member is a p-element
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    auto P = sylow_subgroup(A5, p);
    CHECK(P.order() == A5.p_part(p));
    for (auto m : P.members()) {
      if (A5.order_of(m) != 1) CHECK(prime_power_base(A5.order_of(m)) == p);
    }
  }
}

TEST_CASE("sylow_containing") {
  auto G = load("sl25.group");
  auto minus_identity = GroupElement::matrix(2, 5, {4, 0, 0, 4});
  auto P = sylow_containing(G, minus_identity);
  CHECK(P.order() == 8);
  CHECK(P.contains(G.require_index(minus_identity)));

  auto A5 = load("a5.group");
  auto x = parse_cycles("(1 2 3 4 5)", 5);
  auto P5 = sylow_containing(A5, x);
  CHECK(P5.order() == 5);
  CHECK(P5.contains(A5.require_index(x)));

  auto S4 = load("s4.group");
  auto t = parse_cycles("(1 2)", 4);
  auto P2 = sylow_containing(S4, t);
  CHECK(P2.order() == 8);
  CHECK(P2.contains(S4.require_index(t)));

  CHECK_THROWS_AS(sylow_containing(S4, S4.identity()), NotPElementError);
  auto C6 = load("c6.group");
  CHECK_THROWS_AS(sylow_containing(C6, parse_cycles("(1 2 3 4 5 6)", 6)),
                  NotPElementError); // order 6 is not a prime power
}

TEST_CASE("sylow conjugates") {
  auto C6 = load("c6.group");
  auto P = sylow_subgroup(C6, 3);
  CHECK(sylow_conjugates(C6, P).size() == 1); // normal

  auto A5 = load("a5.group");
  CHECK(sylow_conjugates(A5, sylow_subgroup(A5, 5)).size() == 6);
  auto S4 = load("s4.group");
  CHECK(sylow_conjugates(S4, sylow_subgroup(S4, 2)).size() == 3);

  // Sylow count = 1 mod p, all conjugates have equal order
  for (const char *name : {"a5.group", "s4.group", "sl25.group"}) {
    auto G = load(name);
    for (auto p : G.prime_divisors()) {
      auto Pp = sylow_subgroup(G, p);
      auto conj = sylow_conjugates(G, Pp);
      CHECK(conj.size() % p == 1);
      for (const auto &Q : conj) CHECK(Q.order() == Pp.order());
    }
  }
}

TEST_CASE("simplicity of the catalog entries matches the oracle") {
  // expected simple: A5 only among these (desk-scale spot check)
  CHECK(!testing::naive_has_proper_normal_subgroup(load("a5.group")));
  CHECK(testing::naive_has_proper_normal_subgroup(load("s4.group")));
  CHECK(testing::naive_has_proper_normal_subgroup(load("sl25.group")));
  CHECK(testing::naive_has_proper_normal_subgroup(load("c6.group")));
}
