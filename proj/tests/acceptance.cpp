// Acceptance suite: runs every advertised guarantee end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "groupkit/catalog.hpp"
#include "groupkit/character_table.hpp"
#include "groupkit/cli.hpp"
#include "groupkit/report.hpp"

using namespace groupkit;

namespace {

const std::string kData = GROUPKIT_DATA_DIR;

int failures = 0;

void criterion(int number, const std::string &title,
               const std::function<void()> &body, double budget_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception &e) {
    error = e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bool ok = error.empty();
  if (ok && budget_seconds > 0 && seconds > budget_seconds) {
    ok = false;
    error = "exceeded the runtime budget of " +
            std::to_string(budget_seconds) + " s";
  }
  if (!ok) ++failures;
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title
       << "  (" << seconds << " s)";
  if (!ok) line << "\n      " << error;
  std::cout << line.str() << std::endl;
}

void require(bool cond, const std::string &msg) {
  if (!cond) throw std::runtime_error(msg);
}

const ConjugacyClass &by_label(const std::vector<ConjugacyClass> &classes,
                               const std::string &label) {
  for (const auto &c : classes)
    if (c.label == label) return c;
  throw std::runtime_error("no class labeled " + label);
}

} // namespace

int main() {
  // shared fixtures
  FiniteGroup sl25 = load_group(kData + "/groups/sl25.group");
  auto sl25_classes = conjugacy_classes(sl25);
  CharacterTable t2a5 = CharacterTable::load_file(kData + "/tables/2a5.table");

  criterion(
      1, "SL(2,5) admits no triple of distinct prime orders",
      [&] {
        const auto &c2 = by_label(sl25_classes, "2A");
        const auto &c3 = by_label(sl25_classes, "3A");
        require(brute_count_triples(sl25, c2, c3,
                                    by_label(sl25_classes, "5A")) == 0,
                "brute count over (2A, 3A, 5A) is not 0");
        require(brute_count_triples(sl25, c2, c3,
                                    by_label(sl25_classes, "5B")) == 0,
                "brute count over (2A, 3A, 5B) is not 0");
        auto m = match_classes(sl25, sl25_classes, t2a5);
        auto g2t = m.group_to_table();
        const auto ti = g2t[1]; // 2A is the second computed class
        require(sl25_classes[1].label == "2A", "unexpected class ordering");
        for (const char *l5 : {"5A", "5B"}) {
          const auto tk = g2t[&by_label(sl25_classes, l5) - &sl25_classes[0]];
          const auto tj = g2t[&by_label(sl25_classes, "3A") -
                              &sl25_classes[0]];
          require(t2a5.structure_constant_count(ti, tj, tk) == 0,
                  "character route is not exactly 0");
        }
        require(!is_3po(sl25), "is_3po(SL(2,5)) is not false");
      },
      5.0);

  criterion(
      2, "character sums on the 2.A5 table vanish term-for-term",
      [&] {
        const auto c2 = *t2a5.class_by_label("1A_1");
        const auto c3 = *t2a5.class_by_label("3A_0");
        const auto c5a = *t2a5.class_by_label("5A_0");
        const auto c5b = *t2a5.class_by_label("5B_0");
        require(t2a5.character_sum(c2, c3, c5a).is_zero(),
                "sum over (1A_1, 3A_0, 5A_0) is not exactly 0");
        require(t2a5.character_sum(c2, c3, c5b).is_zero(),
                "sum over (1A_1, 3A_0, 5B_0) is not exactly 0");
        auto terms = t2a5.character_sum_terms(c2, c3, c5a);
        const std::vector<AlgebraicValue> golden = {
            AlgebraicValue(1),
            AlgebraicValue(0),
            AlgebraicValue(0),
            AlgebraicValue(-1),
            AlgebraicValue(0),
            AlgebraicValue::parse("(-1+r5)/2"),
            AlgebraicValue::parse("(-1-r5)/2"),
            AlgebraicValue(1),
            AlgebraicValue(0)};
        require(terms.size() == golden.size(), "wrong number of terms");
        for (std::size_t k = 0; k < golden.size(); ++k)
          require(terms[k] == golden[k],
                  "term " + std::to_string(k + 1) + " is " + terms[k].str() +
                      ", expected " + golden[k].str());
      },
      0.0);

  criterion(
      3, "3PPO equals 3SS on all 12 catalog groups, conversions round-trip",
      [&] {
        for (const auto &entry : builtin_catalog()) {
          FiniteGroup G = entry.generate();
          auto ppo = find_3ppo_triple(G);
          auto ss = find_3ss_witness(G, SearchMode::Exhaustive);
          require(ppo.has_value() == ss.has_value(),
                  entry.name + ": 3PPO and 3SS disagree");
          if (ss) {
            TripleWitness from_collision = collision_to_ppo_triple(*ss);
            validate_witness(G, from_collision); // revalidates as 3PPO
          }
          if (ppo) {
            SylowWitness w = ppo_triple_to_sylow_witness(G, *ppo);
            require(w.product_set_size < w.order_product(),
                    entry.name + ": no strict inequality");
          }
        }
      },
      120.0);

  criterion(
      4, "thompson-triple presence equals nonsolvability on the catalog",
      [&] {
        int solvable_absent = 0, nonsolvable_present = 0;
        for (const auto &entry : builtin_catalog()) {
          FiniteGroup G = entry.generate();
          const bool solvable = is_solvable(G).solvable;
          const bool present = find_thompson_triple(G).has_value();
          require(present == !solvable, entry.name + ": mismatch");
          if (solvable && !present) ++solvable_absent;
          if (!solvable && present) ++nonsolvable_present;
        }
        require(solvable_absent == 6, "expected 6 solvable controls");
        require(nonsolvable_present == 6, "expected 6 nonsolvable groups");
      },
      0.0);

  criterion(
      5, "kaplan-levy triples for nonsolvable groups; simple groups are 3PO",
      [&] {
        for (const auto &entry : builtin_catalog()) {
          FiniteGroup G = entry.generate();
          if (!is_solvable(G).solvable) {
            auto w = find_kaplan_levy_triple(G);
            require(w.has_value(), entry.name + ": no kaplan-levy triple");
            require(prime_power_base(w->orders[0]) == 2,
                    entry.name + ": order(x) is not a 2-power");
            const auto p = prime_power_base(w->orders[1]);
            require(p > 2, entry.name + ": order(y) is not an odd p-power");
            require(w->orders[2] > 1 &&
                        std::gcd(w->orders[2], 2 * p) == 1,
                    entry.name + ": order(z) is not coprime to 2p");
          }
          if (entry.expected_simple)
            require(is_3po(G), entry.name + ": simple group is not 3PO");
        }
      },
      0.0);

  criterion(
      6, "every 3PPO witness of SL(2,5) has the order profile {4, 3, 5}",
      [&] {
        require(find_3ppo_triple(sl25).has_value(), "no 3PPO witness");
        // enumerate all valid 3PPO triples and collect their profiles
        std::set<std::multiset<std::uint64_t>> profiles;
        std::vector<std::uint32_t> pp;
        for (auto idx : sl25.by_key())
          if (prime_power_base(sl25.order_of(idx)) != 0) pp.push_back(idx);
        for (auto x : pp) {
          const auto px = prime_power_base(sl25.order_of(x));
          for (auto y : pp) {
            const auto py = prime_power_base(sl25.order_of(y));
            if (py == px) continue;
            const auto z = sl25.inverse_index(sl25.product(x, y));
            const auto pz = prime_power_base(sl25.order_of(z));
            if (pz == 0 || pz == px || pz == py) continue;
            profiles.insert({sl25.order_of(x), sl25.order_of(y),
                             sl25.order_of(z)});
          }
        }
        require(profiles.size() == 1, "more than one order profile exists");
        require(*profiles.begin() == std::multiset<std::uint64_t>{3, 4, 5},
                "profile differs from {4, 3, 5}");
      },
      10.0);

  criterion(
      7, "structure constants equal brute-force counts on all class triples",
      [&] {
        struct Pair {
          std::string group, table;
        };
        const Pair pairs[] = {
            {"sl25.group", "2a5.table"},
            {"a5.group", "a5.table"},
            {"s3.group", "s3.table"},
            {"s4.group", "s4.table"}};
        for (const auto &p : pairs) {
          FiniteGroup G = load_group(kData + "/groups/" + p.group);
          auto classes = conjugacy_classes(G);
          auto T = CharacterTable::load_file(kData + "/tables/" + p.table);
          auto m = match_classes(G, classes, T);
          const std::size_t n = T.class_count();
          // precompute all brute counts in one |G|^2 sweep
          std::vector<std::size_t> class_of(G.order());
          for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto idx : classes[c].members) class_of[idx] = c;
          std::vector<std::uint64_t> counts(n * n * n, 0);
          for (std::uint32_t x = 0; x < G.order(); ++x)
            for (std::uint32_t y = 0; y < G.order(); ++y) {
              const auto z = G.inverse_index(G.product(x, y));
              ++counts[(class_of[x] * n + class_of[y]) * n + class_of[z]];
            }
          for (const auto &bij : m.all_bijections) {
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                  require(T.structure_constant_count(i, j, k) ==
                              counts[(bij[i] * n + bij[j]) * n + bij[k]],
                          p.table + ": mismatch at (" +
                              T.classes()[i].label + ", " +
                              T.classes()[j].label + ", " +
                              T.classes()[k].label + ")");
          }
          // spot-check the per-op entry point against the sweep
          require(brute_count_triples(G, classes[0], classes[0], classes[0]) ==
                      counts[0],
                  "brute_count_triples disagrees with the sweep");
        }
      },
      60.0);

  criterion(
      8, "shipped tables validate; a mutated table is rejected",
      [&] {
        for (const char *t : {"2a5.table", "a5.table", "s3.table",
                              "s4.table"})
          CharacterTable::load_file(kData + "/tables/" + t); // throws if bad
        // perturb a single entry of the 2.A5 table
        std::ifstream in(kData + "/tables/2a5.table");
        std::stringstream ss;
        ss << in.rdbuf();
        auto doc = nlohmann::json::parse(ss.str());
        doc["characters"][4][2] = "2"; // was "1"
        bool rejected = false;
        try {
          CharacterTable::load(doc.dump());
        } catch (const TableInvalidError &) {
          rejected = true;
        }
        require(rejected, "perturbed table was accepted");
      },
      0.0);

  criterion(
      9, "catalog scan reports no open-question counterexamples and exits 0",
      [&] {
        std::ostringstream out, err;
        int code = run_cli({"--format", "structured", "scan"}, out, err);
        require(code == 0, "scan exited with status " + std::to_string(code));
        auto doc = nlohmann::json::parse(out.str());
        require(doc["scan"]["allConsistent"] == true, "scan inconsistent");
        require(doc["scan"]["rows"].size() == 12, "expected 12 rows");
        for (const auto &row : doc["scan"]["rows"]) {
          require(row["alarms"].empty(),
                  std::string(row["name"]) + " raised an alarm");
          const auto &r = row["report"];
          require(r["consistencyFlags"].empty(),
                  std::string(row["name"]) + " has consistency flags");
          const bool solvable = r["solvable"]["value"];
          const bool ppo = r["threePPO"]["present"];
          require(ppo == !solvable, "3PPO does not track nonsolvability");
        }
      },
      0.0);

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: FAILURES PRESENT")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
