#include "groupkit/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

namespace groupkit {

using nlohmann::json;

namespace {

double run_timed(std::vector<std::pair<std::string, double>> &timings,
                 const std::string &name, const std::function<void()> &fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  timings.emplace_back(name, ms);
  return ms;
}

std::string orders_csv(const std::vector<std::uint64_t> &v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " -> " : "") << v[i];
  return os.str();
}

} // namespace

ConditionReport analyze_group(const FiniteGroup &G, SearchMode mode) {
  ConditionReport r;
  r.group_name = G.name();
  r.order = G.order();
  r.prime_divisors = G.prime_divisors();

  run_timed(r.timings_ms, "solvable", [&] {
    auto s = is_solvable(G);
    r.solvable = s.solvable;
    r.derived_series_orders = s.series_orders;
  });
  run_timed(r.timings_ms, "thompson",
            [&] { r.thompson = find_thompson_triple(G); });
  run_timed(r.timings_ms, "kaplan-levy",
            [&] { r.kaplan_levy = find_kaplan_levy_triple(G); });
  run_timed(r.timings_ms, "3po", [&] { r.three_po = find_3po_triple(G); });
  run_timed(r.timings_ms, "3ppo", [&] { r.three_ppo = find_3ppo_triple(G); });
  run_timed(r.timings_ms, "3ss",
            [&] { r.three_ss = find_3ss_witness(G, mode); });

  if (r.prime_divisors.size() < 3)
    r.notes.push_back(
        "fewer than three distinct primes divide the order; 3PO, 3PPO and "
        "3SS are reported false rather than as errors");

  // expected implications between the checks
  if (r.is_3po() && !r.is_3ppo())
    r.consistency_flags.push_back("3po holds but 3ppo does not");
  if (r.is_3ppo() && !r.thompson)
    r.consistency_flags.push_back("3ppo holds but no thompson triple found");
  if (r.thompson.has_value() == r.solvable)
    r.consistency_flags.push_back(
        "thompson-triple presence does not equal nonsolvability");
  if (r.is_3ppo() != r.is_3ss())
    r.consistency_flags.push_back("3ppo and 3ss disagree");
  if (!r.solvable && !r.kaplan_levy)
    r.consistency_flags.push_back(
        "nonsolvable group without a kaplan-levy triple");

  return r;
}

json element_to_json(const GroupElement &e) {
  json j;
  j["display"] = e.to_string();
  if (e.is_permutation()) {
    j["kind"] = "permutation";
    j["degree"] = e.degree();
    std::vector<std::uint32_t> images;
    for (auto v : e.data()) images.push_back(v + 1);
    j["images"] = images;
  } else {
    j["kind"] = "matrix";
    j["dimension"] = e.degree();
    j["modulus"] = e.modulus();
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint32_t i = 0; i < e.degree(); ++i)
      rows.emplace_back(e.data().begin() + i * e.degree(),
                        e.data().begin() + (i + 1) * e.degree());
    j["entries"] = rows;
  }
  return j;
}

json witness_to_json(const TripleWitness &w) {
  json j;
  j["flavor"] = flavor_name(w.flavor);
  j["x"] = element_to_json(w.x);
  j["y"] = element_to_json(w.y);
  j["z"] = element_to_json(w.z);
  j["orders"] = w.orders;
  if (w.odd_prime != 0) j["oddPrime"] = w.odd_prime;
  return j;
}

json witness_to_json(const SylowWitness &w) {
  json j;
  j["primes"] = w.primes;
  j["sylowOrders"] = {w.P1.order(), w.P2.order(), w.P3.order()};
  j["productSetSize"] = w.product_set_size;
  j["orderProduct"] = w.order_product();
  j["collision"]["first"] = {element_to_json(w.first[0]),
                             element_to_json(w.first[1]),
                             element_to_json(w.first[2])};
  j["collision"]["second"] = {element_to_json(w.second[0]),
                              element_to_json(w.second[1]),
                              element_to_json(w.second[2])};
  return j;
}

json report_to_json(const ConditionReport &r) {
  json j;
  j["groupName"] = r.group_name;
  j["order"] = r.order;
  j["primeDivisors"] = r.prime_divisors;
  j["solvable"] = {{"value", r.solvable},
                   {"derivedSeriesOrders", r.derived_series_orders}};
  auto maybe_triple = [](const std::optional<TripleWitness> &w) {
    json o;
    o["present"] = w.has_value();
    if (w) o["witness"] = witness_to_json(*w);
    return o;
  };
  j["thompson"] = maybe_triple(r.thompson);
  j["kaplanLevy"] = maybe_triple(r.kaplan_levy);
  j["threePO"] = maybe_triple(r.three_po);
  j["threePPO"] = maybe_triple(r.three_ppo);
  json ss;
  ss["present"] = r.three_ss.has_value();
  if (r.three_ss) ss["witness"] = witness_to_json(*r.three_ss);
  j["threeSS"] = ss;
  j["notes"] = r.notes;
  j["consistencyFlags"] = r.consistency_flags;
  json t = json::object();
  for (const auto &[name, ms] : r.timings_ms) t[name] = ms;
  j["timingsMs"] = t;
  return j;
}

namespace {

std::string triple_summary(const std::optional<TripleWitness> &w) {
  if (!w) return "absent";
  std::ostringstream os;
  os << "present  orders (" << w->orders[0] << ", " << w->orders[1] << ", "
     << w->orders[2] << ")";
  if (w->odd_prime) os << "  p = " << w->odd_prime;
  os << "  x = " << w->x.to_string() << "  y = " << w->y.to_string()
     << "  z = " << w->z.to_string();
  return os.str();
}

} // namespace

std::string report_to_text(const ConditionReport &r) {
  std::ostringstream os;
  os << "group " << r.group_name << "  order " << r.order << "  primes {";
  for (std::size_t i = 0; i < r.prime_divisors.size(); ++i)
    os << (i ? ", " : "") << r.prime_divisors[i];
  os << "}\n";
  os << "  solvable:     " << (r.solvable ? "yes" : "no")
     << "  (derived series " << orders_csv(r.derived_series_orders) << ")\n";
  os << "  thompson:     " << triple_summary(r.thompson) << "\n";
  os << "  kaplan-levy:  " << triple_summary(r.kaplan_levy) << "\n";
  os << "  3PO:          " << triple_summary(r.three_po) << "\n";
  os << "  3PPO:         " << triple_summary(r.three_ppo) << "\n";
  if (r.three_ss) {
    const auto &w = *r.three_ss;
    os << "  3SS:          present  primes (" << w.primes[0] << ", "
       << w.primes[1] << ", " << w.primes[2] << ")  |P1 P2 P3| = "
       << w.product_set_size << " < " << w.order_product()
       << " = |P1||P2||P3|\n";
  } else {
    os << "  3SS:          absent\n";
  }
  for (const auto &n : r.notes) os << "  note: " << n << "\n";
  if (r.consistency_flags.empty()) {
    os << "  consistency:  ok\n";
  } else {
    for (const auto &f : r.consistency_flags) os << "  FLAG: " << f << "\n";
  }
  return os.str();
}

json scan_to_json(const ScanResult &s) {
  json rows = json::array();
  for (const auto &row : s.rows) {
    json r;
    r["name"] = row.name;
    if (row.report) r["report"] = report_to_json(*row.report);
    if (!row.error.empty()) r["error"] = row.error;
    r["alarms"] = row.alarms;
    if (row.expected_solvable)
      r["expectedSolvable"] = *row.expected_solvable;
    rows.push_back(std::move(r));
  }
  json j;
  j["rows"] = std::move(rows);
  j["allConsistent"] = s.all_consistent;
  return j;
}

std::string scan_to_text(const ScanResult &s) {
  std::ostringstream os;
  os << "group       order  solvable  thompson  3PO  3PPO  3SS  flags\n";
  auto yn = [](bool b) { return b ? "yes" : "no "; };
  for (const auto &row : s.rows) {
    char line[256];
    if (!row.report) {
      std::snprintf(line, sizeof(line), "%-10s  ERROR: %s\n",
                    row.name.c_str(), row.error.c_str());
      os << line;
      continue;
    }
    const auto &r = *row.report;
    std::snprintf(line, sizeof(line),
                  "%-10s  %5llu  %-8s  %-8s  %-3s  %-4s  %-3s  %s\n",
                  row.name.c_str(),
                  static_cast<unsigned long long>(r.order), yn(r.solvable),
                  yn(r.thompson.has_value()), yn(r.is_3po()), yn(r.is_3ppo()),
                  yn(r.is_3ss()),
                  r.consistency_flags.empty() && row.alarms.empty() ? "-"
                                                                    : "!");
    os << line;
    for (const auto &f : r.consistency_flags)
      os << "    FLAG(" << row.name << "): " << f << "\n";
    for (const auto &a : row.alarms)
      os << "    COUNTEREXAMPLE(" << row.name << "): " << a << "\n";
  }
  os << (s.all_consistent
             ? "scan: all rows consistent, no counterexample alarms\n"
             : "scan: INCONSISTENCIES OR ALARMS FOUND\n");
  return os.str();
}

} // namespace groupkit
