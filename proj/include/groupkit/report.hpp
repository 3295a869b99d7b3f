#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupkit/triples.hpp"

namespace groupkit {

/// Everything cmd_analyze reports about one group: the five condition
/// checks, the solvability evidence, cross-check flags and per-check
/// timings. consistencyFlags empty means the expected implication chain and
/// the 3PPO = 3SS equivalence hold for this group.
struct ConditionReport {
  std::string group_name;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> prime_divisors;

  bool solvable = false;
  std::vector<std::uint64_t> derived_series_orders;

  std::optional<TripleWitness> thompson;
  std::optional<TripleWitness> kaplan_levy;
  std::optional<TripleWitness> three_po;
  std::optional<TripleWitness> three_ppo;
  std::optional<SylowWitness> three_ss;

  /// Notes on vacuously false conditions (fewer than three prime divisors).
  std::vector<std::string> notes;
  std::vector<std::string> consistency_flags;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool is_3po() const { return three_po.has_value(); }
  bool is_3ppo() const { return three_ppo.has_value(); }
  bool is_3ss() const { return three_ss.has_value(); }
};

/// Runs every check on G and fills in the consistency flags.
ConditionReport analyze_group(const FiniteGroup &G,
                              SearchMode mode = SearchMode::Exhaustive);

nlohmann::json element_to_json(const GroupElement &e);
nlohmann::json witness_to_json(const TripleWitness &w);
nlohmann::json witness_to_json(const SylowWitness &w);
nlohmann::json report_to_json(const ConditionReport &r);

std::string report_to_text(const ConditionReport &r);

/// One row of a catalog scan.
struct ScanRow {
  std::string name;
  std::optional<ConditionReport> report; // absent when the entry errored
  std::string error;
  std::vector<std::string> alarms; // open-question counterexample alarms
  std::optional<bool> expected_solvable;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  bool all_consistent = true; // no flags, no alarms, no errors
};

nlohmann::json scan_to_json(const ScanResult &s);
std::string scan_to_text(const ScanResult &s);

} // namespace groupkit
