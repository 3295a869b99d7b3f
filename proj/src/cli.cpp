#include "groupkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupkit/catalog.hpp"
#include "groupkit/character_table.hpp"
#include "groupkit/report.hpp"

namespace groupkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOptions {
  std::uint64_t max_order = kDefaultOrderCap;
  std::string mode = "exhaustive";
  std::string format = "text";
  std::string table_path;

  SearchMode search_mode() const {
    return mode == "fast" ? SearchMode::Fast : SearchMode::Exhaustive;
  }
  bool structured() const { return format == "structured"; }
};

void emit(std::ostream &out, const CommonOptions &opt, const json &doc,
          const std::string &text) {
  if (opt.structured())
    out << doc.dump(2) << "\n";
  else
    out << text;
}

json document(const std::string &command) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

/// Resolves one class selector against computed labels, then bare element
/// orders, then table labels (mapped back through the bijection).
std::size_t resolve_selector(const std::string &sel,
                             const std::vector<ConjugacyClass> &classes,
                             const CharacterTable *table,
                             const ClassMatching *matching) {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].label == sel) return c;
  if (!sel.empty() &&
      std::all_of(sel.begin(), sel.end(),
                  [](unsigned char ch) { return std::isdigit(ch); })) {
    const std::uint64_t order = std::stoull(sel);
    std::vector<std::size_t> hits;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c].element_order == order) hits.push_back(c);
    if (hits.size() == 1) return hits[0];
    if (hits.size() > 1)
      throw Error("class selector \"" + sel + "\" is ambiguous: " +
                  std::to_string(hits.size()) +
                  " classes have that element order; use a full label");
  }
  if (table && matching) {
    if (auto ti = table->class_by_label(sel))
      return matching->table_to_group[*ti];
  }
  throw Error("unknown class selector \"" + sel + "\"");
}

std::vector<std::string> split_csv(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int cmd_analyze(const std::string &path, const CommonOptions &opt,
                std::ostream &out) {
  FiniteGroup G = load_group(path, opt.max_order);
  ConditionReport r = analyze_group(G, opt.search_mode());
  json doc = document("analyze");
  doc["report"] = report_to_json(r);
  emit(out, opt, doc, report_to_text(r));
  return r.consistency_flags.empty() ? kExitHolds : kExitFails;
}

int cmd_check(const std::string &path, const std::string &condition,
              const CommonOptions &opt, std::ostream &out) {
  FiniteGroup G = load_group(path, opt.max_order);
  json doc = document("check");
  doc["condition"] = condition;
  doc["groupName"] = G.name();

  std::optional<TripleWitness> triple;
  std::optional<SylowWitness> sylow;
  std::string absent_reason;
  if (condition == "thompson") {
    triple = find_thompson_triple(G);
    absent_reason = "no triple of nontrivial pairwise-coprime orders";
  } else if (condition == "kl") {
    triple = find_kaplan_levy_triple(G);
    absent_reason = "no triple with a 2-power, an odd-prime-power and a "
                    "coprime order";
  } else if (condition == "3po") {
    triple = find_3po_triple(G);
    absent_reason = "no triple of distinct prime orders";
  } else if (condition == "3ppo") {
    triple = find_3ppo_triple(G);
    absent_reason = "no triple of prime-power orders for three distinct "
                    "primes";
  } else if (condition == "3ss") {
    sylow = find_3ss_witness(G, opt.search_mode());
    absent_reason = "no Sylow triple with a product set smaller than the "
                    "order product";
  } else {
    throw CLI::ValidationError("condition", "unknown condition \"" +
                                                condition + "\"");
  }

  const bool holds = triple.has_value() || sylow.has_value();
  doc["holds"] = holds;
  std::ostringstream text;
  if (triple) {
    doc["witness"] = witness_to_json(*triple);
    text << G.name() << ": " << condition << " holds\n"
         << "  x = " << triple->x.to_string() << "  (order "
         << triple->orders[0] << ")\n"
         << "  y = " << triple->y.to_string() << "  (order "
         << triple->orders[1] << ")\n"
         << "  z = " << triple->z.to_string() << "  (order "
         << triple->orders[2] << ")\n";
    if (triple->odd_prime) text << "  odd prime p = " << triple->odd_prime << "\n";
  } else if (sylow) {
    doc["witness"] = witness_to_json(*sylow);
    text << G.name() << ": 3ss holds\n"
         << "  primes (" << sylow->primes[0] << ", " << sylow->primes[1]
         << ", " << sylow->primes[2] << ")  |P1 P2 P3| = "
         << sylow->product_set_size << " < " << sylow->order_product()
         << " = |P1||P2||P3|\n"
         << "  collision: (" << sylow->first[0].to_string() << ", "
         << sylow->first[1].to_string() << ", " << sylow->first[2].to_string()
         << ") and (" << sylow->second[0].to_string() << ", "
         << sylow->second[1].to_string() << ", "
         << sylow->second[2].to_string() << ")\n";
  } else {
    doc["reason"] = absent_reason;
    text << G.name() << ": " << condition << " does not hold ("
         << absent_reason << ")\n";
  }
  emit(out, opt, doc, text.str());
  return holds ? kExitHolds : kExitFails;
}

int cmd_count_triples(const std::string &path, const std::string &classes_csv,
                      const std::string &method, const CommonOptions &opt,
                      std::ostream &out) {
  const bool want_brute = method == "brute" || method == "both";
  const bool want_char = method == "character" || method == "both";
  if (want_char && opt.table_path.empty())
    throw CLI::ValidationError(
        "--table", "method \"" + method + "\" needs a character table");

  FiniteGroup G = load_group(path, opt.max_order);
  auto classes = conjugacy_classes(G);

  std::optional<CharacterTable> table;
  std::optional<ClassMatching> matching;
  if (!opt.table_path.empty()) {
    table = CharacterTable::load_file(opt.table_path);
    matching = match_classes(G, classes, *table);
  }

  auto selectors = split_csv(classes_csv);
  if (selectors.size() != 3)
    throw CLI::ValidationError("--classes",
                               "expected exactly three selectors");
  std::array<std::size_t, 3> idx{};
  for (int i = 0; i < 3; ++i)
    idx[i] = resolve_selector(selectors[i], classes,
                              table ? &*table : nullptr,
                              matching ? &*matching : nullptr);

  json doc = document("count-triples");
  doc["groupName"] = G.name();
  doc["classes"] = {classes[idx[0]].label, classes[idx[1]].label,
                    classes[idx[2]].label};
  std::ostringstream text;
  text << "group " << G.name() << "  classes (" << classes[idx[0]].label
       << ", " << classes[idx[1]].label << ", " << classes[idx[2]].label
       << ")\n";

  std::optional<std::uint64_t> brute, character;
  if (want_brute) {
    brute = brute_count_triples(G, classes[idx[0]], classes[idx[1]],
                                classes[idx[2]]);
    doc["brute"] = *brute;
    text << "  brute:      " << *brute << "\n";
  }
  if (want_char) {
    auto g2t = matching->group_to_table();
    const std::size_t ti = g2t[idx[0]], tj = g2t[idx[1]], tk = g2t[idx[2]];
    character = table->structure_constant_count(ti, tj, tk);
    doc["character"] = *character;
    doc["tableClasses"] = {table->classes()[ti].label,
                           table->classes()[tj].label,
                           table->classes()[tk].label};
    text << "  character:  " << *character << "   (table "
         << table->group_name() << ", classes (" << table->classes()[ti].label
         << ", " << table->classes()[tj].label << ", "
         << table->classes()[tk].label << "))\n";
    if (matching->ambiguous) {
      doc["matchingAmbiguous"] = true;
      text << "  note: class matching has a symmetry (algebraically "
              "conjugate classes); counts are invariant under it\n";
    }
  }
  bool agree = true;
  if (want_brute && want_char) {
    agree = *brute == *character;
    doc["agree"] = agree;
    text << "  agree:      " << (agree ? "yes" : "NO") << "\n";
  }
  emit(out, opt, doc, text.str());
  return agree ? kExitHolds : kExitFails;
}

int cmd_scan(const std::string &dir, const CommonOptions &opt,
             std::ostream &out) {
  ScanResult result;

  auto analyze_entry = [&](const std::string &name, FiniteGroup G,
                           std::optional<bool> expected_solvable) {
    ScanRow row;
    row.name = name;
    row.expected_solvable = expected_solvable;
    ConditionReport r = analyze_group(G, opt.search_mode());
    if (expected_solvable && r.solvable != *expected_solvable)
      r.consistency_flags.push_back(
          "computed solvability disagrees with the expected fact");
    if (r.solvable && r.is_3ppo())
      row.alarms.push_back("solvable group satisfies 3PPO");
    if (!r.solvable && !r.is_3ppo())
      row.alarms.push_back("nonsolvable group fails 3PPO");
    if (!r.consistency_flags.empty() || !row.alarms.empty())
      result.all_consistent = false;
    row.report = std::move(r);
    result.rows.push_back(std::move(row));
  };

  if (dir.empty()) {
    for (const auto &entry : builtin_catalog()) {
      try {
        analyze_entry(entry.name, entry.generate(opt.max_order),
                      entry.expected_solvable);
      } catch (const Error &e) {
        ScanRow row;
        row.name = entry.name;
        row.error = e.what();
        result.all_consistent = false;
        result.rows.push_back(std::move(row));
      }
    }
  } else {
    std::vector<fs::path> files;
    for (const auto &de : fs::directory_iterator(dir))
      if (de.is_regular_file() && de.path().extension() == ".group")
        files.push_back(de.path());
    std::sort(files.begin(), files.end());
    for (const auto &f : files) {
      try {
        analyze_entry(f.filename().string(), load_group(f, opt.max_order),
                      std::nullopt);
      } catch (const Error &e) {
        ScanRow row;
        row.name = f.filename().string();
        row.error = e.what();
        result.all_consistent = false;
        result.rows.push_back(std::move(row));
      }
    }
  }

  json doc = document("scan");
  doc["scan"] = scan_to_json(result);
  emit(out, opt, doc, scan_to_text(result));
  return result.all_consistent ? kExitHolds : kExitFails;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{
      "groupkit - analyzes triple-based nonsolvability conditions on small "
      "finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opt;
  app.add_option("--max-order", opt.max_order,
                 "generation cap on the group order")
      ->capture_default_str();
  app.add_option("--mode", opt.mode, "3SS conjugate-search strategy")
      ->check(CLI::IsMember({"fast", "exhaustive"}))
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--table", opt.table_path, "character table file");

  std::string path, condition, classes_csv, method = "brute", scan_dir;

  CLI::App *analyze =
      app.add_subcommand("analyze", "run every condition check on one group");
  analyze->add_option("path", path, "group definition file")->required();

  CLI::App *check =
      app.add_subcommand("check", "decide one condition, print the witness");
  check->add_option("path", path, "group definition file")->required();
  check
      ->add_option("condition", condition,
                   "one of thompson|kl|3po|3ppo|3ss")
      ->required()
      ->check(CLI::IsMember({"thompson", "kl", "3po", "3ppo", "3ss"}));

  CLI::App *count = app.add_subcommand(
      "count-triples", "count solutions of x*y*z = 1 over a class triple");
  count->add_option("path", path, "group definition file")->required();
  count
      ->add_option("--classes", classes_csv,
                   "three class selectors, e.g. 2,3A,5A")
      ->required();
  count->add_option("--method", method, "counting method")
      ->check(CLI::IsMember({"brute", "character", "both"}))
      ->capture_default_str();

  CLI::App *scan = app.add_subcommand(
      "scan", "scan the built-in catalog (or a directory of .group files)");
  scan->add_option("dir", scan_dir, "directory of group definition files");

  std::vector<char *> argv;
  std::string prog = "groupkit";
  argv.push_back(prog.data());
  std::vector<std::string> storage = args;
  for (auto &a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, opt, out);
    if (check->parsed()) return cmd_check(path, condition, opt, out);
    if (count->parsed())
      return cmd_count_triples(path, classes_csv, method, opt, out);
    if (scan->parsed()) return cmd_scan(scan_dir, opt, out);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception &e) {
    err << "unexpected error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

} // namespace groupkit
