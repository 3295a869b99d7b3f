#include "groupkit/character_table.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace groupkit {

using nlohmann::json;

CharacterTable CharacterTable::load(const std::string &json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded())
    throw ParseError("character table: document is not valid JSON");
  if (!doc.is_object())
    throw ParseError("character table: document must be an object");

  CharacterTable t;
  if (!doc.contains("groupName") || !doc["groupName"].is_string())
    throw ParseError("character table: missing field \"groupName\"");
  t.group_name_ = doc["groupName"].get<std::string>();
  if (!doc.contains("groupOrder") || !doc["groupOrder"].is_number_unsigned())
    throw ParseError("character table: missing field \"groupOrder\"");
  t.group_order_ = doc["groupOrder"].get<std::uint64_t>();
  if (t.group_order_ == 0)
    throw ParseError("character table: groupOrder must be positive");

  if (!doc.contains("classes") || !doc["classes"].is_array() ||
      doc["classes"].empty())
    throw ParseError("character table: missing or empty \"classes\"");
  for (const auto &c : doc["classes"]) {
    TableClass tc;
    if (!c.is_object() || !c.contains("label") || !c["label"].is_string() ||
        !c.contains("size") || !c["size"].is_number_unsigned() ||
        !c.contains("elementOrder") ||
        !c["elementOrder"].is_number_unsigned() ||
        !c.contains("inverseClassIndex") ||
        !c["inverseClassIndex"].is_number_unsigned())
      throw ParseError(
          "character table: each class needs label, size, elementOrder and "
          "inverseClassIndex");
    tc.label = c["label"].get<std::string>();
    tc.size = c["size"].get<std::uint64_t>();
    tc.element_order = c["elementOrder"].get<std::uint64_t>();
    tc.inverse_class = c["inverseClassIndex"].get<std::size_t>();
    if (c.contains("powerMap")) {
      if (!c["powerMap"].is_object())
        throw ParseError("character table: powerMap must be an object");
      for (const auto &[k, v] : c["powerMap"].items()) {
        std::uint64_t e = 0;
        try {
          e = std::stoull(k);
        } catch (...) {
          throw ParseError("character table: powerMap key \"" + k +
                           "\" is not an integer");
        }
        if (!v.is_number_unsigned())
          throw ParseError("character table: powerMap values must be class "
                           "indices");
        tc.power_map[e] = v.get<std::size_t>();
      }
    }
    t.classes_.push_back(std::move(tc));
  }

  if (!doc.contains("characters") || !doc["characters"].is_array())
    throw ParseError("character table: missing \"characters\"");
  for (const auto &row : doc["characters"]) {
    if (!row.is_array())
      throw ParseError("character table: each character must be an array");
    std::vector<AlgebraicValue> values;
    for (const auto &entry : row) {
      if (entry.is_number_integer()) {
        values.push_back(AlgebraicValue(Rational(entry.get<std::int64_t>())));
      } else if (entry.is_string()) {
        values.push_back(AlgebraicValue::parse(entry.get<std::string>()));
      } else {
        throw ParseError(
            "character table: entries must be integers or value strings");
      }
    }
    t.characters_.push_back(std::move(values));
  }

  t.validate();
  return t;
}

CharacterTable CharacterTable::load_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open character table file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

void CharacterTable::validate() {
  const std::size_t n = classes_.size();
  auto invalid = [&](const std::string &check, const std::string &detail) {
    throw TableInvalidError("character table for " + group_name_ +
                            " failed the " + check + " check: " + detail);
  };

  if (characters_.size() != n)
    invalid("shape", std::to_string(characters_.size()) + " characters vs " +
                         std::to_string(n) + " classes");
  for (std::size_t r = 0; r < characters_.size(); ++r)
    if (characters_[r].size() != n)
      invalid("shape", "character row " + std::to_string(r) + " has " +
                           std::to_string(characters_[r].size()) +
                           " entries, expected " + std::to_string(n));

  // exactly one identity class; sizes partition the group
  std::uint64_t size_sum = 0;
  std::size_t identity_count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    size_sum += classes_[c].size;
    if (classes_[c].element_order == 1) {
      identity_class_ = c;
      ++identity_count;
      if (classes_[c].size != 1)
        invalid("shape", "the identity class must have size 1");
    }
    if (classes_[c].size == 0 || classes_[c].element_order == 0)
      invalid("shape", "class sizes and element orders must be positive");
  }
  if (identity_count != 1)
    invalid("shape", "expected exactly one class of element order 1");
  if (size_sum != group_order_)
    invalid("shape", "class sizes sum to " + std::to_string(size_sum) +
                         ", expected " + std::to_string(group_order_));

  // inverse map: involution, consistent with orders and sizes
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t ic = classes_[c].inverse_class;
    if (ic >= n)
      invalid("inverse-map", "class " + classes_[c].label +
                                 " points past the class list");
    if (classes_[ic].inverse_class != c)
      invalid("inverse-map", "inverse map is not an involution at " +
                                 classes_[c].label);
    if (classes_[ic].element_order != classes_[c].element_order ||
        classes_[ic].size != classes_[c].size)
      invalid("inverse-map", "inverse class of " + classes_[c].label +
                                 " has a different order or size");
    for (const auto &[e, target] : classes_[c].power_map) {
      if (target >= n)
        invalid("inverse-map", "powerMap of " + classes_[c].label +
                                   " points past the class list");
      // order of g^e
      const std::uint64_t o = classes_[c].element_order;
      const std::uint64_t expected = o / std::gcd(o, e);
      if (classes_[target].element_order != expected)
        invalid("inverse-map", "powerMap of " + classes_[c].label + " at " +
                                   std::to_string(e) +
                                   " targets a class of the wrong order");
    }
  }

  // degrees: positive integers, squares summing to the group order
  Rational degree_sum = 0;
  for (std::size_t r = 0; r < characters_.size(); ++r) {
    const AlgebraicValue &d = characters_[r][identity_class_];
    auto q = d.as_rational();
    if (!q || denominator(*q) != 1 || *q <= 0)
      invalid("degree-sum", "character " + std::to_string(r) +
                                " has a non-integral degree " + d.str());
    degree_sum += *q * *q;
  }
  if (degree_sum != Rational(group_order_))
    invalid("degree-sum", "sum of squared degrees is " +
                              Rational(degree_sum).str() + ", expected " +
                              std::to_string(group_order_));

  // exact column orthogonality
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      AlgebraicValue sum;
      for (std::size_t r = 0; r < characters_.size(); ++r)
        sum += characters_[r][i] * characters_[r][j].conj();
      AlgebraicValue expected;
      if (i == j)
        expected = AlgebraicValue(Rational(group_order_) /
                                  Rational(classes_[i].size));
      if (sum != expected)
        invalid("orthogonality", "columns " + classes_[i].label + ", " +
                                     classes_[j].label + " give " + sum.str() +
                                     ", expected " + expected.str());
    }
  }
}

Rational CharacterTable::degree(std::size_t character) const {
  return *characters_[character][identity_class_].as_rational();
}

std::optional<std::size_t> CharacterTable::class_by_label(
    const std::string &label) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].label == label) return c;
  return std::nullopt;
}

std::vector<AlgebraicValue> CharacterTable::character_sum_terms(
    std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= classes_.size() || j >= classes_.size() || k >= classes_.size())
    throw Error("class index out of range");
  std::vector<AlgebraicValue> terms;
  terms.reserve(characters_.size());
  for (std::size_t r = 0; r < characters_.size(); ++r) {
    AlgebraicValue t = characters_[r][i] * characters_[r][j] *
                       characters_[r][k];
    terms.push_back(t / degree(r));
  }
  return terms;
}

AlgebraicValue CharacterTable::character_sum(std::size_t i, std::size_t j,
                                             std::size_t k) const {
  AlgebraicValue sum;
  for (const auto &t : character_sum_terms(i, j, k)) sum += t;
  return sum;
}

std::uint64_t CharacterTable::structure_constant_count(std::size_t i,
                                                       std::size_t j,
                                                       std::size_t k) const {
  if (i >= classes_.size() || j >= classes_.size() || k >= classes_.size())
    throw Error("class index out of range");
  const std::size_t k_inv = classes_[k].inverse_class;
  AlgebraicValue sum;
  for (std::size_t r = 0; r < characters_.size(); ++r) {
    AlgebraicValue t =
        characters_[r][i] * characters_[r][j] * characters_[r][k_inv].conj();
    sum += t / degree(r);
  }
  const Rational prefactor = Rational(classes_[i].size) *
                             Rational(classes_[j].size) *
                             Rational(classes_[k].size) /
                             Rational(group_order_);
  AlgebraicValue total = sum * AlgebraicValue(prefactor);
  auto q = total.as_rational();
  if (!q || denominator(*q) != 1 || *q < 0)
    throw TableInconsistentError(
        "structure constant for classes (" + classes_[i].label + ", " +
        classes_[j].label + ", " + classes_[k].label +
        ") evaluates to the non-count value " + total.str());
  return q->convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------
// class matching

std::vector<std::size_t> ClassMatching::group_to_table() const {
  std::vector<std::size_t> inv(table_to_group.size());
  for (std::size_t t = 0; t < table_to_group.size(); ++t)
    inv[table_to_group[t]] = t;
  return inv;
}

namespace {

/// Recursively assigns table classes (in index order) to computed classes
/// with equal (order, size), then keeps assignments consistent with the
/// declared power maps and inverse classes.
void enumerate_bijections(const FiniteGroup &G,
                          const std::vector<ConjugacyClass> &classes,
                          const CharacterTable &T,
                          const std::vector<std::size_t> &class_of_element,
                          std::vector<std::size_t> &assign,
                          std::vector<bool> &used, std::size_t next,
                          std::vector<std::vector<std::size_t>> &out) {
  const std::size_t n = T.class_count();
  if (next == n) {
    // verify power maps and inverse classes under this assignment
    for (std::size_t t = 0; t < n; ++t) {
      const ConjugacyClass &gc = classes[assign[t]];
      const GroupElement &rep = gc.representative_element();
      if (class_of_element[G.require_index(rep.inverse())] !=
          assign[T.classes()[t].inverse_class])
        return;
      for (const auto &[e, target] : T.classes()[t].power_map) {
        if (class_of_element[G.require_index(rep.power(e))] != assign[target])
          return;
      }
    }
    out.push_back(assign);
    return;
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (used[g]) continue;
    if (classes[g].element_order != T.classes()[next].element_order ||
        classes[g].size != T.classes()[next].size)
      continue;
    used[g] = true;
    assign[next] = g;
    enumerate_bijections(G, classes, T, class_of_element, assign, used,
                         next + 1, out);
    used[g] = false;
  }
}

} // namespace

ClassMatching match_classes(const FiniteGroup &G,
                            const std::vector<ConjugacyClass> &classes,
                            const CharacterTable &T) {
  if (G.order() != T.group_order())
    throw WrongTableError("table for " + T.group_name() + " has order " +
                          std::to_string(T.group_order()) + " but group " +
                          G.name() + " has order " +
                          std::to_string(G.order()));
  if (classes.size() != T.class_count())
    throw WrongTableError("table has " + std::to_string(T.class_count()) +
                          " classes but the group has " +
                          std::to_string(classes.size()));

  auto profile = [](std::uint64_t order, std::uint64_t size) {
    return std::make_pair(order, size);
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> a, b;
  for (const auto &c : classes) a.push_back(profile(c.element_order, c.size));
  for (const auto &c : T.classes())
    b.push_back(profile(c.element_order, c.size));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw WrongTableError(
        "the (element order, class size) profiles of the table and the "
        "group differ");

  std::vector<std::size_t> class_of_element(G.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto m : classes[c].members) class_of_element[m] = c;

  std::vector<std::size_t> assign(T.class_count());
  std::vector<bool> used(T.class_count(), false);
  ClassMatching result;
  enumerate_bijections(G, classes, T, class_of_element, assign, used, 0,
                       result.all_bijections);
  if (result.all_bijections.empty())
    throw WrongTableError(
        "no class bijection is consistent with the table's power maps and "
        "inverse classes");
  std::sort(result.all_bijections.begin(), result.all_bijections.end());
  result.table_to_group = result.all_bijections.front();
  result.ambiguous = result.all_bijections.size() > 1;
  return result;
}

ClassMatching match_classes(const FiniteGroup &G, const CharacterTable &T) {
  return match_classes(G, conjugacy_classes(G), T);
}

} // namespace groupkit
