#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupkit/algebraic.hpp"
#include "groupkit/structure.hpp"

namespace groupkit {

/// Class metadata carried by a character table file.
struct TableClass {
  std::string label;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::size_t inverse_class = 0;
  std::map<std::uint64_t, std::size_t> power_map; // exponent -> class index
};

/// A validated character table: class records plus one row of exact
/// algebraic values per irreducible character. Loading verifies the
/// degree-sum identity, exact column orthogonality and the inverse-class
/// involution; an invalid file never yields a table object.
class CharacterTable {
public:
  /// Parses and validates a table document (JSON). Throws ParseError for
  /// malformed documents and TableInvalidError (naming the failed check:
  /// degree-sum, orthogonality, inverse-map) for invariant violations.
  static CharacterTable load(const std::string &json_text);
  static CharacterTable load_file(const std::filesystem::path &path);

  const std::string &group_name() const { return group_name_; }
  std::uint64_t group_order() const { return group_order_; }
  const std::vector<TableClass> &classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t character_count() const { return characters_.size(); }
  std::size_t identity_class() const { return identity_class_; }

  const AlgebraicValue &value(std::size_t character, std::size_t cls) const {
    return characters_[character][cls];
  }

  /// Character degree (its value at the identity class) as an exact
  /// rational; always a positive integer for a validated table.
  Rational degree(std::size_t character) const;

  std::optional<std::size_t> class_by_label(const std::string &label) const;

  /// The per-character terms chi(g_i) * chi(g_j) * chi(g_k) / chi(1).
  std::vector<AlgebraicValue> character_sum_terms(std::size_t i, std::size_t j,
                                                  std::size_t k) const;

  /// Sum over all characters of chi(g_i) * chi(g_j) * chi(g_k) / chi(1),
  /// exact.
  AlgebraicValue character_sum(std::size_t i, std::size_t j,
                               std::size_t k) const;

  /// #{(x,y,z) in C_i x C_j x C_k : xyz = 1} from the table via the class
  /// multiplication formula
  ///   (size_i * size_j * size_k / |G|)
  ///     * sum_chi chi(g_i) chi(g_j) conj(chi(g_{k^-1})) / chi(1).
  /// Throws TableInconsistentError if the result is not a nonnegative
  /// integer.
  std::uint64_t structure_constant_count(std::size_t i, std::size_t j,
                                         std::size_t k) const;

private:
  CharacterTable() = default;
  void validate();

  std::string group_name_;
  std::uint64_t group_order_ = 0;
  std::vector<TableClass> classes_;
  std::vector<std::vector<AlgebraicValue>> characters_;
  std::size_t identity_class_ = 0;
};

/// A bijection table class index -> computed class index, matched on
/// (element order, class size) and constrained by the table's declared
/// power maps and inverse classes. When several bijections survive the
/// constraints (the table has a symmetry, e.g. a pair of algebraically
/// conjugate classes), `ambiguous` is set and all of them are listed;
/// `table_to_group` is the lexicographically first one.
struct ClassMatching {
  std::vector<std::size_t> table_to_group;
  bool ambiguous = false;
  std::vector<std::vector<std::size_t>> all_bijections;

  std::vector<std::size_t> group_to_table() const;
};

/// Matches table classes to computed classes. Throws WrongTableError when
/// the order or the (element order, size) profile multiset differs, or when
/// no bijection is consistent with the declared power maps.
ClassMatching match_classes(const FiniteGroup &G,
                            const std::vector<ConjugacyClass> &classes,
                            const CharacterTable &T);
ClassMatching match_classes(const FiniteGroup &G, const CharacterTable &T);

} // namespace groupkit
