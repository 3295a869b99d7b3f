#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "groupkit/group.hpp"

namespace groupkit {

/// Parses cycle notation into a permutation of the given degree.
/// Grammar: zero or more parenthesized cycles of 1-based points separated by
/// whitespace inside the parentheses; fixed points omitted; "()" (or an
/// empty string) is the identity. Cycles must be disjoint; points must lie
/// in 1..degree.
GroupElement parse_cycles(const std::string &text, std::uint32_t degree);

/// A parsed group definition: its shape and generators plus the name, ready
/// to be passed to generate_group.
struct GroupDefinition {
  std::string name;
  GroupShape shape;
  std::vector<GroupElement> generators;
};

/// Parses a group definition document (JSON). Fields: name, kind
/// ("permutation" | "matrix"); degree and cycle-string generators for
/// permutation groups; dimension, modulus and nested integer arrays for
/// matrix groups. See docs/formats.md for the exact grammar.
GroupDefinition parse_group_definition(const std::string &json_text);

GroupDefinition load_group_definition(const std::filesystem::path &path);

/// Convenience: load + generate in one step.
FiniteGroup load_group(const std::filesystem::path &path,
                       std::uint64_t cap = kDefaultOrderCap);

} // namespace groupkit
