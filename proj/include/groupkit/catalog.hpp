#pragma once

#include <string>
#include <vector>

#include "groupkit/io.hpp"

namespace groupkit {

/// One built-in group: a generator presentation (the same JSON schema as a
/// definition file) plus the externally known facts used as test oracles.
struct CatalogEntry {
  std::string name;
  std::string definition_json;
  bool expected_solvable = false;
  bool expected_simple = false;

  GroupDefinition definition() const;
  FiniteGroup generate(std::uint64_t cap = kDefaultOrderCap) const;
};

/// The built-in catalog: solvable controls, the two featured matrix groups,
/// and nonabelian simple groups, twelve entries in all.
const std::vector<CatalogEntry> &builtin_catalog();

} // namespace groupkit
