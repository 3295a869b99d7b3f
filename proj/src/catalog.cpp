#include "groupkit/catalog.hpp"

namespace groupkit {

GroupDefinition CatalogEntry::definition() const {
  return parse_group_definition(definition_json);
}

FiniteGroup CatalogEntry::generate(std::uint64_t cap) const {
  auto def = definition();
  return generate_group(def.name, def.shape, def.generators, cap);
}

const std::vector<CatalogEntry> &builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"C6",
       R"json({"name":"C6","kind":"permutation","degree":6,
           "generators":["(1 2 3 4 5 6)"]})json",
       true, false},
      {"S3",
       R"json({"name":"S3","kind":"permutation","degree":3,
           "generators":["(1 2)","(1 2 3)"]})json",
       true, false},
      {"A4",
       R"json({"name":"A4","kind":"permutation","degree":4,
           "generators":["(1 2 3)","(1 2)(3 4)"]})json",
       true, false},
      {"S4",
       R"json({"name":"S4","kind":"permutation","degree":4,
           "generators":["(1 2)","(1 2 3 4)"]})json",
       true, false},
      {"D10",
       R"json({"name":"D10","kind":"permutation","degree":5,
           "generators":["(1 2 3 4 5)","(2 5)(3 4)"]})json",
       true, false},
      {"F20",
       R"json({"name":"F20","kind":"permutation","degree":5,
           "generators":["(1 2 3 4 5)","(2 3 5 4)"]})json",
       true, false},
      {"A5",
       R"json({"name":"A5","kind":"permutation","degree":5,
           "generators":["(1 2 3 4 5)","(3 4 5)"]})json",
       false, true},
      {"S5",
       R"json({"name":"S5","kind":"permutation","degree":5,
           "generators":["(1 2)","(1 2 3 4 5)"]})json",
       false, false},
      {"SL(2,5)",
       R"json({"name":"SL(2,5)","kind":"matrix","dimension":2,"modulus":5,
           "generators":[[[1,1],[0,1]],[[0,1],[4,0]]]})json",
       false, false},
      {"PSL(2,7)",
       R"json({"name":"PSL(2,7)","kind":"permutation","degree":7,
           "generators":["(1 2 4 3 6 7 5)","(2 4)(3 5)"]})json",
       false, true},
      {"SL(2,7)",
       R"json({"name":"SL(2,7)","kind":"matrix","dimension":2,"modulus":7,
           "generators":[[[1,1],[0,1]],[[0,1],[6,0]]]})json",
       false, false},
      {"A6",
       R"json({"name":"A6","kind":"permutation","degree":6,
           "generators":["(1 2 3)","(2 3 4 5 6)"]})json",
       false, true},
  };
  return entries;
}

} // namespace groupkit
