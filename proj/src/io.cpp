#include "groupkit/io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace groupkit {

using nlohmann::json;

GroupElement parse_cycles(const std::string &text, std::uint32_t degree) {
  if (degree == 0) throw ParseError("permutation degree must be at least 1");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation near \"" +
                       text.substr(pos) + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected a point number in cycle notation near \"" +
                         text.substr(pos) + "\"");
      std::uint64_t v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > degree)
          throw ParseError("point " + std::to_string(v) +
                           " out of range 1.." + std::to_string(degree));
        ++pos;
      }
      if (v < 1)
        throw ParseError("points are 1-based; 0 is not a valid point");
      if (moved[v - 1])
        throw ParseError("point " + std::to_string(v) +
                         " appears in more than one cycle");
      moved[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
      skip_ws();
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle");
    ++pos; // ')'
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[i + 1];
    if (cycle.size() > 1) images[cycle.back() - 1] = cycle.front();
    skip_ws();
  }
  return GroupElement::permutation(images);
}

namespace {

json parse_json(const std::string &text, const std::string &what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw ParseError(what + ": document is not valid JSON");
  return doc;
}

std::uint32_t get_u32(const json &doc, const char *field, const char *what) {
  if (!doc.contains(field) || !doc[field].is_number_unsigned())
    throw ParseError(std::string(what) + ": missing or invalid field \"" +
                     field + "\"");
  return doc[field].get<std::uint32_t>();
}

} // namespace

GroupDefinition parse_group_definition(const std::string &json_text) {
  const char *what = "group definition";
  json doc = parse_json(json_text, what);
  if (!doc.is_object()) throw ParseError("group definition must be an object");

  GroupDefinition def;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw ParseError("group definition: missing or invalid field \"name\"");
  def.name = doc["name"].get<std::string>();

  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("group definition: missing or invalid field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();

  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError(
        "group definition: missing or invalid field \"generators\"");

  try {
    if (kind == "permutation") {
      const std::uint32_t degree = get_u32(doc, "degree", what);
      def.shape = GroupShape::permutations(degree);
      for (const auto &g : doc["generators"]) {
        if (!g.is_string())
          throw ParseError(
              "permutation generators must be cycle strings");
        def.generators.push_back(parse_cycles(g.get<std::string>(), degree));
      }
    } else if (kind == "matrix") {
      const std::uint32_t dim = get_u32(doc, "dimension", what);
      const std::uint32_t mod = get_u32(doc, "modulus", what);
      for (const auto &g : doc["generators"]) {
        if (!g.is_array() || g.size() != dim)
          throw ParseError("matrix generator must be an array of " +
                           std::to_string(dim) + " rows");
        std::vector<std::uint32_t> entries;
        entries.reserve(static_cast<std::size_t>(dim) * dim);
        for (const auto &row : g) {
          if (!row.is_array() || row.size() != dim)
            throw ParseError("matrix row must have " + std::to_string(dim) +
                             " entries");
          for (const auto &e : row) {
            if (!e.is_number_integer())
              throw ParseError("matrix entries must be integers");
            const auto v = e.get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(mod))
              throw ParseError("matrix entry " + std::to_string(v) +
                               " out of range 0.." + std::to_string(mod - 1));
            entries.push_back(static_cast<std::uint32_t>(v));
          }
        }
        def.generators.push_back(GroupElement::matrix(dim, mod, entries));
      }
      def.shape = GroupShape::matrices(dim, mod);
    } else {
      throw ParseError("group definition: unknown kind \"" + kind +
                       "\" (expected \"permutation\" or \"matrix\")");
    }
  } catch (const InvalidElementError &e) {
    throw ParseError("group definition: " + std::string(e.what()));
  }
  return def;
}

GroupDefinition load_group_definition(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group definition file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_definition(ss.str());
}

FiniteGroup load_group(const std::filesystem::path &path, std::uint64_t cap) {
  auto def = load_group_definition(path);
  return generate_group(def.name, def.shape, def.generators, cap);
}

} // namespace groupkit
