#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "groupkit/character_table.hpp"
#include "groupkit/io.hpp"
#include "groupkit/triples.hpp"

using namespace groupkit;

namespace {

const std::string kData = GROUPKIT_DATA_DIR;
const std::string kFixtures = GROUPKIT_FIXTURE_DIR;

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("shipped tables load and validate") {
  auto t2a5 = CharacterTable::load_file(kData + "/tables/2a5.table");
  CHECK(t2a5.class_count() == 9);
  CHECK(t2a5.character_count() == 9);
  CHECK(t2a5.group_order() == 120);

  auto ta5 = CharacterTable::load_file(kData + "/tables/a5.table");
  CHECK(ta5.class_count() == 5);
  CHECK(ta5.group_order() == 60);

  CHECK(CharacterTable::load_file(kData + "/tables/s3.table").class_count() ==
        3);
  CHECK(CharacterTable::load_file(kData + "/tables/s4.table").class_count() ==
        5);
  // the complex-valued fixture exercises the conjugation path
  auto c3 = CharacterTable::load_file(kFixtures + "/c3.table");
  CHECK(c3.class_count() == 3);
  CHECK(c3.value(1, 1).is_complex());
}

TEST_CASE("malformed tables are rejected with named checks") {
  nlohmann::json doc = nlohmann::json::parse(slurp(kData + "/tables/2a5.table"));

  SUBCASE("row of the wrong length") {
    doc["characters"][2].erase(8);
    CHECK_THROWS_WITH_AS(CharacterTable::load(doc.dump()),
                         doctest::Contains("shape"), TableInvalidError);
  }
  SUBCASE("perturbed entry breaks orthogonality") {
    doc["characters"][0][3] = "2";
    CHECK_THROWS_WITH_AS(CharacterTable::load(doc.dump()),
                         doctest::Contains("orthogonality"),
                         TableInvalidError);
  }
  SUBCASE("wrong degree breaks the degree-sum check") {
    // keep the identity column consistent but scale a whole row: row 8 of
    // degree 6 -> 7 changes the squared-degree sum before orthogonality
    doc["characters"][8][0] = "7";
    CHECK_THROWS_WITH_AS(CharacterTable::load(doc.dump()),
                         doctest::Contains("degree-sum"), TableInvalidError);
  }
  SUBCASE("broken inverse map") {
    doc["classes"][5]["inverseClassIndex"] = 6;
    CHECK_THROWS_WITH_AS(CharacterTable::load(doc.dump()),
                         doctest::Contains("inverse-map"), TableInvalidError);
  }
  SUBCASE("power map of the wrong order") {
    doc["classes"][5]["powerMap"]["2"] = 2; // squares of order 5 cannot be order 4
    CHECK_THROWS_AS(CharacterTable::load(doc.dump()), TableInvalidError);
  }
  SUBCASE("class sizes must sum to the order") {
    doc["classes"][2]["size"] = 31;
    CHECK_THROWS_AS(CharacterTable::load(doc.dump()), TableInvalidError);
  }
  SUBCASE("not json") {
    CHECK_THROWS_AS(CharacterTable::load("{"), ParseError);
  }
  SUBCASE("cyclotomic entries are not expressible") {
    // a primitive 7th root of unity has no quadratic expression; the grammar
    // rejects the symbol
    doc["characters"][0][3] = "z7";
    CHECK_THROWS_AS(CharacterTable::load(doc.dump()), ParseError);
  }
}

TEST_CASE("character sums on the 2.A5 table") {
  auto t = CharacterTable::load_file(kData + "/tables/2a5.table");
  const auto c2 = *t.class_by_label("1A_1");
  const auto c3 = *t.class_by_label("3A_0");
  const auto c5a = *t.class_by_label("5A_0");
  const auto c5b = *t.class_by_label("5B_0");

  CHECK(t.character_sum(c2, c3, c5a).is_zero());
  CHECK(t.character_sum(c2, c3, c5b).is_zero());

  // the per-character terms for (1A_1, 3A_0, 5A_0)
  auto terms = t.character_sum_terms(c2, c3, c5a);
  REQUIRE(terms.size() == 9);
  CHECK(terms[0] == AlgebraicValue(1));
  CHECK(terms[1].is_zero());
  CHECK(terms[2].is_zero());
  CHECK(terms[3] == AlgebraicValue(-1));
  CHECK(terms[4].is_zero());
  CHECK(terms[5] == AlgebraicValue::parse("(-1+r5)/2"));
  CHECK(terms[6] == AlgebraicValue::parse("(-1-r5)/2"));
  CHECK(terms[7] == AlgebraicValue(1));
  CHECK(terms[8].is_zero());

  // (identity, identity, identity) sums the squared degrees
  const auto id = t.identity_class();
  CHECK(t.character_sum(id, id, id) == AlgebraicValue(120));
}

TEST_CASE("structure constants from the table") {
  auto t = CharacterTable::load_file(kData + "/tables/2a5.table");
  const auto id = t.identity_class();
  CHECK(t.structure_constant_count(id, id, id) == 1);
  CHECK(t.structure_constant_count(*t.class_by_label("1A_1"),
                                   *t.class_by_label("3A_0"),
                                   *t.class_by_label("5A_0")) == 0);
  CHECK(t.structure_constant_count(*t.class_by_label("1A_1"),
                                   *t.class_by_label("3A_0"),
                                   *t.class_by_label("5B_0")) == 0);
}

TEST_CASE("character_sum is zero exactly when the count is zero") {
  auto t = CharacterTable::load_file(kData + "/tables/a5.table");
  for (std::size_t i = 0; i < t.class_count(); ++i)
    for (std::size_t j = 0; j < t.class_count(); ++j)
      for (std::size_t k = 0; k < t.class_count(); ++k)
        CHECK(t.character_sum(i, j, k).is_zero() ==
              (t.structure_constant_count(i, j, k) == 0));
}

TEST_CASE("match_classes binds the 2.A5 table to SL(2,5)") {
  auto G = load_group(kData + "/groups/sl25.group");
  auto classes = conjugacy_classes(G);
  auto t = CharacterTable::load_file(kData + "/tables/2a5.table");
  auto m = match_classes(G, classes, t);

  REQUIRE(m.table_to_group.size() == 9);
  // the power maps tie the order-10 classes to the order-5 classes; the
  // residual global swap (an outer automorphism) stays ambiguous
  CHECK(m.ambiguous);
  CHECK(m.all_bijections.size() == 2);
  for (const auto &bij : m.all_bijections) {
    for (std::size_t ti = 0; ti < 9; ++ti) {
      CHECK(classes[bij[ti]].element_order == t.classes()[ti].element_order);
      CHECK(classes[bij[ti]].size == t.classes()[ti].size);
    }
    // declared power map holds in the group: squares of 5A_0 land in 5B_0
    const auto rep = classes[bij[*t.class_by_label("5A_0")]]
                         .representative_element();
    const auto sq_class_members =
        classes[bij[*t.class_by_label("5B_0")]].members;
    const auto sq = G.require_index(rep * rep);
    CHECK(std::find(sq_class_members.begin(), sq_class_members.end(), sq) !=
          sq_class_members.end());
  }

  // wrong group order
  auto A5 = load_group(kData + "/groups/a5.group");
  CHECK_THROWS_AS(match_classes(A5, t), WrongTableError);

  // unambiguous case: all S3 profiles are distinct
  auto S3 = load_group(kData + "/groups/s3.group");
  auto ts3 = CharacterTable::load_file(kData + "/tables/s3.table");
  auto ms3 = match_classes(S3, ts3);
  CHECK(!ms3.ambiguous);
  CHECK(ms3.all_bijections.size() == 1);
}

TEST_CASE("oracle equivalence: table counts match brute force (S3, S4, C3)") {
  struct Pair {
    std::string group, table;
  };
  const Pair pairs[] = {{kData + "/groups/s3.group", kData + "/tables/s3.table"},
                        {kData + "/groups/s4.group", kData + "/tables/s4.table"},
                        {kFixtures + "/c3.group", kFixtures + "/c3.table"}};
  for (const auto &p : pairs) {
    auto G = load_group(p.group);
    auto classes = conjugacy_classes(G);
    auto t = CharacterTable::load_file(p.table);
    auto m = match_classes(G, classes, t);
    for (const auto &bij : m.all_bijections) {
      for (std::size_t i = 0; i < t.class_count(); ++i)
        for (std::size_t j = 0; j < t.class_count(); ++j)
          for (std::size_t k = 0; k < t.class_count(); ++k)
            CHECK(t.structure_constant_count(i, j, k) ==
                  brute_count_triples(G, classes[bij[i]], classes[bij[j]],
                                      classes[bij[k]]));
    }
  }
}
