#include <catch2/catch_amalgamated.hpp>

#include "bnrank/a_plus.hpp"
#include "bnrank/errors.hpp"
#include "bnrank/table_io.hpp"

using namespace bnrank;

TEST_CASE("tables round-trip byte for byte", "[io]") {
  std::vector<FiniteSemigroup> sgs{brandt_semigroup(2), brandt_semigroup(3), a_plus_semigroup(1),
                                   a_plus_semigroup(2), a_plus_semigroup(3)};
  for (const auto& s : sgs) {
    for (auto fmt : {TableFormat::Json, TableFormat::Csv}) {
      const auto text = export_table(s, fmt);
      const auto back = import_table(text);
      CHECK(back.labels() == s.labels());
      CHECK(back.table() == s.table());
      CHECK(export_table(back, fmt) == text);
    }
    CHECK(import_json(export_json(s)) == s);
  }
}

TEST_CASE("the zero's row is all zeros", "[io]") {
  const auto text = export_csv(a_plus_semigroup(2));
  const auto rows = text.substr(text.find('\n') + 1);
  std::string expected = "0";
  for (int i = 1; i < 29; ++i) expected += ",0";
  CHECK(rows.substr(0, rows.find('\n')) == expected);
}

TEST_CASE("labels with commas are quoted in CSV", "[io]") {
  const auto text = export_csv(brandt_semigroup(2));
  CHECK(text.substr(0, text.find('\n')) == "0,\"(1,1)\",\"(1,2)\",\"(2,1)\",\"(2,2)\"");
  const FiniteSemigroup q({"a\"b", "c"}, {0, 0, 0, 0});
  CHECK(import_csv(export_csv(q)).labels() == q.labels());
}

TEST_CASE("json keeps n", "[io]") {
  CHECK(import_json(export_json(a_plus_semigroup(2))).n() == 2);
  CHECK_FALSE(import_json(export_json(FiniteSemigroup({"e"}, {0}))).n());
}

TEST_CASE("non-associative tables fail validation", "[io]") {
  const std::string json = R"({"n": null, "labels": ["a", "b"], "table": [[1, 0], [0, 0]]})";
  CHECK_THROWS_AS(import_table(json), ValidationError);
  CHECK_THROWS_AS(import_table("a,b\n1,0\n0,0\n"), ValidationError);
  CHECK_THROWS_AS(import_table("a,b\n0,2\n0,0\n"), ValidationError);
  CHECK_THROWS_AS(import_table(R"({"labels": ["a"], "table": [[0, 0]]})"), ValidationError);
}

TEST_CASE("malformed files report line and offset", "[io]") {
  try {
    import_table("{\n  \"labels\": [\"a\"],\n  \"table\": [[0]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  try {
    import_table("a,b\n0,1\n1,x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.offset() == 2);
  }
  try {
    import_table("a,b\n0,\"1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(import_table(""), ParseError);
  CHECK_THROWS_AS(import_table("a,b\n0,1,1\n1,1\n"), ParseError);
  CHECK_THROWS_AS(import_table(R"({"labels": "a", "table": []})"), ParseError);
  CHECK_THROWS_AS(import_table("[1, 2]"), ParseError);
}
