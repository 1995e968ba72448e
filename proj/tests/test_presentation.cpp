#include <doctest.h>

#include "oracles.hpp"
#include "rackcolor/errors.hpp"
#include "rackcolor/presentation.hpp"

using namespace rackcolor;

TEST_CASE("parsing") {
  auto d2 = parse_presentation("sheets s\ndouble s s s\n");
  CHECK(d2.sheets == std::vector<SheetId>{"s"});
  REQUIRE(d2.doubles.size() == 1);
  CHECK(d2.doubles[0] == DoubleRelation{"s", "s", "s"});

  auto sc = parse_presentation("sheets p q o\ndouble p o q");
  CHECK(sc.sheets.size() == 3);
  CHECK(sc.doubles.size() == 1);

  CHECK_THROWS_AS(parse_presentation("sheets a\ncurve a b 1"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation("sheets a\nbogus a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("sheets a\ndouble a a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("sheets a-b"), ParseError);
  CHECK_THROWS_AS(parse_presentation("sheets a b\ncurve a b x"), ParseError);

  try {
    parse_presentation("sheets a\n\n# comment\nwhat a");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("validation") {
  CHECK(validate(builtin_presentation("satoh_d1")).empty());

  auto layer = parse_presentation_raw("sheets a b\ncurve a b 3");
  auto v = validate(layer);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::bad_layer);
  CHECK(v[0].message.find("layer out of range") != std::string::npos);

  auto missing = parse_presentation_raw("sheets a\ndouble a ghost a");
  v = validate(missing);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::undeclared_sheet);
  CHECK(v[0].message.find("ghost") != std::string::npos);

  auto dup = parse_presentation_raw("sheets a a");
  CHECK(validate(dup).at(0).kind == Violation::Kind::duplicate_sheet);
}

TEST_CASE("serialization round trips") {
  auto d2 = builtin_presentation("satoh_d2");
  auto text = serialize_presentation(d2);
  CHECK(serialize_presentation(parse_presentation(text)) == text);
  CHECK(parse_presentation(text) == d2);

  auto empty = parse_presentation("sheets");
  CHECK(empty.sheets.empty());
  CHECK(serialize_presentation(empty) == "sheets\n");

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_plain(rng);
    CHECK(parse_presentation(serialize_presentation(p)) == p);
    CHECK(presentation_from_json(presentation_to_json(p)) == p);
    CHECK(parse_presentation(presentation_to_json(p).dump()) == p);
  }
  for (const auto& [name, p] : oracle::data_presentations()) {
    CAPTURE(name);
    CHECK(parse_presentation(serialize_presentation(p)) == p);
  }
}

TEST_CASE("contraction") {
  auto overlay = parse_presentation("sheets x y\ncurve x y 1\ndouble y x x");
  auto c = contract(overlay, 1);
  CHECK(c.result.sheets == std::vector<SheetId>{"x"});
  CHECK(c.result.doubles == std::vector<DoubleRelation>{{"x", "x", "x"}});
  CHECK(c.result.curves.empty());
  CHECK(c.parent == ParentMap{{"x", "x"}, {"y", "x"}});

  auto plain = builtin_presentation("sphere_circle");
  auto same = contract(plain, 2);
  CHECK(same.result == plain);
  CHECK(same.parent == ParentMap{{"p", "p"}, {"q", "q"}, {"o", "o"}});

  auto layer1 = parse_presentation("sheets a b\ncurve a b 1");
  CHECK(contract(layer1, 2).result == layer1);
}

TEST_CASE("corpus") {
  auto d2 = builtin_presentation("satoh_d2");
  CHECK(d2.sheets.size() == 1);
  CHECK(d2.doubles == std::vector<DoubleRelation>{{"s", "s", "s"}});
  CHECK(d2.branches.empty());
  auto d1 = builtin_presentation("satoh_d1");
  CHECK(d1.sheets.size() == 1);
  CHECK(d1.doubles.empty());
  auto sc = builtin_presentation("sphere_circle");
  CHECK(sc.sheets.size() == 3);
  CHECK(sc.doubles.size() == 1);
  CHECK(builtin_presentation_names().size() == 3);
  CHECK(load_presentation_source("corpus:satoh_d2") == d2);
  CHECK_THROWS_AS(builtin_presentation("nope"), InvalidInput);
}

TEST_CASE("renaming") {
  auto d2 = rename(builtin_presentation("satoh_d2"), {{"s", "t"}});
  CHECK(d2.sheets == std::vector<SheetId>{"t"});
  CHECK(d2.doubles == std::vector<DoubleRelation>{{"t", "t", "t"}});

  auto sc = builtin_presentation("sphere_circle");
  CHECK(rename(sc, {{"p", "p"}, {"q", "q"}, {"o", "o"}}) == sc);
  auto swapped = rename(sc, {{"p", "q"}, {"q", "p"}, {"o", "o"}});
  CHECK(swapped.doubles == std::vector<DoubleRelation>{{"q", "o", "p"}});

  CHECK_THROWS_AS(rename(sc, {{"p", "o"}, {"q", "q"}, {"o", "o"}}), InvalidInput);
  CHECK_THROWS_AS(rename(sc, {{"p", "p"}, {"q", "q"}}), InvalidInput);
}
