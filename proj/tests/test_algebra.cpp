#include <doctest.h>

#include "oracles.hpp"
#include "rackcolor/algebra.hpp"
#include "rackcolor/errors.hpp"
#include "rackcolor/rack_io.hpp"
#include "rackcolor/text.hpp"

using namespace rackcolor;

namespace {

std::vector<RackTable> standard_racks() {
  std::vector<RackTable> out;
  for (int n = 2; n <= 8; ++n) out.push_back(builtin(Family::cyclic, n));
  for (int n = 3; n <= 8; ++n) out.push_back(builtin(Family::dihedral, n));
  for (int n = 1; n <= 4; ++n) out.push_back(builtin(Family::trivial, n));
  for (int n = 1; n <= 4; ++n)
    for (auto& t : enumerate_racks(n)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("building tables") {
  RackTable one(1, {{0}});
  CHECK(one.order() == 1);
  CHECK(one.op(0, 0) == 0);

  RackTable c3(3, {{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
  CHECK(c3 == builtin(Family::cyclic, 3));

  try {
    RackTable(2, {{0, 2}, {1, 0}});
    FAIL("expected MalformedTable");
  } catch (const MalformedTable& e) {
    CHECK(e.row() == 0);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(RackTable(2, {{0, 1}}), MalformedTable);
  CHECK_THROWS_AS(RackTable(2, {{0, -1}, {1, 0}}), MalformedTable);
}

TEST_CASE("axiom reports") {
  auto c3 = builtin(Family::cyclic, 3);
  auto r = check_axioms(c3);
  CHECK_FALSE(r.q1());
  CHECK(*r.idempotence_witness == 0);
  CHECK(r.q2());
  CHECK(r.q3());
  CHECK(is_rack(c3));
  CHECK_FALSE(is_quandle(c3));

  auto r3 = builtin(Family::dihedral, 3);
  CHECK(r3.rows() == std::vector<std::vector<Element>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(is_quandle(r3));

  RackTable swap(2, {{1, 1}, {0, 0}});
  auto s = check_axioms(swap);
  CHECK(s.q2());
  CHECK_FALSE(s.q1());

  RackTable constant(2, {{0, 0}, {0, 0}});
  CHECK_FALSE(is_rack(constant));
  CHECK(*check_axioms(constant).translation_witness == 0);
}

TEST_CASE("axiom checks agree with the brute-force predicates on all order-2 tables") {
  for (int code = 0; code < 16; ++code) {
    std::vector<Element> cells;
    for (int i = 0; i < 4; ++i) cells.push_back((code >> i) & 1);
    auto t = RackTable::from_cells(2, cells);
    auto r = check_axioms(t);
    CHECK(r.q1() == oracle::q1(cells, 2));
    CHECK(r.q2() == oracle::q2(cells, 2));
    CHECK(r.q3() == oracle::q3(cells, 2));
  }
}

TEST_CASE("kink map") {
  auto c5 = builtin(Family::cyclic, 5);
  auto k = kink_map(c5);
  CHECK(std::vector<Element>(k.forward().begin(), k.forward().end()) == std::vector<Element>{4, 0, 1, 2, 3});
  CHECK(iota_power(k, 0, 2) == 3);
  CHECK(iota_power(k, 0, 0) == 0);
  CHECK(iota_power(k, 0, -1) == 1);
  CHECK(iota_power(k, 2, 1'000'000'000'001LL) == 1);

  CHECK(kink_map(builtin(Family::dihedral, 3)).is_identity());
  CHECK_THROWS_AS(kink_map(RackTable(2, {{0, 0}, {0, 0}})), NotARack);
}

TEST_CASE("kink laws on every standard rack") {
  for (const auto& t : standard_racks()) {
    CAPTURE(serialize_rack(t));
    auto k = kink_map(t);
    auto expected = oracle::iota(t);
    CHECK(std::vector<Element>(k.forward().begin(), k.forward().end()) == expected);
    CHECK(verify_kink_properties(t).all());
  }
}

TEST_CASE("associated quandle") {
  for (int n = 2; n <= 8; ++n) CHECK(associated_quandle(builtin(Family::cyclic, n)) == builtin(Family::trivial, n));
  for (const auto& t : standard_racks()) {
    auto q = associated_quandle(t);
    auto cells = oracle::cells_of(q);
    CHECK(oracle::q1(cells, q.order()));
    CHECK(oracle::q2(cells, q.order()));
    CHECK(oracle::q3(cells, q.order()));
    if (is_quandle(t)) CHECK(q == t);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(builtin(Family::cyclic, 3)) == std::vector<std::vector<Element>>{{0, 1, 2}});
  CHECK(connected_components(builtin(Family::trivial, 3)) == std::vector<std::vector<Element>>{{0}, {1}, {2}});
  RackTable sum(3, {{1, 1, 1}, {0, 0, 0}, {2, 2, 2}});
  REQUIRE(is_rack(sum));
  CHECK(connected_components(sum) == std::vector<std::vector<Element>>{{0, 1}, {2}});
  CHECK(restrict_to(sum, std::vector<Element>{0, 1}) == builtin(Family::cyclic, 2));
}

TEST_CASE("builtins") {
  CHECK(builtin("trivial", 2).rows() == std::vector<std::vector<Element>>{{0, 0}, {1, 1}});
  CHECK(builtin("cyclic", 3).label() == "cyclic:3");
  CHECK_THROWS_AS(builtin("cyclic", 0), InvalidInput);
  CHECK_THROWS_AS(builtin("nope", 3), InvalidInput);
  CHECK_FALSE(parse_family("nope"));
}

TEST_CASE("enumeration matches the exhaustive scan") {
  CHECK(enumerate_racks(1).size() == 1);
  for (int n = 1; n <= 3; ++n) {
    auto scan = oracle::scan_racks(n);
    auto racks = enumerate_racks(n);
    std::set<std::vector<Element>> found;
    std::size_t quandles = 0;
    for (const auto& t : racks) {
      found.insert(oracle::cells_of(t));
      quandles += is_quandle(t);
    }
    CHECK(found.size() == racks.size());
    CHECK(found == scan.racks);
    CHECK(quandles == scan.quandles);
  }
  CHECK(enumerate_racks(2) == enumerate_racks(2));
  CHECK_THROWS_AS(enumerate_racks(5), InvalidInput);
}

TEST_CASE("rack text and JSON round trips") {
  for (const auto& t : standard_racks()) {
    CHECK(parse_rack(serialize_rack(t)) == t);
    CHECK(rack_from_json(rack_to_json(t)) == t);
    CHECK(parse_rack(rack_to_json(t).dump()) == t);
  }
  CHECK(load_rack_source(oracle::data_path("c3_copy.rack")) == builtin(Family::cyclic, 3));
  CHECK_THROWS_AS(load_rack_source(oracle::data_path("bad_cell.rack")), MalformedTable);
  CHECK_THROWS_AS(parse_rack("order 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(load_rack_source("builtin:cyclic"), InvalidInput);
  CHECK_THROWS_AS(load_rack_source("/no/such/file.rack"), InvalidInput);
}
