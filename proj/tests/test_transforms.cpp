#include <doctest.h>

#include "oracles.hpp"
#include "rackcolor/coloring.hpp"
#include "rackcolor/errors.hpp"
#include "rackcolor/transforms.hpp"

using namespace rackcolor;

namespace {

std::vector<Presentation> corpus_overlays() {
  std::vector<Presentation> out;
  for (auto name : builtin_presentation_names()) out.push_back(pushoff(builtin_presentation(name)).overlay);
  for (auto& [name, p] : oracle::data_presentations()) out.push_back(p);
  return out;
}

std::vector<RackTable> racks_to_order(int max) {
  std::vector<RackTable> out;
  for (int n = 1; n <= std::min(max, 3); ++n)
    for (auto& t : enumerate_racks(n)) out.push_back(t);
  for (int n = 4; n <= max; ++n) {
    out.push_back(builtin(Family::cyclic, n));
    out.push_back(builtin(Family::dihedral, n));
  }
  return out;
}

}  // namespace

TEST_CASE("push-off") {
  auto d2 = pushoff(builtin_presentation("satoh_d2"));
  CHECK(d2.overlay.sheets == std::vector<SheetId>{"s", "s__strip0"});
  CHECK(d2.overlay.curves == std::vector<CurveEdge>{{"s", "s__strip0", 1}});
  CHECK(d2.overlay.doubles == std::vector<DoubleRelation>{{"s__strip0", "s", "s"}});
  CHECK(d2.strips == StripMap{{0, "s__strip0", "s"}});

  auto sc = pushoff(builtin_presentation("sphere_circle"));
  CHECK(sc.overlay.sheets == std::vector<SheetId>{"p", "q", "o", "p__strip0"});
  CHECK(sc.overlay.curves == std::vector<CurveEdge>{{"p", "p__strip0", 1}});
  CHECK(sc.overlay.doubles == std::vector<DoubleRelation>{{"p__strip0", "o", "q"}});

  auto d1 = pushoff(builtin_presentation("satoh_d1"));
  CHECK(d1.overlay == builtin_presentation("satoh_d1"));
  CHECK(d1.strips.empty());

  auto clash = pushoff(parse_presentation("sheets a a__strip0 o\ndouble a o a__strip0"));
  CHECK(clash.strips.at(0).strip == "a__strip0_");

  CHECK_THROWS_AS(pushoff(parse_presentation("sheets a b\ncurve a b 1")), InvalidInput);
  CHECK_THROWS_AS(pushoff(parse_presentation("sheets a\nbranch a")), InvalidInput);
}

TEST_CASE("Alexander numbering") {
  auto sc = pushoff(builtin_presentation("sphere_circle")).overlay;
  auto n = alexander_numbering(sc);
  REQUIRE(std::holds_alternative<Numbering>(n));
  CHECK(std::get<Numbering>(n).values == std::vector<long long>{0, -1, 0, -1});

  auto d2 = pushoff(builtin_presentation("satoh_d2")).overlay;
  auto bad = alexander_numbering(d2);
  REQUIRE(std::holds_alternative<NumberingObstruction>(bad));
  const auto& o = std::get<NumberingObstruction>(bad);
  CHECK(o.total != 0);
  CHECK(verify_obstruction(d2, o));
  CHECK(o.walk.front().from == o.walk.back().to);

  auto plain = parse_presentation("sheets a b c d\ndouble a b c\ndouble d a d");
  auto zero = alexander_numbering(plain);
  REQUIRE(std::holds_alternative<Numbering>(zero));
  CHECK(std::get<Numbering>(zero).values == std::vector<long long>{0, 0, 0, 0});

  for (const auto& p : corpus_overlays()) {
    auto r = alexander_numbering(p);
    if (auto* num = std::get_if<Numbering>(&r)) {
      CHECK(numbering_violations(p, *num).empty());
    } else {
      CHECK(verify_obstruction(p, std::get<NumberingObstruction>(r)));
    }
  }

  NumberingObstruction forged{{{WalkStep::Kind::curve_edge, 0, false, "s", "s__strip0", 5}}, 5};
  CHECK_FALSE(verify_obstruction(d2, forged));
}

TEST_CASE("phi on the sphere with a circle") {
  auto c3 = builtin(Family::cyclic, 3);
  auto overlay = pushoff(builtin_presentation("sphere_circle")).overlay;
  auto num = std::get<Numbering>(alexander_numbering(overlay));
  Coloring c1{{0, 0, 0, 2}};
  REQUIRE(check_coloring(overlay, c3, c1).empty());
  auto c2 = phi(overlay, num, c3, c1);
  CHECK(c2.values == std::vector<Element>{0, 1, 0});
  CHECK(check_coloring(contract(overlay, 1).result, c3, c2).empty());
  CHECK(phi_inverse(overlay, num, c3, c2) == c1);

  for (const auto& t : {c3, builtin(Family::dihedral, 3)}) {
    auto domain = enumerate_colorings(overlay, t);
    CHECK(domain.size() == 9);
    for (const auto& c : domain) CHECK(phi_inverse(overlay, num, t, phi(overlay, num, t, c)) == c);
  }

  Numbering wrong{{0, 0, 0, 0}};
  CHECK_THROWS_AS(phi(overlay, wrong, c3, c1), InvalidInput);
  CHECK_THROWS_AS(phi(overlay, num, c3, Coloring{{0, 0, 0, 0}}), InvalidInput);
}

TEST_CASE("phi without curves is the identity") {
  auto p = parse_presentation("sheets a b c\ndouble a b c");
  auto num = std::get<Numbering>(alexander_numbering(p));
  auto t = builtin(Family::cyclic, 4);
  for (const auto& c : enumerate_colorings(p, t)) CHECK(phi(p, num, t, c) == c);
}

TEST_CASE("phi is well defined and invertible on corpus overlays") {
  for (const auto& overlay : corpus_overlays()) {
    auto r = alexander_numbering(overlay);
    auto* num = std::get_if<Numbering>(&r);
    if (!num) continue;
    auto target = contract(overlay, 1).result;
    auto source = contract(overlay, 2).result;
    for (const auto& t : racks_to_order(5)) {
      auto domain = enumerate_colorings(source, t);
      std::set<Coloring> image;
      for (const auto& c : domain) {
        for (const auto& reps : phi_representative_values(overlay, *num, t, c))
          CHECK(std::all_of(reps.begin(), reps.end(), [&](Element v) { return v == reps.front(); }));
        auto c2 = phi(overlay, *num, t, c);
        CHECK(check_coloring(target, t, c2).empty());
        CHECK(phi_inverse(overlay, *num, t, c2) == c);
        image.insert(c2);
      }
      CHECK(image.size() == domain.size());
      CHECK(count_colorings(target, t) == domain.size());
    }
  }
}

TEST_CASE("psi") {
  auto c3 = builtin(Family::cyclic, 3);
  auto d = builtin_presentation("sphere_circle");
  auto push = pushoff(d);
  auto overlay_coloring = psi(d, push, c3, Coloring{{0, 0, 2}});
  CHECK(overlay_coloring.values == std::vector<Element>{0, 0, 2, 2});
  CHECK(check_coloring(push.overlay, c3, overlay_coloring).empty());

  auto q = associated_quandle(c3);
  auto domain = enumerate_colorings(d, q);
  CHECK(domain.size() == 9);
  for (const auto& c : domain) CHECK(psi_inverse(d, push, c3, psi(d, push, c3, c)) == c);
  for (const auto& c : enumerate_colorings(push.overlay, c3))
    CHECK(psi(d, push, c3, psi_inverse(d, push, c3, c)) == c);

  for (auto name : builtin_presentation_names()) {
    auto dd = builtin_presentation(name);
    auto pp = pushoff(dd);
    for (const auto& t : racks_to_order(6))
      CHECK(count_colorings(pp.overlay, t) == count_colorings(dd, associated_quandle(t)));
  }
}

TEST_CASE("rack versus associated quandle reports") {
  auto c3 = builtin(Family::cyclic, 3);
  auto sc = theorem2_report(builtin_presentation("sphere_circle"), c3);
  CHECK(sc.numbering_consistent);
  CHECK(sc.quandle_count == 9);
  CHECK(sc.rack_count == 9);
  CHECK(sc.verdict == Theorem2Report::Verdict::bijection_verified);

  auto d2 = theorem2_report(builtin_presentation("satoh_d2"), c3);
  CHECK_FALSE(d2.numbering_consistent);
  REQUIRE(d2.obstruction);
  CHECK(d2.quandle_count == 3);
  CHECK(d2.rack_count == 0);
  CHECK(d2.verdict == Theorem2Report::Verdict::no_bijection_claimed);

  auto d1 = theorem2_report(builtin_presentation("satoh_d1"), c3);
  CHECK(d1.quandle_count == 3);
  CHECK(d1.rack_count == 3);
  CHECK(d1.verdict == Theorem2Report::Verdict::bijection_verified);

  auto q = theorem2_report(builtin_presentation("satoh_d2"), builtin(Family::dihedral, 3));
  CHECK(q.identity_kink);
  CHECK(q.verdict == Theorem2Report::Verdict::bijection_verified);

  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto d = oracle::random_plain(rng);
    for (int n = 3; n <= 5; ++n) {
      auto r = theorem2_report(d, builtin(Family::cyclic, n));
      CHECK(r.verdict != Theorem2Report::Verdict::bijection_failed);
      if (r.numbering_consistent) CHECK(r.quandle_count == r.rack_count);
    }
  }
}
