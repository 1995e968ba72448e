#include "rackcolor/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rackcolor/algebra.hpp"
#include "rackcolor/coloring.hpp"
#include "rackcolor/errors.hpp"
#include "rackcolor/moves.hpp"
#include "rackcolor/presentation.hpp"
#include "rackcolor/rack_io.hpp"
#include "rackcolor/text.hpp"
#include "rackcolor/transforms.hpp"

namespace rackcolor::cli {

namespace {

using nlohmann::json;

struct Output {
  int exit_code = 0;
  std::string text;
  json payload;
};

template <typename Range>
std::string joined(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  return out.str();
}

std::string ok(bool value) { return value ? "ok" : "fail"; }

std::string rack_name(const RackTable& t) { return t.label().empty() ? "(unnamed)" : t.label(); }

Output rack_check(const RackTable& t) {
  auto r = check_axioms(t);
  std::ostringstream out;
  out << "rack: " << rack_name(t) << "\norder: " << t.order() << "\n";
  out << "Q1 a*a=a: " << ok(r.q1());
  if (r.idempotence_witness) out << " (a=" << *r.idempotence_witness << ")";
  out << "\nQ2 right translations bijective: " << ok(r.q2());
  if (r.translation_witness) out << " (b=" << *r.translation_witness << ")";
  out << "\nQ3 right self-distributive: " << ok(r.q3());
  if (r.distributivity_witness) out << " (a,b,c=" << joined(*r.distributivity_witness) << ")";
  bool rack = r.q2() && r.q3();
  out << "\nis rack: " << (rack ? "yes" : "no") << "\nis quandle: " << (rack && r.q1() ? "yes" : "no") << "\n";

  json j = {{"rack", rack_to_json(t)}, {"q1", r.q1()}, {"q2", r.q2()}, {"q3", r.q3()},
            {"is_rack", rack}, {"is_quandle", rack && r.q1()}};
  if (r.idempotence_witness) j["q1_witness"] = *r.idempotence_witness;
  if (r.translation_witness) j["q2_witness"] = *r.translation_witness;
  if (r.distributivity_witness) j["q3_witness"] = *r.distributivity_witness;
  return {rack ? 0 : 1, out.str(), j};
}

Output rack_kink(const RackTable& t) {
  KinkMap k = kink_map(t);
  KinkReport r = verify_kink_properties(t);
  std::ostringstream out;
  out << "iota: " << joined(k.forward()) << "\niota^-1: " << joined(k.inverse()) << "\n";
  out << "iota(a)*a=a: " << ok(r.defining()) << "\nK1 bijective: " << ok(r.k1())
      << "\nK2 iota(a)*b=iota(a*b): " << ok(r.k2()) << "\nK3 a*iota(b)=a*b: " << ok(r.k3()) << "\n";
  json j = {{"forward", k.forward()}, {"inverse", k.inverse()}, {"defining", r.defining()},
            {"k1", r.k1()}, {"k2", r.k2()}, {"k3", r.k3()}};
  return {r.all() ? 0 : 1, out.str(), j};
}

Output rack_assoc(const RackTable& t) {
  RackTable q = associated_quandle(t);
  return {0, serialize_rack(q), rack_to_json(q)};
}

Output rack_components(const RackTable& t) {
  auto components = connected_components(t);
  std::ostringstream out;
  for (std::size_t i = 0; i < components.size(); ++i) out << "component " << i << ": " << joined(components[i]) << "\n";
  out << "connected: " << (components.size() == 1 ? "yes" : "no") << "\n";
  return {0, out.str(), {{"components", components}, {"connected", components.size() == 1}}};
}

Output rack_enumerate(int n) {
  auto racks = enumerate_racks(n);
  std::ostringstream out;
  json list = json::array();
  std::size_t quandles = 0;
  for (std::size_t i = 0; i < racks.size(); ++i) {
    bool quandle = is_quandle(racks[i]);
    quandles += quandle;
    out << "# rack " << i << (quandle ? " (quandle)" : "") << "\n" << serialize_rack(racks[i]) << "\n";
    list.push_back(rack_to_json(racks[i]));
  }
  out << "racks: " << racks.size() << "\nquandles: " << quandles << "\n";
  return {0, out.str(), {{"order", n}, {"racks", list}, {"count", racks.size()}, {"quandles", quandles}}};
}

Output color(const Presentation& p, const RackTable& t, bool list) {
  ColoringProblem problem(p, t);
  std::ostringstream out;
  json j = {{"sheets", p.sheets}, {"rack", rack_name(t)}};
  if (list) {
    auto all = problem.enumerate();
    json rows = json::array();
    for (const auto& c : all) {
      out << format_coloring(p, c) << "\n";
      rows.push_back(c.values);
    }
    j["colorings"] = rows;
    j["count"] = all.size();
  } else {
    auto n = problem.count();
    out << "count: " << n << "\n";
    j["count"] = n;
  }
  return {0, out.str(), j};
}

Output pres_validate(const std::string& source) {
  Presentation p = std::string_view(source).starts_with("corpus:") ? load_presentation_source(source)
                                                                  : parse_presentation_raw(text::read_file(source));
  auto violations = validate(p);
  std::ostringstream out;
  json list = json::array();
  for (const auto& v : violations) {
    out << "violation: " << v.message << "\n";
    list.push_back(v.message);
  }
  if (violations.empty()) out << "ok\n";
  return {violations.empty() ? 0 : 1, out.str(), {{"ok", violations.empty()}, {"violations", list}}};
}

Output pushoff_command(const Presentation& d) {
  PushOff push = pushoff(d);
  json strips = json::array();
  for (const auto& s : push.strips) strips.push_back({{"relation", s.relation}, {"strip", s.strip}, {"parent", s.parent}});
  return {0, serialize_presentation(push.overlay), {{"overlay", presentation_to_json(push.overlay)}, {"strips", strips}}};
}

json walk_to_json(const NumberingObstruction& o) {
  json walk = json::array();
  for (const auto& s : o.walk)
    walk.push_back({{"from", s.from},
                    {"to", s.to},
                    {"delta", s.delta},
                    {"constraint", s.kind == WalkStep::Kind::double_relation ? "double" : "curve"},
                    {"index", s.index},
                    {"reversed", s.reversed}});
  return {{"walk", walk}, {"total", o.total}};
}

std::string walk_to_text(const NumberingObstruction& o) {
  std::ostringstream out;
  for (const auto& s : o.walk) {
    out << "  " << s.from << " -> " << s.to << "  " << (s.delta >= 0 ? "+" : "") << s.delta << "  via "
        << (s.kind == WalkStep::Kind::double_relation ? "double " : "curve ") << s.index
        << (s.reversed ? " (reversed)" : "") << "\n";
  }
  out << "  total " << o.total << "\n";
  return out.str();
}

Output numbering_command(const Presentation& overlay) {
  auto result = alexander_numbering(overlay);
  std::ostringstream out;
  if (auto* n = std::get_if<Numbering>(&result)) {
    out << "numbering: consistent\n";
    json values = json::object();
    for (std::size_t i = 0; i < overlay.sheets.size(); ++i) {
      out << overlay.sheets[i] << "=" << n->values[i] << "\n";
      values[overlay.sheets[i]] = n->values[i];
    }
    return {0, out.str(), {{"consistent", true}, {"sheets", overlay.sheets}, {"values", n->values}}};
  }
  const auto& o = std::get<NumberingObstruction>(result);
  out << "numbering: inconsistent\nwitness walk:\n" << walk_to_text(o);
  return {1, out.str(), {{"consistent", false}, {"obstruction", walk_to_json(o)}}};
}

std::string verdict_name(Theorem2Report::Verdict v) {
  switch (v) {
    case Theorem2Report::Verdict::bijection_verified: return "bijection verified";
    case Theorem2Report::Verdict::no_bijection_claimed: return "no bijection claimed";
    case Theorem2Report::Verdict::bijection_failed: return "bijection FAILED";
  }
  return "?";
}

Output theorem2_command(const Presentation& d, const RackTable& t) {
  auto r = theorem2_report(d, t);
  std::ostringstream out;
  out << "rack: " << rack_name(t) << "\n";
  out << "push-off numbering: " << (r.numbering_consistent ? "consistent" : "inconsistent") << "\n";
  if (r.obstruction) out << "witness walk:\n" << walk_to_text(*r.obstruction);
  out << "kink map is identity: " << (r.identity_kink ? "yes" : "no") << "\n";
  out << "colorings by associated quandle: " << r.quandle_count << "\n";
  out << "colorings by rack: " << r.rack_count << "\n";
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  if (!r.detail.empty()) out << "detail: " << r.detail << "\n";
  json j = {{"rack", rack_name(t)},
            {"numbering_consistent", r.numbering_consistent},
            {"identity_kink", r.identity_kink},
            {"quandle_count", r.quandle_count},
            {"rack_count", r.rack_count},
            {"verdict", verdict_name(r.verdict)},
            {"detail", r.detail}};
  if (r.obstruction) j["obstruction"] = walk_to_json(*r.obstruction);
  bool verified = r.verdict == Theorem2Report::Verdict::bijection_verified;
  return {verified ? 0 : 1, out.str(), j};
}

Output move_verify(const MoveSchema& m, const RackTable& t) {
  auto r = verify_move(m, t);
  std::ostringstream out;
  out << "move: " << r.name << "\nrack: " << rack_name(t) << "\nboundary: " << joined(m.boundary) << "\n";
  out << "boundary colorings with extensions: " << r.tallies.size() << "\n";
  out << "colorings before: " << r.total_before << "\ncolorings after: " << r.total_after << "\n";
  json tallies = json::array();
  std::size_t shown = 0;
  for (const auto& tally : r.tallies) {
    tallies.push_back({{"boundary", tally.boundary}, {"before", tally.before}, {"after", tally.after}});
    if (tally.before != tally.after && shown++ < 10)
      out << "  mismatch at " << joined(tally.boundary) << ": " << tally.before << " vs " << tally.after << "\n";
  }
  out << "mismatches: " << r.mismatches << "\nverdict: " << (r.bijective ? "bijective" : "not bijective") << "\n";
  json j = {{"move", r.name},         {"rack", rack_name(t)},         {"boundary", m.boundary},
            {"tallies", tallies},     {"total_before", r.total_before}, {"total_after", r.total_after},
            {"mismatches", r.mismatches}, {"bijective", r.bijective}};
  return {r.bijective ? 0 : 1, out.str(), j};
}

Output move_catalog() {
  std::ostringstream out;
  json list = json::array();
  for (const auto& m : catalog()) {
    out << serialize_schema(m) << "\n";
    list.push_back({{"name", m.name}, {"boundary", m.boundary}, {"schema", serialize_schema(m)}});
  }
  return {0, out.str(), list};
}

Output satoh_command(const RackTable& t) {
  auto r = satoh_discrimination(t);
  std::ostringstream out;
  out << "rack: " << rack_name(t) << "\nsatoh_d1 colorings: " << r.d1_count << "\nsatoh_d2 colorings: " << r.d2_count
      << "\n";
  std::string verdict = "inconclusive";
  int code = 1;
  if (r.status == SatohReport::Status::precondition_violated) {
    verdict = "precondition violated";
    code = 2;
  } else if (r.status == SatohReport::Status::not_regular_equivalent) {
    verdict = "not regular-equivalent";
    code = 0;
  }
  out << "verdict: " << verdict << "\ndetail: " << r.detail << "\n";
  json j = {{"rack", rack_name(t)}, {"d1_count", r.d1_count}, {"d2_count", r.d2_count}, {"verdict", verdict},
            {"detail", r.detail}};
  return {code, out.str(), j};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Rack and quandle colorings of surface-knot diagrams", "rackcolor"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<Output()> action;
  auto sub = [](CLI::App* parent, const std::string& name, const std::string& about) {
    auto* s = parent->add_subcommand(name, about);
    s->fallthrough();
    return s;
  };

  std::string src, pres, rack_src, schema;
  int order = 0;
  bool with_pushoff = false;

  auto* rack = sub(&app, "rack", "Inspect a rack given as a .rack path or builtin:<family>:<n>");
  rack->require_subcommand(1);
  sub(rack, "check", "Check the rack and quandle axioms")->callback([&] {
    action = [&] { return rack_check(load_rack_source(src)); };
  })->add_option("src", src)->required();
  sub(rack, "kink", "Kink map and its laws")->callback([&] {
    action = [&] { return rack_kink(load_rack_source(src)); };
  })->add_option("src", src)->required();
  sub(rack, "assoc", "Associated quandle")->callback([&] {
    action = [&] { return rack_assoc(load_rack_source(src)); };
  })->add_option("src", src)->required();
  sub(rack, "components", "Connected components")->callback([&] {
    action = [&] { return rack_components(load_rack_source(src)); };
  })->add_option("src", src)->required();
  sub(rack, "enumerate", "All racks of order n (n <= 4)")->callback([&] {
    action = [&] { return rack_enumerate(order); };
  })->add_option("n", order)->required();

  auto* color_cmd = sub(&app, "color", "Colorings of a presentation");
  color_cmd->require_subcommand(1);
  for (bool list : {false, true}) {
    auto* s = sub(color_cmd, list ? "list" : "count", list ? "List colorings" : "Count colorings");
    s->add_option("pres", pres, ".pres path or corpus:<name>")->required();
    s->add_option("--rack", rack_src)->required();
    s->callback([&, list] {
      action = [&, list] { return color(load_presentation_source(pres), load_rack_source(rack_src), list); };
    });
  }

  auto* pres_cmd = sub(&app, "pres", "Presentation utilities");
  pres_cmd->require_subcommand(1);
  sub(pres_cmd, "validate", "Report invariant violations")->callback([&] {
    action = [&] { return pres_validate(pres); };
  })->add_option("pres", pres)->required();

  sub(&app, "pushoff", "Push-off overlay of a plain branch-free diagram")->callback([&] {
    action = [&] { return pushoff_command(load_presentation_source(pres)); };
  })->add_option("pres", pres)->required();

  auto* numbering = sub(&app, "numbering", "Alexander numbering of an overlay");
  numbering->add_option("pres", pres)->required();
  numbering->add_flag("--pushoff", with_pushoff, "Number the push-off of the given diagram");
  numbering->callback([&] {
    action = [&] {
      Presentation p = load_presentation_source(pres);
      return numbering_command(with_pushoff ? pushoff(p).overlay : p);
    };
  });

  auto* theorem2 = sub(&app, "theorem2", "Check the rack / associated-quandle bijection");
  theorem2->add_option("pres", pres)->required();
  theorem2->add_option("--rack", rack_src)->required();
  theorem2->callback([&] {
    action = [&] { return theorem2_command(load_presentation_source(pres), load_rack_source(rack_src)); };
  });

  auto* move = sub(&app, "move", "Move schemas");
  move->require_subcommand(1);
  auto* verify = sub(move, "verify", "Compare boundary extension counts");
  verify->add_option("schema", schema, "schema path or catalog:<name>")->required();
  verify->add_option("--rack", rack_src)->required();
  verify->callback([&] {
    action = [&] { return move_verify(load_schema_source(schema), load_rack_source(rack_src)); };
  });
  sub(move, "catalog", "Print the branch-free move catalog")->callback([&] { action = [] { return move_catalog(); }; });

  auto* satoh = sub(&app, "satoh", "Separate the Satoh diagrams by rack colorings");
  satoh->add_option("--rack", rack_src)->required();
  satoh->callback([&] { action = [&] { return satoh_command(load_rack_source(rack_src)); }; });

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.output = out.str();
    result.error = err.str();
    return result;
  }

  try {
    Output out = action();
    result.exit_code = out.exit_code;
    result.output = format == "json" ? out.payload.dump(2) + "\n" : out.text;
  } catch (const Error& e) {
    result.exit_code = 2;
    result.error = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace rackcolor::cli
