#include "rackcolor/transforms.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "rackcolor/errors.hpp"

namespace rackcolor {

namespace {

std::unordered_map<std::string_view, std::size_t> index_sheets(const Presentation& p) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < p.sheets.size(); ++i) index.emplace(p.sheets[i], i);
  return index;
}

void require_coloring(const Presentation& p, const RackTable& t, const Coloring& c, const char* what) {
  auto violations = check_coloring(p, t, c);
  if (!violations.empty()) throw InvalidInput(std::string(what) + ": " + violations.front().message);
}

// One directed edge of the numbering constraint graph.
struct Arc {
  std::size_t to = 0;
  long long delta = 0;
  WalkStep::Kind kind = WalkStep::Kind::double_relation;
  std::size_t index = 0;
  bool reversed = false;
};

std::vector<std::vector<Arc>> numbering_graph(const Presentation& overlay) {
  auto index = index_sheets(overlay);
  std::vector<std::vector<Arc>> arcs(overlay.sheets.size());
  auto add = [&](std::size_t u, std::size_t v, long long delta, WalkStep::Kind kind, std::size_t i) {
    arcs[u].push_back({v, delta, kind, i, false});
    arcs[v].push_back({u, -delta, kind, i, true});
  };
  for (std::size_t i = 0; i < overlay.doubles.size(); ++i) {
    const auto& d = overlay.doubles[i];
    add(index.at(d.under_from), index.at(d.under_to), 0, WalkStep::Kind::double_relation, i);
  }
  for (std::size_t i = 0; i < overlay.curves.size(); ++i) {
    const auto& c = overlay.curves[i];
    add(index.at(c.from), index.at(c.to), c.layer == 2 ? 1 : -1, WalkStep::Kind::curve_edge, i);
  }
  return arcs;
}

WalkStep make_step(const Presentation& overlay, std::size_t from, const Arc& arc) {
  return {arc.kind, arc.index, arc.reversed, overlay.sheets[from], overlay.sheets[arc.to], arc.delta};
}

WalkStep reverse_step(WalkStep s) {
  std::swap(s.from, s.to);
  s.delta = -s.delta;
  s.reversed = !s.reversed;
  return s;
}

}  // namespace

PushOff pushoff(const Presentation& d) {
  require_valid(d);
  if (!d.curves.empty()) throw InvalidInput("pushoff needs a plain diagram (no curve edges)");
  if (!d.branches.empty()) throw InvalidInput("pushoff needs a diagram without branch points");

  PushOff out;
  out.overlay.sheets = d.sheets;
  out.overlay.genus = d.genus;
  std::set<SheetId> taken(d.sheets.begin(), d.sheets.end());
  for (std::size_t t = 0; t < d.doubles.size(); ++t) {
    const auto& rel = d.doubles[t];
    SheetId strip = rel.under_from + "__strip" + std::to_string(t);
    while (taken.contains(strip)) strip += '_';
    taken.insert(strip);
    out.overlay.sheets.push_back(strip);
    out.overlay.curves.push_back({rel.under_from, strip, 1});
    out.overlay.doubles.push_back({strip, rel.over, rel.under_to});
    out.strips.push_back({t, strip, rel.under_from});
  }
  return out;
}

NumberingResult alexander_numbering(const Presentation& overlay) {
  require_valid(overlay);
  const std::size_t n = overlay.sheets.size();
  auto arcs = numbering_graph(overlay);
  std::vector<std::optional<long long>> value(n);
  std::vector<std::optional<std::pair<std::size_t, Arc>>> via(n);  // tree arc into each sheet

  auto path_from_root = [&](std::size_t x) {
    std::vector<std::size_t> path{x};
    while (via[path.back()]) path.push_back(via[path.back()]->first);
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (value[root]) continue;
    value[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& arc : arcs[u]) {
        long long expected = *value[u] + arc.delta;
        if (!value[arc.to]) {
          value[arc.to] = expected;
          via[arc.to] = std::pair{u, arc};
          queue.push_back(arc.to);
          continue;
        }
        if (*value[arc.to] == expected) continue;

        // Closed walk: lca -> u along the tree, the offending arc, back to lca.
        auto to_u = path_from_root(u), to_v = path_from_root(arc.to);
        std::size_t common = 0;
        while (common < to_u.size() && common < to_v.size() && to_u[common] == to_v[common]) ++common;
        NumberingObstruction obstruction;
        for (std::size_t i = common; i < to_u.size(); ++i)
          obstruction.walk.push_back(make_step(overlay, via[to_u[i]]->first, via[to_u[i]]->second));
        obstruction.walk.push_back(make_step(overlay, u, arc));
        for (std::size_t i = to_v.size(); i-- > common;)
          obstruction.walk.push_back(reverse_step(make_step(overlay, via[to_v[i]]->first, via[to_v[i]]->second)));
        for (const auto& step : obstruction.walk) obstruction.total += step.delta;
        return obstruction;
      }
    }
  }

  Numbering numbering;
  numbering.values.reserve(n);
  for (const auto& v : value) numbering.values.push_back(*v);
  return numbering;
}

std::vector<std::string> numbering_violations(const Presentation& overlay, const Numbering& numbering) {
  require_valid(overlay);
  std::vector<std::string> out;
  if (numbering.values.size() != overlay.sheets.size()) {
    out.push_back("numbering has " + std::to_string(numbering.values.size()) + " values for " +
                  std::to_string(overlay.sheets.size()) + " sheets");
    return out;
  }
  auto index = index_sheets(overlay);
  auto n = [&](const SheetId& s) { return numbering.values[index.at(s)]; };
  for (std::size_t i = 0; i < overlay.doubles.size(); ++i) {
    const auto& d = overlay.doubles[i];
    if (n(d.under_to) != n(d.under_from)) out.push_back("double " + std::to_string(i) + " changes the number");
  }
  for (std::size_t i = 0; i < overlay.curves.size(); ++i) {
    const auto& c = overlay.curves[i];
    long long step = c.layer == 2 ? 1 : -1;
    if (n(c.to) != n(c.from) + step)
      out.push_back("curve " + std::to_string(i) + " needs a step of " + std::to_string(step));
  }
  return out;
}

bool verify_obstruction(const Presentation& overlay, const NumberingObstruction& obstruction) {
  if (obstruction.walk.empty()) return false;
  long long total = 0;
  for (std::size_t s = 0; s < obstruction.walk.size(); ++s) {
    const auto& step = obstruction.walk[s];
    const auto& next = obstruction.walk[(s + 1) % obstruction.walk.size()];
    if (step.to != next.from) return false;

    SheetId from, to;
    long long delta = 0;
    if (step.kind == WalkStep::Kind::double_relation) {
      if (step.index >= overlay.doubles.size()) return false;
      const auto& d = overlay.doubles[step.index];
      from = d.under_from;
      to = d.under_to;
    } else {
      if (step.index >= overlay.curves.size()) return false;
      const auto& c = overlay.curves[step.index];
      from = c.from;
      to = c.to;
      delta = c.layer == 2 ? 1 : -1;
    }
    if (step.reversed) {
      std::swap(from, to);
      delta = -delta;
    }
    if (step.from != from || step.to != to || step.delta != delta) return false;
    total += delta;
  }
  return total != 0 && total == obstruction.total;
}

namespace {

// Carries a coloring of one contraction of the overlay to the other one.
struct Transport {
  Contraction source;  // coloring lives here
  Contraction target;  // result lives here
  long long sign = 1;
};

Transport phi_transport(const Presentation& overlay, bool forward) {
  Transport tr;
  tr.source = contract(overlay, forward ? 2 : 1);
  tr.target = contract(overlay, forward ? 1 : 2);
  tr.sign = forward ? 1 : -1;
  return tr;
}

std::vector<std::vector<Element>> transport_candidates(const Presentation& overlay, const Transport& tr,
                                                       const Numbering& numbering, const KinkMap& iota,
                                                       const Coloring& c) {
  auto source_index = index_sheets(tr.source.result);
  auto target_index = index_sheets(tr.target.result);
  std::vector<std::vector<Element>> candidates(tr.target.result.sheets.size());
  for (std::size_t y = 0; y < overlay.sheets.size(); ++y) {
    const auto& sheet = overlay.sheets[y];
    Element base = c.values[source_index.at(tr.source.parent.at(sheet))];
    candidates[target_index.at(tr.target.parent.at(sheet))].push_back(
        iota.power(base, tr.sign * numbering.values[y]));
  }
  return candidates;
}

Coloring transport(const Presentation& overlay, const Numbering& numbering, const RackTable& t, const Coloring& c,
                   bool forward, bool check_numbering) {
  Transport tr = phi_transport(overlay, forward);
  require_coloring(tr.source.result, t, c, "input coloring");
  KinkMap iota = kink_map(t);
  if (check_numbering) {
    auto problems = numbering_violations(overlay, numbering);
    if (!problems.empty()) throw InvalidInput("inconsistent numbering: " + problems.front());
  } else if (numbering.values.size() != overlay.sheets.size()) {
    throw InvalidInput("numbering does not match the overlay");
  }

  auto candidates = transport_candidates(overlay, tr, numbering, iota, c);
  Coloring out;
  for (const auto& values : candidates) {
    if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>{}) != values.end())
      throw InternalError("representatives of one sheet disagree");
    out.values.push_back(values.front());
  }
  if (!check_coloring(tr.target.result, t, out).empty())
    throw InternalError("transported coloring violates a relation");
  return out;
}

}  // namespace

Coloring phi(const Presentation& overlay, const Numbering& numbering, const RackTable& t, const Coloring& c1) {
  return transport(overlay, numbering, t, c1, true, true);
}

Coloring phi_inverse(const Presentation& overlay, const Numbering& numbering, const RackTable& t,
                     const Coloring& c2) {
  return transport(overlay, numbering, t, c2, false, true);
}

std::vector<std::vector<Element>> phi_representative_values(const Presentation& overlay, const Numbering& numbering,
                                                            const RackTable& t, const Coloring& c1) {
  Transport tr = phi_transport(overlay, true);
  require_coloring(tr.source.result, t, c1, "input coloring");
  auto problems = numbering_violations(overlay, numbering);
  if (!problems.empty()) throw InvalidInput("inconsistent numbering: " + problems.front());
  return transport_candidates(overlay, tr, numbering, kink_map(t), c1);
}

Coloring psi(const Presentation& d, const PushOff& push, const RackTable& t, const Coloring& quandle_coloring) {
  RackTable q = associated_quandle(t);
  require_coloring(d, q, quandle_coloring, "Q_R coloring");
  KinkMap iota = kink_map(t);
  auto index = index_sheets(d);
  auto overlay_index = index_sheets(push.overlay);

  Coloring out;
  out.values.assign(push.overlay.sheets.size(), -1);
  for (std::size_t i = 0; i < d.sheets.size(); ++i)
    out.values[overlay_index.at(d.sheets[i])] = quandle_coloring.values[i];
  for (const auto& strip : push.strips)
    out.values[overlay_index.at(strip.strip)] = iota(quandle_coloring.values[index.at(strip.parent)]);
  if (!check_coloring(push.overlay, t, out).empty()) throw InternalError("psi produced an invalid coloring");
  return out;
}

Coloring psi_inverse(const Presentation& d, const PushOff& push, const RackTable& t,
                     const Coloring& overlay_coloring) {
  require_coloring(push.overlay, t, overlay_coloring, "overlay coloring");
  auto overlay_index = index_sheets(push.overlay);
  Coloring out;
  for (const auto& sheet : d.sheets) out.values.push_back(overlay_coloring.values[overlay_index.at(sheet)]);
  if (!check_coloring(d, associated_quandle(t), out).empty())
    throw InternalError("psi_inverse produced an invalid coloring");
  return out;
}

Theorem2Report theorem2_report(const Presentation& d, const RackTable& t, const SolverOptions& options) {
  PushOff push = pushoff(d);
  RackTable q = associated_quandle(t);
  KinkMap iota = kink_map(t);

  Theorem2Report report;
  report.identity_kink = iota.is_identity();
  auto quandle_side = enumerate_colorings(d, q, options);
  report.quandle_count = quandle_side.size();
  report.rack_count = count_colorings(d, t, options);

  auto numbering = alexander_numbering(push.overlay);
  report.numbering_consistent = std::holds_alternative<Numbering>(numbering);
  if (!report.numbering_consistent) report.obstruction = std::get<NumberingObstruction>(numbering);
  if (!report.numbering_consistent && !report.identity_kink) {
    report.verdict = Theorem2Report::Verdict::no_bijection_claimed;
    report.detail = "push-off numbering is inconsistent";
    return report;
  }

  // With iota = id every power of iota is the identity, so a zero numbering
  // drives phi even when the real one does not exist.
  Numbering n = report.numbering_consistent ? std::get<Numbering>(numbering)
                                            : Numbering{std::vector<long long>(push.overlay.sheets.size(), 0)};
  const bool checked = report.numbering_consistent;
  if (contract(push.overlay, 1).result != d) throw InternalError("contracting the push-off does not recover d");

  auto fail = [&](std::string why) {
    report.verdict = Theorem2Report::Verdict::bijection_failed;
    report.detail = std::move(why);
    return report;
  };
  std::vector<Coloring> images;
  images.reserve(quandle_side.size());
  for (const auto& c : quandle_side) {
    Coloring lifted = psi(d, push, t, c);
    Coloring image = transport(push.overlay, n, t, lifted, true, checked);
    Coloring back = psi_inverse(d, push, t, transport(push.overlay, n, t, image, false, checked));
    if (back != c) return fail("round trip does not return to " + format_coloring(d, c));
    images.push_back(std::move(image));
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return fail("map is not injective");
  if (images.size() != report.rack_count) return fail("map is not surjective");
  report.verdict = Theorem2Report::Verdict::bijection_verified;
  report.detail = report.numbering_consistent ? "phi after psi is a bijection"
                                              : "kink map is the identity; psi and phi are relabelings";
  return report;
}

}  // namespace rackcolor
