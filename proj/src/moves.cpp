#include "rackcolor/moves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rackcolor/coloring.hpp"
#include "rackcolor/errors.hpp"
#include "rackcolor/text.hpp"

namespace rackcolor {

namespace detail {
extern const std::array<std::string_view, 4> kMoveCatalogText;
}

const SheetId& MoveSchema::sheet_of(const SheetId& piece, bool after_side) const {
  const auto& attach = after_side ? after_attach : before_attach;
  auto it = attach.find(piece);
  return it == attach.end() ? piece : it->second;
}

std::vector<std::string> validate_schema(const MoveSchema& m) {
  std::vector<std::string> out;
  if (m.name.empty()) out.push_back("schema has no name");
  std::set<SheetId> pieces;
  for (const auto& piece : m.boundary)
    if (!pieces.insert(piece).second) out.push_back("boundary piece '" + piece + "' listed twice");

  std::array<std::set<SheetId>, 2> interior;
  for (bool after_side : {false, true}) {
    const char* side = after_side ? "after" : "before";
    const auto& p = after_side ? m.after : m.before;
    for (const auto& v : validate(p)) out.push_back(std::string(side) + ": " + v.message);

    const auto& attach = after_side ? m.after_attach : m.before_attach;
    for (const auto& [piece, sheet] : attach)
      if (!pieces.contains(piece)) out.push_back(std::string(side) + ": attach names unknown piece '" + piece + "'");

    std::set<SheetId> sheets(p.sheets.begin(), p.sheets.end());
    std::set<SheetId> used;
    for (const auto& piece : m.boundary) {
      const auto& sheet = m.sheet_of(piece, after_side);
      if (!sheets.contains(sheet))
        out.push_back(std::string(side) + ": boundary piece '" + piece + "' has no sheet '" + sheet + "'");
      used.insert(sheet);
      if (sheet != piece && sheets.contains(piece))
        out.push_back(std::string(side) + ": sheet '" + piece + "' shadows a piece attached to '" + sheet + "'");
    }
    for (const auto& s : p.sheets)
      if (!used.contains(s)) interior[after_side].insert(s);
  }
  for (const auto& s : interior[0])
    if (interior[1].contains(s)) out.push_back("interior sheet '" + s + "' appears on both sides");
  return out;
}

namespace {

// Blanks out header and attach lines so the remaining text parses as `.pres`
// with the original line numbers.
struct Block {
  std::string pres_text;
  std::map<SheetId, SheetId> attach;
};

}  // namespace

MoveSchema parse_schema(std::string_view source) {
  MoveSchema m;
  std::array<Block, 2> blocks;
  int side = 0;
  int number = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view raw = source.substr(start, end - start);
    ++number;
    auto lines = text::tokenize_lines(raw);
    std::string keep;
    if (!lines.empty()) {
      const auto& tok = lines.front().tokens;
      if (tok.size() == 1 && tok[0] == "---") {
        if (side == 1) throw ParseError("more than one '---' separator", number);
        side = 1;
      } else if (tok[0] == "name") {
        if (side != 0 || tok.size() != 2) throw ParseError("'name <label>' belongs in the header", number);
        m.name = tok[1];
      } else if (tok[0] == "boundary") {
        if (side != 0) throw ParseError("'boundary' belongs in the header", number);
        m.boundary.insert(m.boundary.end(), tok.begin() + 1, tok.end());
      } else if (tok[0] == "attach") {
        if (tok.size() != 3) throw ParseError("'attach' takes a piece and a sheet", number);
        if (!blocks[side].attach.emplace(tok[1], tok[2]).second)
          throw ParseError("piece '" + tok[1] + "' attached twice", number);
      } else {
        keep = std::string(raw);
      }
    }
    for (int s = 0; s < 2; ++s) blocks[s].pres_text += (s == side ? keep : std::string{}) + '\n';
    if (end == source.size()) break;
    start = end + 1;
  }
  if (side != 1) throw ParseError("schema needs a '---' line between before and after", 0);
  m.before = parse_presentation(blocks[0].pres_text);
  m.after = parse_presentation(blocks[1].pres_text);
  m.before_attach = std::move(blocks[0].attach);
  m.after_attach = std::move(blocks[1].attach);
  auto problems = validate_schema(m);
  if (!problems.empty()) throw InvalidInput("schema " + m.name + ": " + problems.front());
  return m;
}

std::string serialize_schema(const MoveSchema& m) {
  std::ostringstream out;
  out << "name " << m.name << "\nboundary";
  for (const auto& piece : m.boundary) out << ' ' << piece;
  out << '\n';
  auto block = [&](const Presentation& p, const std::map<SheetId, SheetId>& attach) {
    out << serialize_presentation(p);
    for (const auto& [piece, sheet] : attach) out << "attach " << piece << ' ' << sheet << '\n';
  };
  block(m.before, m.before_attach);
  out << "---\n";
  block(m.after, m.after_attach);
  return out.str();
}

MoveSchema swapped(const MoveSchema& m) {
  MoveSchema s = m;
  std::swap(s.before, s.after);
  std::swap(s.before_attach, s.after_attach);
  return s;
}

MoveReport verify_move(const MoveSchema& m, const RackTable& t, const SolverOptions& options) {
  auto problems = validate_schema(m);
  if (!problems.empty()) throw InvalidInput("schema " + m.name + ": " + problems.front());
  if (!is_rack(t)) throw NotARack("move verification needs a rack");

  std::map<std::vector<Element>, std::array<std::uint64_t, 2>> histogram;
  for (bool after_side : {false, true}) {
    const auto& p = after_side ? m.after : m.before;
    std::vector<std::size_t> slot;
    for (const auto& piece : m.boundary) slot.push_back(*p.index_of(m.sheet_of(piece, after_side)));
    std::vector<Element> key(slot.size());
    for (const auto& c : ColoringProblem(p, t).enumerate(options)) {
      for (std::size_t i = 0; i < slot.size(); ++i) key[i] = c.values[slot[i]];
      ++histogram[key][after_side];
    }
  }

  MoveReport report;
  report.name = m.name;
  for (const auto& [boundary, counts] : histogram) {
    report.tallies.push_back({boundary, counts[0], counts[1]});
    report.total_before += counts[0];
    report.total_after += counts[1];
    if (counts[0] != counts[1]) ++report.mismatches;
  }
  report.bijective = report.mismatches == 0;
  return report;
}

std::vector<MoveSchema> catalog() {
  std::vector<MoveSchema> out;
  for (auto text : detail::kMoveCatalogText) out.push_back(parse_schema(text));
  return out;
}

MoveSchema load_schema_source(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (std::string_view(source).starts_with(prefix)) {
    auto name = std::string_view(source).substr(prefix.size());
    for (auto& m : catalog())
      if (std::ranges::equal(m.name, name, [](char x, char y) { return std::toupper(static_cast<unsigned char>(x)) == std::toupper(static_cast<unsigned char>(y)); }))
        return m;
    throw InvalidInput("no catalog move named '" + std::string(name) + "'");
  }
  return parse_schema(text::read_file(source));
}

SatohReport satoh_discrimination(const RackTable& t) {
  SatohReport report;
  auto axioms = check_axioms(t);
  if (!axioms.q2() || !axioms.q3()) throw NotARack("satoh discrimination needs a rack");
  report.d1_count = count_colorings(builtin_presentation("satoh_d1"), t);
  report.d2_count = count_colorings(builtin_presentation("satoh_d2"), t);
  if (axioms.q1()) {
    report.detail = "rack is a quandle; quandle colorings cannot separate the diagrams";
    return report;
  }
  if (connected_components(t).size() != 1) {
    report.detail = "rack is not connected";
    return report;
  }
  if (report.d1_count != report.d2_count) {
    report.status = SatohReport::Status::not_regular_equivalent;
    report.detail = "coloring counts differ, so no sequence of branch-free moves relates the diagrams";
  } else {
    report.status = SatohReport::Status::counts_agree;
    report.detail = "coloring counts agree; no conclusion";
  }
  return report;
}

}  // namespace rackcolor
