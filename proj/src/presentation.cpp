#include "rackcolor/presentation.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rackcolor/errors.hpp"
#include "rackcolor/text.hpp"

namespace rackcolor {

namespace {

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

std::optional<std::size_t> Presentation::index_of(std::string_view id) const {
  auto it = std::find(sheets.begin(), sheets.end(), id);
  if (it == sheets.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sheets.begin());
}

std::vector<Violation> validate(const Presentation& p) {
  std::vector<Violation> out;
  std::unordered_set<std::string_view> declared;
  for (const auto& id : p.sheets) {
    if (!valid_id(id)) out.push_back({Violation::Kind::bad_id, "sheet id '" + id + "' is not [A-Za-z0-9_]+"});
    if (!declared.insert(id).second)
      out.push_back({Violation::Kind::duplicate_sheet, "sheet '" + id + "' declared twice"});
  }
  auto need = [&](const SheetId& id, const std::string& where) {
    if (!declared.contains(id))
      out.push_back({Violation::Kind::undeclared_sheet, where + " names undeclared sheet '" + id + "'"});
  };
  for (std::size_t i = 0; i < p.doubles.size(); ++i) {
    const auto& d = p.doubles[i];
    std::string where = "double " + std::to_string(i);
    need(d.under_from, where);
    need(d.over, where);
    need(d.under_to, where);
  }
  for (std::size_t i = 0; i < p.curves.size(); ++i) {
    const auto& c = p.curves[i];
    std::string where = "curve " + std::to_string(i);
    need(c.from, where);
    need(c.to, where);
    if (c.layer != 1 && c.layer != 2)
      out.push_back({Violation::Kind::bad_layer,
                     where + ": layer out of range (" + std::to_string(c.layer) + ", expected 1 or 2)"});
  }
  for (const auto& b : p.branches) need(b, "branch");
  return out;
}

void require_valid(const Presentation& p) {
  auto violations = validate(p);
  if (!violations.empty()) throw InvalidInput(violations.front().message);
}

Presentation parse_presentation(std::string_view source) {
  Presentation p = parse_presentation_raw(source);
  require_valid(p);
  return p;
}

Presentation parse_presentation_raw(std::string_view source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') {
    Presentation p;
    try {
      p = presentation_from_json(nlohmann::json::parse(source));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON presentation: ") + e.what(), 0);
    }
    return p;
  }

  Presentation p;
  for (const auto& line : text::tokenize_lines(source)) {
    const auto& tok = line.tokens;
    const std::string& directive = tok[0];
    auto arity = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ParseError("'" + directive + "' takes " + std::to_string(n) + " arguments", line.number);
    };
    auto id = [&](std::size_t i) -> const std::string& {
      if (!valid_id(tok[i])) throw ParseError("bad sheet id '" + tok[i] + "'", line.number);
      return tok[i];
    };
    if (directive == "sheets") {
      for (std::size_t i = 1; i < tok.size(); ++i) p.sheets.push_back(id(i));
    } else if (directive == "double") {
      arity(3);
      p.doubles.push_back({id(1), id(2), id(3)});
    } else if (directive == "curve") {
      arity(3);
      long long layer = 0;
      if (!text::parse_int(tok[3], layer) || layer < -1000 || layer > 1000)
        throw ParseError("bad layer '" + tok[3] + "'", line.number);
      p.curves.push_back({id(1), id(2), static_cast<int>(layer)});
    } else if (directive == "branch") {
      arity(1);
      p.branches.push_back(id(1));
    } else if (directive == "genus") {
      arity(1);
      long long g = 0;
      if (!text::parse_int(tok[1], g) || g < 0 || g > 1'000'000)
        throw ParseError("bad genus '" + tok[1] + "'", line.number);
      p.genus = static_cast<int>(g);
    } else {
      throw ParseError("unknown directive '" + directive + "'", line.number);
    }
  }
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "sheets";
  for (const auto& s : p.sheets) out << ' ' << s;
  out << '\n';
  if (p.genus) out << "genus " << *p.genus << '\n';
  for (const auto& d : p.doubles) out << "double " << d.under_from << ' ' << d.over << ' ' << d.under_to << '\n';
  for (const auto& c : p.curves) out << "curve " << c.from << ' ' << c.to << ' ' << c.layer << '\n';
  for (const auto& b : p.branches) out << "branch " << b << '\n';
  return out.str();
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["sheets"] = p.sheets;
  j["doubles"] = nlohmann::json::array();
  for (const auto& d : p.doubles) j["doubles"].push_back({d.under_from, d.over, d.under_to});
  j["curves"] = nlohmann::json::array();
  for (const auto& c : p.curves) j["curves"].push_back({c.from, c.to, c.layer});
  j["branches"] = p.branches;
  if (p.genus) j["genus"] = *p.genus;
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  p.sheets = j.at("sheets").get<std::vector<std::string>>();
  for (const auto& d : j.value("doubles", nlohmann::json::array()))
    p.doubles.push_back({d.at(0).get<std::string>(), d.at(1).get<std::string>(), d.at(2).get<std::string>()});
  for (const auto& c : j.value("curves", nlohmann::json::array()))
    p.curves.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>(), c.at(2).get<int>()});
  p.branches = j.value("branches", std::vector<std::string>{});
  if (j.contains("genus")) p.genus = j.at("genus").get<int>();
  return p;
}

Contraction contract(const Presentation& p, int layer) {
  require_valid(p);
  const std::size_t n = p.sheets.size();
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(p.sheets[i], i);

  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& c : p.curves) {
    if (c.layer != layer) continue;
    std::size_t a = find(index.at(c.from)), b = find(index.at(c.to));
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }

  Contraction out;
  out.result.genus = p.genus;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rep = p.sheets[find(i)];
    out.parent.emplace(p.sheets[i], rep);
    if (find(i) == i) out.result.sheets.push_back(p.sheets[i]);
  }
  const auto& to = out.parent;
  for (const auto& d : p.doubles)
    out.result.doubles.push_back({to.at(d.under_from), to.at(d.over), to.at(d.under_to)});
  for (const auto& c : p.curves)
    if (c.layer != layer) out.result.curves.push_back({to.at(c.from), to.at(c.to), c.layer});
  for (const auto& b : p.branches) out.result.branches.push_back(to.at(b));
  return out;
}

namespace {

constexpr std::array<std::string_view, 3> kBuiltinNames = {"satoh_d1", "satoh_d2", "sphere_circle"};

}  // namespace

std::span<const std::string_view> builtin_presentation_names() { return kBuiltinNames; }

Presentation builtin_presentation(std::string_view name) {
  Presentation p;
  if (name == "satoh_d1") {
    // One free sheet: every element of the rack gives a coloring.
    p.sheets = {"s"};
    p.genus = 1;
  } else if (name == "satoh_d2") {
    // The sheet runs over and under itself along the double curve.
    p.sheets = {"s"};
    p.doubles = {{"s", "s", "s"}};
    p.genus = 1;
  } else if (name == "sphere_circle") {
    // Sheet o passes over a sheet split into p (inside) and q (outside).
    p.sheets = {"p", "q", "o"};
    p.doubles = {{"p", "o", "q"}};
    p.genus = 0;
  } else {
    throw InvalidInput("unknown corpus presentation '" + std::string(name) + "'");
  }
  return p;
}

Presentation rename(const Presentation& p, const std::map<SheetId, SheetId>& mapping) {
  require_valid(p);
  std::set<SheetId> images;
  for (const auto& s : p.sheets) {
    auto it = mapping.find(s);
    if (it == mapping.end()) throw InvalidInput("rename map is missing sheet '" + s + "'");
    if (!valid_id(it->second)) throw InvalidInput("rename target '" + it->second + "' is not a valid id");
    if (!images.insert(it->second).second)
      throw InvalidInput("rename map is not injective at '" + it->second + "'");
  }
  if (mapping.size() != p.sheets.size()) throw InvalidInput("rename map names sheets that do not exist");

  auto m = [&](const SheetId& s) { return mapping.at(s); };
  Presentation out;
  out.genus = p.genus;
  for (const auto& s : p.sheets) out.sheets.push_back(m(s));
  for (const auto& d : p.doubles) out.doubles.push_back({m(d.under_from), m(d.over), m(d.under_to)});
  for (const auto& c : p.curves) out.curves.push_back({m(c.from), m(c.to), c.layer});
  for (const auto& b : p.branches) out.branches.push_back(m(b));
  return out;
}

Presentation load_presentation_source(const std::string& source) {
  constexpr std::string_view prefix = "corpus:";
  if (std::string_view(source).starts_with(prefix))
    return builtin_presentation(std::string_view(source).substr(prefix.size()));
  return parse_presentation(text::read_file(source));
}

}  // namespace rackcolor
