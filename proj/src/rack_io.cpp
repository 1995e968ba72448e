#include "rackcolor/rack_io.hpp"

#include <sstream>

#include "rackcolor/errors.hpp"
#include "rackcolor/text.hpp"

namespace rackcolor {

namespace {

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace

RackTable parse_rack(std::string_view source) {
  if (trim_left(source).starts_with('{')) {
    try {
      return rack_from_json(nlohmann::json::parse(source));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON rack: ") + e.what(), 0);
    }
  }

  auto lines = text::tokenize_lines(source);
  if (lines.empty()) throw ParseError("empty rack file", 0);
  const auto& header = lines.front();
  long long order = 0;
  if (header.tokens.size() != 2 || header.tokens[0] != "order" || !text::parse_int(header.tokens[1], order))
    throw ParseError("expected 'order <n>'", header.number);
  if (order < 1 || order > 4096) throw ParseError("order out of range", header.number);
  if (lines.size() != static_cast<std::size_t>(order) + 1)
    throw ParseError("expected " + std::to_string(order) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);

  std::vector<std::vector<Element>> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    if (line.tokens.size() != static_cast<std::size_t>(order))
      throw ParseError("row needs " + std::to_string(order) + " entries", line.number);
    std::vector<Element> row;
    for (const auto& token : line.tokens) {
      long long v = 0;
      if (!text::parse_int(token, v) || v < -1'000'000 || v > 1'000'000)
        throw ParseError("bad entry '" + token + "'", line.number);
      row.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(row));
  }
  return RackTable(static_cast<int>(order), rows);
}

std::string serialize_rack(const RackTable& t) {
  std::ostringstream out;
  if (!t.label().empty()) out << "# " << t.label() << "\n";
  out << "order " << t.order() << "\n";
  for (int a = 0; a < t.order(); ++a) {
    auto row = t.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
    out << "\n";
  }
  return out.str();
}

nlohmann::json rack_to_json(const RackTable& t) {
  nlohmann::json j;
  j["order"] = t.order();
  j["table"] = t.rows();
  if (!t.label().empty()) j["label"] = t.label();
  return j;
}

RackTable rack_from_json(const nlohmann::json& j) {
  auto order = j.at("order").get<int>();
  auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
  return RackTable(order, rows, j.value("label", std::string{}));
}

RackTable load_rack_source(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (std::string_view(source).starts_with(prefix)) {
    std::string_view rest = std::string_view(source).substr(prefix.size());
    auto colon = rest.find(':');
    long long n = 0;
    if (colon == std::string_view::npos || !text::parse_int(rest.substr(colon + 1), n) || n < 1 ||
        n > 1024)
      throw InvalidInput("expected builtin:<family>:<n> with 1 <= n <= 1024, got '" + source + "'");
    return builtin(rest.substr(0, colon), static_cast<int>(n));
  }
  RackTable t = parse_rack(text::read_file(source));
  if (t.label().empty()) t.set_label(source);
  return t;
}

}  // namespace rackcolor
