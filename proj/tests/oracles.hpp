#pragma once

// Brute-force references used by the unit and acceptance tests. Nothing here
// calls into the solver, the enumerator or the kink-map code under test.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rackcolor/algebra.hpp"
#include "rackcolor/presentation.hpp"
#include "rackcolor/text.hpp"

namespace oracle {

using rackcolor::Element;
using rackcolor::Presentation;
using rackcolor::RackTable;

inline int at(const std::vector<Element>& cells, int n, int a, int b) {
  return cells[static_cast<std::size_t>(a * n + b)];
}

inline bool q1(const std::vector<Element>& cells, int n) {
  for (int a = 0; a < n; ++a)
    if (at(cells, n, a, a) != a) return false;
  return true;
}

inline bool q2(const std::vector<Element>& cells, int n) {
  for (int b = 0; b < n; ++b) {
    std::vector<bool> hit(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) hit[static_cast<std::size_t>(at(cells, n, a, b))] = true;
    if (std::count(hit.begin(), hit.end(), true) != n) return false;
  }
  return true;
}

inline bool q3(const std::vector<Element>& cells, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(cells, n, at(cells, n, a, b), c) != at(cells, n, at(cells, n, a, c), at(cells, n, b, c))) return false;
  return true;
}

inline std::vector<Element> cells_of(const RackTable& t) { return {t.cells().begin(), t.cells().end()}; }

struct ScannedRacks {
  std::set<std::vector<Element>> racks;
  std::size_t quandles = 0;
};

// Every n^(n*n) table, filtered by Q2 and Q3.
inline ScannedRacks scan_racks(int n) {
  ScannedRacks out;
  const std::size_t cells = static_cast<std::size_t>(n * n);
  std::vector<Element> table(cells, 0);
  while (true) {
    if (q2(table, n) && q3(table, n)) {
      out.racks.insert(table);
      out.quandles += q1(table, n);
    }
    std::size_t i = 0;
    while (i < cells && ++table[i] == n) table[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

// iota(a) is the x with x*a = a, found by scanning the column.
inline std::vector<Element> iota(const RackTable& t) {
  std::vector<Element> out(static_cast<std::size_t>(t.order()), -1);
  for (int a = 0; a < t.order(); ++a)
    for (int x = 0; x < t.order(); ++x)
      if (t.op(x, a) == a) out[static_cast<std::size_t>(a)] = x;
  return out;
}

inline bool satisfies(const Presentation& p, const RackTable& t, const std::vector<Element>& values) {
  std::map<std::string, Element> c;
  for (std::size_t i = 0; i < p.sheets.size(); ++i) c[p.sheets[i]] = values[i];
  for (const auto& d : p.doubles)
    if (t.op(c[d.under_from], c[d.over]) != c[d.under_to]) return false;
  if (!p.curves.empty()) {
    auto k = iota(t);
    for (const auto& e : p.curves)
      if (k[static_cast<std::size_t>(c[e.from])] != c[e.to]) return false;
  }
  for (const auto& b : p.branches)
    if (t.op(c[b], c[b]) != c[b]) return false;
  return true;
}

// Every n^|sheets| assignment, filtered; lexicographic order.
inline std::vector<std::vector<Element>> scan_colorings(const Presentation& p, const RackTable& t) {
  std::vector<std::vector<Element>> out;
  const std::size_t k = p.sheets.size();
  const int n = t.order();
  std::vector<Element> values(k, 0);
  while (true) {
    if (satisfies(p, t, values)) out.push_back(values);
    std::size_t i = k;
    while (i > 0 && ++values[i - 1] == n) values[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Plain, branch-free presentations with 1..5 sheets and 0..4 doubles.
inline Presentation random_plain(std::mt19937& rng) {
  Presentation p;
  const auto sheets = 1 + rng() % 5;
  for (unsigned i = 0; i < sheets; ++i) p.sheets.push_back("s" + std::to_string(i));
  const auto relations = rng() % 5;
  auto pick = [&] { return p.sheets[rng() % sheets]; };
  for (unsigned r = 0; r < relations; ++r) {
    auto i = pick(), j = pick(), k = pick();
    p.doubles.push_back({i, j, k});
  }
  return p;
}

// Test-data presentations in name order.
inline std::vector<std::pair<std::string, Presentation>> data_presentations() {
  std::vector<std::pair<std::string, Presentation>> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(RACKCOLOR_TEST_DATA))
    if (entry.path().extension() == ".pres") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto p = rackcolor::parse_presentation_raw(rackcolor::text::read_file(f.string()));
    if (rackcolor::validate(p).empty()) out.emplace_back(f.stem().string(), p);
  }
  return out;
}

inline std::string data_path(const std::string& name) { return std::string(RACKCOLOR_TEST_DATA) + "/" + name; }

}  // namespace oracle
