#include "rackcolor/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rackcolor/errors.hpp"

namespace rackcolor {

namespace {

std::string cell_name(int row, int column) {
  return "(" + std::to_string(row) + "," + std::to_string(column) + ")";
}

// Union-find over element indices; used for rack orbits.
class Partition {
 public:
  explicit Partition(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

RackTable::RackTable(int order, const std::vector<std::vector<Element>>& rows, std::string label)
    : order_(order), label_(std::move(label)) {
  if (order < 1) throw MalformedTable("table order must be at least 1", -1, -1);
  if (rows.size() != static_cast<std::size_t>(order))
    throw MalformedTable("table has " + std::to_string(rows.size()) + " rows, expected " +
                             std::to_string(order),
                         static_cast<int>(rows.size()), -1);
  cells_.reserve(static_cast<std::size_t>(order * order));
  for (int a = 0; a < order; ++a) {
    if (rows[a].size() != static_cast<std::size_t>(order))
      throw MalformedTable("row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                               " entries, expected " + std::to_string(order),
                           a, -1);
    cells_.insert(cells_.end(), rows[a].begin(), rows[a].end());
  }
  check_cells();
}

RackTable RackTable::from_cells(int order, std::vector<Element> cells, std::string label) {
  if (order < 1) throw MalformedTable("table order must be at least 1", -1, -1);
  if (cells.size() != static_cast<std::size_t>(order * order))
    throw MalformedTable("table needs " + std::to_string(order * order) + " cells", -1, -1);
  RackTable t;
  t.order_ = order;
  t.cells_ = std::move(cells);
  t.label_ = std::move(label);
  t.check_cells();
  return t;
}

void RackTable::check_cells() {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      Element v = op(a, b);
      if (v < 0 || v >= order_)
        throw MalformedTable("entry " + std::to_string(v) + " at cell " + cell_name(a, b) +
                                 " is outside 0.." + std::to_string(order_ - 1),
                             a, b);
    }
  }
}

std::vector<std::vector<Element>> RackTable::rows() const {
  std::vector<std::vector<Element>> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) out.emplace_back(row(a).begin(), row(a).end());
  return out;
}

AxiomReport check_axioms(const RackTable& t) {
  const int n = t.order();
  AxiomReport report;
  for (int a = 0; a < n && !report.idempotence_witness; ++a)
    if (t.op(a, a) != a) report.idempotence_witness = a;

  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int b = 0; b < n && !report.translation_witness; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      auto& hit = seen[static_cast<std::size_t>(t.op(a, b))];
      if (hit) {
        report.translation_witness = b;
        break;
      }
      hit = 1;
    }
  }

  for (int a = 0; a < n && !report.distributivity_witness; ++a)
    for (int b = 0; b < n && !report.distributivity_witness; ++b)
      for (int c = 0; c < n; ++c)
        if (t.op(t.op(a, b), c) != t.op(t.op(a, c), t.op(b, c))) {
          report.distributivity_witness = std::array{a, b, c};
          break;
        }
  return report;
}

bool is_rack(const RackTable& t) {
  auto r = check_axioms(t);
  return r.q2() && r.q3();
}

bool is_quandle(const RackTable& t) {
  auto r = check_axioms(t);
  return r.q1() && r.q2() && r.q3();
}

KinkMap::KinkMap(std::vector<Element> forward)
    : forward_(std::move(forward)), inverse_(forward_.size(), -1) {
  const auto n = static_cast<Element>(forward_.size());
  for (Element a = 0; a < n; ++a) {
    Element image = forward_[static_cast<std::size_t>(a)];
    if (image < 0 || image >= n || inverse_[static_cast<std::size_t>(image)] != -1)
      throw InvalidInput("kink map is not a permutation");
    inverse_[static_cast<std::size_t>(image)] = a;
  }
}

Element KinkMap::power(Element a, long long m) const {
  // The cycle through a has some finite length; reduce m modulo it.
  long long length = 1;
  for (Element x = (*this)(a); x != a; x = (*this)(x)) ++length;
  long long steps = ((m % length) + length) % length;
  for (long long i = 0; i < steps; ++i) a = (*this)(a);
  return a;
}

bool KinkMap::is_identity() const noexcept {
  for (std::size_t a = 0; a < forward_.size(); ++a)
    if (forward_[a] != static_cast<Element>(a)) return false;
  return true;
}

namespace {

// Column-wise solution of x*a = a. nullopt when some column has no solution
// or several.
std::optional<std::vector<Element>> solve_kink_equation(const RackTable& t) {
  const int n = t.order();
  std::vector<Element> forward(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (t.op(x, a) != a) continue;
      if (forward[a] != -1) return std::nullopt;
      forward[a] = x;
    }
    if (forward[a] == -1) return std::nullopt;
  }
  return forward;
}

}  // namespace

KinkMap kink_map(const RackTable& t) {
  if (!check_axioms(t).q2()) throw NotARack("kink map needs invertible right translations (Q2)");
  auto forward = solve_kink_equation(t);
  if (!forward) throw InternalError("Q2 holds but x*a = a has no unique solution");
  try {
    return KinkMap(std::move(*forward));
  } catch (const InvalidInput&) {
    throw NotARack("kink map is not a bijection; the table fails Q3");
  }
}

KinkReport verify_kink_properties(const RackTable& t) {
  if (!is_rack(t)) throw NotARack("kink-map laws are only defined for racks");
  const int n = t.order();
  auto solved = solve_kink_equation(t);
  if (!solved) throw InternalError("Q2 holds but x*a = a has no unique solution");
  const auto& iota = *solved;

  KinkReport report;
  for (int a = 0; a < n && !report.defining_witness; ++a)
    if (t.op(iota[a], a) != a) report.defining_witness = a;

  std::vector<int> preimages(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) ++preimages[static_cast<std::size_t>(iota[a])];
  for (int a = 0; a < n && !report.bijection_witness; ++a)
    if (preimages[a] > 1) report.bijection_witness = a;

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!report.k2_witness && t.op(iota[a], b) != iota[t.op(a, b)])
        report.k2_witness = std::array{a, b};
      if (!report.k3_witness && t.op(a, iota[b]) != t.op(a, b))
        report.k3_witness = std::array{a, b};
    }
  }
  return report;
}

RackTable associated_quandle(const RackTable& t) {
  if (!is_rack(t)) throw NotARack("associated quandle needs a rack");
  KinkMap iota = kink_map(t);
  const int n = t.order();
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cells[static_cast<std::size_t>(a * n + b)] = t.op(iota(a), b);
  std::string label = t.label().empty() ? std::string{} : "assoc(" + t.label() + ")";
  RackTable q = RackTable::from_cells(n, std::move(cells), std::move(label));
  if (!is_quandle(q)) throw InternalError("associated quandle fails the quandle axioms");
  return q;
}

RackTable restrict_to(const RackTable& t, std::span<const Element> subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> position(static_cast<std::size_t>(t.order()), -1);
  for (int i = 0; i < k; ++i) position[static_cast<std::size_t>(subset[i])] = i;
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(k * k));
  for (Element a : subset) {
    for (Element b : subset) {
      int p = position[static_cast<std::size_t>(t.op(a, b))];
      if (p < 0) throw InvalidInput("subset is not closed under the operation");
      cells.push_back(p);
    }
  }
  return RackTable::from_cells(k, std::move(cells));
}

std::vector<std::vector<Element>> connected_components(const RackTable& t) {
  if (!is_rack(t)) throw NotARack("connected components are defined for racks");
  const int n = t.order();
  Partition orbits(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) orbits.join(a, t.op(a, b));

  std::vector<std::vector<Element>> components;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    int root = orbits.find(a);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(slot[root])].push_back(a);
  }
  for (const auto& component : components) {
    if (!is_rack(restrict_to(t, component)))
      throw InternalError("restriction to a component is not a rack");
  }
  return components;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "cyclic") return Family::cyclic;
  if (name == "dihedral") return Family::dihedral;
  if (name == "trivial") return Family::trivial;
  return std::nullopt;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::trivial: return "trivial";
  }
  return "?";
}

RackTable builtin(Family family, int n) {
  if (n < 1 || n > 1024)
    throw InvalidInput("builtin rack order must be in 1..1024, got " + std::to_string(n));
  std::vector<Element> cells(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Element v = a;
      switch (family) {
        case Family::cyclic: v = (a + 1) % n; break;
        case Family::dihedral: v = ((2 * b - a) % n + n) % n; break;
        case Family::trivial: v = a; break;
      }
      cells[static_cast<std::size_t>(a * n + b)] = v;
    }
  }
  return RackTable::from_cells(n, std::move(cells),
                               std::string(family_name(family)) + ":" + std::to_string(n));
}

RackTable builtin(std::string_view family, int n) {
  auto parsed = parse_family(family);
  if (!parsed) throw InvalidInput("unknown rack family '" + std::string(family) + "'");
  return builtin(*parsed, n);
}

namespace {

// Backtracking over cells in row-major order. Columns must stay injective
// (Q2) and every instance of Q3 whose cells are all filled must hold.
class RackEnumerator {
 public:
  explicit RackEnumerator(int n)
      : n_(n), cells_(static_cast<std::size_t>(n * n), -1),
        column_used_(static_cast<std::size_t>(n * n), 0) {}

  std::vector<RackTable> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  Element at(int a, int b) const { return cells_[static_cast<std::size_t>(a * n_ + b)]; }

  // Every Q3 instance whose four cells are already filled.
  bool distributive_so_far() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        Element xy = at(x, y);
        for (int z = 0; z < n_; ++z) {
          Element xz = at(x, z), yz = at(y, z);
          if (xy < 0 || xz < 0 || yz < 0) continue;
          Element lhs = at(xy, z), rhs = at(xz, yz);
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
        }
      }
    return true;
  }

  void fill(int cell) {
    if (cell == n_ * n_) {
      found_.push_back(RackTable::from_cells(n_, cells_));
      return;
    }
    const int b = cell % n_;
    for (Element v = 0; v < n_; ++v) {
      auto& used = column_used_[static_cast<std::size_t>(b * n_ + v)];
      if (used) continue;
      used = 1;
      cells_[static_cast<std::size_t>(cell)] = v;
      if (distributive_so_far()) fill(cell + 1);
      cells_[static_cast<std::size_t>(cell)] = -1;
      used = 0;
    }
  }

  int n_;
  std::vector<Element> cells_;
  std::vector<char> column_used_;
  std::vector<RackTable> found_;
};

}  // namespace

std::vector<RackTable> enumerate_racks(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw InvalidInput("rack enumeration supports orders 1.." + std::to_string(kMaxEnumerationOrder));
  return RackEnumerator(n).run();
}

}  // namespace rackcolor
