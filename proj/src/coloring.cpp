#include "rackcolor/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "rackcolor/errors.hpp"

namespace rackcolor {

namespace {

struct Constraint {
  enum class Kind { double_relation, curve_edge, branch } kind;
  std::size_t a = 0, b = 0, c = 0;  // (i, j, k) | (from, to, -) | (s, -, -)
};

}  // namespace

struct ColoringProblem::Impl {
  int n = 0;
  std::size_t sheets = 0;
  std::vector<Element> table;          // a*b at a*n+b
  std::vector<Element> right_inverse;  // x with x*b = v at b*n+v
  std::vector<Element> iota, iota_inverse;
  std::vector<Constraint> constraints;
  std::vector<std::vector<std::size_t>> watches;

  Element op(Element a, Element b) const { return table[static_cast<std::size_t>(a * n + b)]; }
  Element solve_left(Element b, Element v) const { return right_inverse[static_cast<std::size_t>(b * n + v)]; }

  // Depth-first search with unit propagation. One instance per worker.
  class Search {
   public:
    explicit Search(const Impl& impl) : p_(impl), values_(impl.sheets, -1) {}

    template <typename Visit>
    void run_from_root_value(Element v, Visit&& visit) {
      std::size_t mark = trail_.size();
      if (assign_and_propagate(0, v)) descend(1, visit);
      undo(mark);
    }

   private:
    template <typename Visit>
    void descend(std::size_t next, Visit& visit) {
      while (next < values_.size() && values_[next] >= 0) ++next;
      if (next == values_.size()) {
        visit(values_);
        return;
      }
      for (Element v = 0; v < p_.n; ++v) {
        std::size_t mark = trail_.size();
        if (assign_and_propagate(next, v)) descend(next + 1, visit);
        undo(mark);
      }
    }

    void set(std::size_t sheet, Element v) {
      values_[sheet] = v;
      trail_.push_back(sheet);
    }

    // Returns false on conflict.
    bool bind(std::size_t sheet, Element v) {
      if (values_[sheet] >= 0) return values_[sheet] == v;
      set(sheet, v);
      return true;
    }

    bool assign_and_propagate(std::size_t sheet, Element v) {
      std::size_t head = trail_.size();
      set(sheet, v);
      while (head < trail_.size()) {
        std::size_t s = trail_[head++];
        for (std::size_t id : p_.watches[s])
          if (!apply(p_.constraints[id])) return false;
      }
      return true;
    }

    bool apply(const Constraint& k) {
      switch (k.kind) {
        case Constraint::Kind::double_relation: {
          Element i = values_[k.a], j = values_[k.b], out = values_[k.c];
          if (i >= 0 && j >= 0) return bind(k.c, p_.op(i, j));
          if (j >= 0 && out >= 0) return bind(k.a, p_.solve_left(j, out));
          return true;
        }
        case Constraint::Kind::curve_edge: {
          Element from = values_[k.a], to = values_[k.b];
          if (from >= 0) return bind(k.b, p_.iota[static_cast<std::size_t>(from)]);
          if (to >= 0) return bind(k.a, p_.iota_inverse[static_cast<std::size_t>(to)]);
          return true;
        }
        case Constraint::Kind::branch: {
          Element s = values_[k.a];
          return s < 0 || p_.op(s, s) == s;
        }
      }
      return true;
    }

    void undo(std::size_t mark) {
      while (trail_.size() > mark) {
        values_[trail_.back()] = -1;
        trail_.pop_back();
      }
    }

    const Impl& p_;
    std::vector<Element> values_;
    std::vector<std::size_t> trail_;
  };

  // Splits the first sheet's values round-robin across workers; results are
  // gathered per value so the merged order does not depend on the split.
  template <typename PerValue, typename Visit>
  std::vector<PerValue> fan_out(unsigned workers, Visit visit) const {
    std::vector<PerValue> buckets(static_cast<std::size_t>(n));
    auto work = [&](unsigned first, unsigned stride) {
      Search search(*this);
      for (Element v = static_cast<Element>(first); v < n; v += static_cast<Element>(stride)) {
        auto& bucket = buckets[static_cast<std::size_t>(v)];
        search.run_from_root_value(v, [&](const std::vector<Element>& values) { visit(bucket, values); });
      }
    };
    unsigned count = std::clamp(workers, 1u, static_cast<unsigned>(n));
    if (count == 1) {
      work(0, 1);
      return buckets;
    }
    std::vector<std::jthread> threads;
    threads.reserve(count);
    for (unsigned w = 0; w < count; ++w) threads.emplace_back(work, w, count);
    threads.clear();
    return buckets;
  }
};

ColoringProblem::ColoringProblem(const Presentation& p, const RackTable& t) : impl_(std::make_unique<Impl>()) {
  require_valid(p);
  if (!is_rack(t)) throw NotARack("colorings need a rack (Q2 and Q3)");
  auto& s = *impl_;
  s.n = t.order();
  s.sheets = p.sheets.size();
  s.table.assign(t.cells().begin(), t.cells().end());
  s.right_inverse.assign(s.table.size(), -1);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) s.right_inverse[static_cast<std::size_t>(b * s.n + t.op(a, b))] = a;
  if (!p.curves.empty()) {
    KinkMap k = kink_map(t);
    s.iota.assign(k.forward().begin(), k.forward().end());
    s.iota_inverse.assign(k.inverse().begin(), k.inverse().end());
  }

  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < p.sheets.size(); ++i) index.emplace(p.sheets[i], i);
  for (const auto& d : p.doubles)
    s.constraints.push_back({Constraint::Kind::double_relation, index.at(d.under_from), index.at(d.over),
                             index.at(d.under_to)});
  for (const auto& c : p.curves)
    s.constraints.push_back({Constraint::Kind::curve_edge, index.at(c.from), index.at(c.to), 0});
  for (const auto& b : p.branches) s.constraints.push_back({Constraint::Kind::branch, index.at(b), 0, 0});

  s.watches.resize(s.sheets);
  for (std::size_t id = 0; id < s.constraints.size(); ++id) {
    const auto& k = s.constraints[id];
    std::vector<std::size_t> touched{k.a};
    if (k.kind != Constraint::Kind::branch) touched.push_back(k.b);
    if (k.kind == Constraint::Kind::double_relation) touched.push_back(k.c);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t sheet : touched) s.watches[sheet].push_back(id);
  }
}

ColoringProblem::~ColoringProblem() = default;
ColoringProblem::ColoringProblem(ColoringProblem&&) noexcept = default;
ColoringProblem& ColoringProblem::operator=(ColoringProblem&&) noexcept = default;

std::vector<Coloring> ColoringProblem::enumerate(const SolverOptions& options) const {
  if (impl_->sheets == 0) return {Coloring{}};
  auto buckets = impl_->fan_out<std::vector<Coloring>>(
      options.workers, [](std::vector<Coloring>& out, const std::vector<Element>& values) {
        out.push_back(Coloring{values});
      });
  std::vector<Coloring> all;
  for (auto& bucket : buckets) std::move(bucket.begin(), bucket.end(), std::back_inserter(all));
  return all;
}

std::uint64_t ColoringProblem::count(const SolverOptions& options) const {
  if (impl_->sheets == 0) return 1;
  auto buckets = impl_->fan_out<std::uint64_t>(
      options.workers, [](std::uint64_t& total, const std::vector<Element>&) { ++total; });
  std::uint64_t total = 0;
  for (auto b : buckets) total += b;
  return total;
}

std::vector<Coloring> enumerate_colorings(const Presentation& p, const RackTable& t, const SolverOptions& options) {
  return ColoringProblem(p, t).enumerate(options);
}

std::uint64_t count_colorings(const Presentation& p, const RackTable& t, const SolverOptions& options) {
  return ColoringProblem(p, t).count(options);
}

std::vector<ColoringViolation> check_coloring(const Presentation& p, const RackTable& t, const Coloring& c) {
  require_valid(p);
  std::vector<ColoringViolation> out;
  using Kind = ColoringViolation::Kind;
  if (c.values.size() != p.sheets.size()) {
    out.push_back({Kind::wrong_size, 0,
                   "coloring has " + std::to_string(c.values.size()) + " values for " +
                       std::to_string(p.sheets.size()) + " sheets"});
    return out;
  }
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] < 0 || c.values[i] >= t.order())
      out.push_back({Kind::out_of_range, i, "sheet " + p.sheets[i] + " has no valid element"});
  }
  if (!out.empty()) return out;

  std::unordered_map<std::string_view, Element> color;
  for (std::size_t i = 0; i < p.sheets.size(); ++i) color.emplace(p.sheets[i], c.values[i]);
  auto v = [&](const SheetId& s) { return color.at(s); };

  for (std::size_t i = 0; i < p.doubles.size(); ++i) {
    const auto& d = p.doubles[i];
    if (t.op(v(d.under_from), v(d.over)) != v(d.under_to))
      out.push_back({Kind::double_relation, i,
                     "double (" + d.under_from + "," + d.over + "," + d.under_to + "): " +
                         std::to_string(v(d.under_from)) + "*" + std::to_string(v(d.over)) + " != " +
                         std::to_string(v(d.under_to))});
  }
  if (!p.curves.empty()) {
    KinkMap iota = kink_map(t);
    for (std::size_t i = 0; i < p.curves.size(); ++i) {
      const auto& e = p.curves[i];
      if (iota(v(e.from)) != v(e.to))
        out.push_back({Kind::curve_edge, i,
                       "curve (" + e.from + "," + e.to + "): iota(" + std::to_string(v(e.from)) + ") != " +
                           std::to_string(v(e.to))});
    }
  }
  for (std::size_t i = 0; i < p.branches.size(); ++i) {
    Element s = v(p.branches[i]);
    if (t.op(s, s) != s)
      out.push_back({Kind::branch, i, "branch " + p.branches[i] + ": " + std::to_string(s) + " is not idempotent"});
  }
  return out;
}

std::string format_coloring(const Presentation& p, const Coloring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.sheets.size() && i < c.values.size(); ++i)
    out << (i ? " " : "") << p.sheets[i] << '=' << c.values[i];
  return out.str();
}

}  // namespace rackcolor
