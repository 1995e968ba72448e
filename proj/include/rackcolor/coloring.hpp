#pragma once

/**
 * @file coloring.hpp
 * @brief Rack colorings of presentations: Col_R(D) and Col_R(D, L).
 *
 * A coloring assigns an element to every sheet so that each double relation
 * (i, j, k) has c(k) = c(i)*c(j), each curve edge (i, j) has c(j) = iota(c(i)),
 * and each branch sheet s has c(s)*c(s) = c(s).
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rackcolor/algebra.hpp"
#include "rackcolor/parallel.hpp"
#include "rackcolor/presentation.hpp"

namespace rackcolor {

/// values[i] is the color of presentation.sheets[i].
struct Coloring {
  std::vector<Element> values;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

/// Compiled (presentation, rack) pair. Requires a valid presentation and a
/// rack; throws InvalidInput / NotARack otherwise.
class ColoringProblem {
 public:
  ColoringProblem(const Presentation& p, const RackTable& t);
  ~ColoringProblem();
  ColoringProblem(ColoringProblem&&) noexcept;
  ColoringProblem& operator=(ColoringProblem&&) noexcept;

  /// All colorings in lexicographic order of values.
  std::vector<Coloring> enumerate(const SolverOptions& options = {}) const;
  std::uint64_t count(const SolverOptions& options = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Coloring> enumerate_colorings(const Presentation& p, const RackTable& t,
                                          const SolverOptions& options = {});
std::uint64_t count_colorings(const Presentation& p, const RackTable& t,
                              const SolverOptions& options = {});

struct ColoringViolation {
  enum class Kind { wrong_size, out_of_range, double_relation, curve_edge, branch };
  Kind kind;
  std::size_t index = 0;  // relation, edge or branch index; sheet index for out_of_range
  std::string message;
};

/// Every violated constraint. Curve edges need the kink map, so t must satisfy
/// Q2 when the presentation has curves.
std::vector<ColoringViolation> check_coloring(const Presentation& p, const RackTable& t, const Coloring& c);

/// `sheet=element` pairs in canonical sheet order, space separated.
std::string format_coloring(const Presentation& p, const Coloring& c);

}  // namespace rackcolor
