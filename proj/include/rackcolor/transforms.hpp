#pragma once

/**
 * @file transforms.hpp
 * @brief Explicit bijections between coloring sets.
 *
 * psi:  Col_{Q_R}(D)  -> Col_R(D, L)   where L is the push-off of the double
 *                                      curves (pushoff below);
 * phi:  Col_R(D, L1)  -> Col_R(D, L2)  for an overlay carrying L1 as layer-1
 *                                      and L2 as layer-2 curve edges, driven by
 *                                      an integer numbering of the overlay.
 * With L1 the push-off and L2 empty, phi after psi maps Col_{Q_R}(D) onto
 * Col_R(D); theorem2_report checks that composite pointwise.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rackcolor/algebra.hpp"
#include "rackcolor/coloring.hpp"
#include "rackcolor/parallel.hpp"
#include "rackcolor/presentation.hpp"

namespace rackcolor {

struct StripEntry {
  std::size_t relation = 0;  // index into the source diagram's doubles
  SheetId strip;
  SheetId parent;  // the relation's under_from sheet
  friend bool operator==(const StripEntry&, const StripEntry&) = default;
};
using StripMap = std::vector<StripEntry>;

struct PushOff {
  Presentation overlay;
  StripMap strips;
};

/// For each double relation t = (i, j, k) adds a strip sheet y_t, a layer-1
/// curve edge i -> y_t, and rewrites t to (y_t, j, k). Strip ids are
/// `<i>__strip<t>`, with trailing underscores added on collision.
/// Throws InvalidInput if d has curve edges or branch markers.
PushOff pushoff(const Presentation& d);

/// values[i] belongs to overlay.sheets[i].
struct Numbering {
  std::vector<long long> values;
  friend bool operator==(const Numbering&, const Numbering&) = default;
};

/// One constraint traversed while walking the constraint graph. `delta` is
/// the change of numbering along the step; `reversed` is set when the
/// constraint was walked against its direction.
struct WalkStep {
  enum class Kind { double_relation, curve_edge } kind;
  std::size_t index = 0;
  bool reversed = false;
  SheetId from;
  SheetId to;
  long long delta = 0;
};

/// A closed walk whose deltas sum to a nonzero total.
struct NumberingObstruction {
  std::vector<WalkStep> walk;
  long long total = 0;
};

using NumberingResult = std::variant<Numbering, NumberingObstruction>;

/// Solves n(k) = n(i) for every double (i, j, k), n(j) = n(i) + 1 for every
/// layer-2 edge i -> j and n(j) = n(i) - 1 for every layer-1 edge. The first
/// declared sheet of each constraint-graph component gets 0.
NumberingResult alexander_numbering(const Presentation& overlay);

/// Violated numbering constraints, as readable strings.
std::vector<std::string> numbering_violations(const Presentation& overlay, const Numbering& numbering);

/// True when the walk is closed, every step matches its constraint, and the
/// recorded total is the nonzero sum of the deltas.
bool verify_obstruction(const Presentation& overlay, const NumberingObstruction& obstruction);

/// c1 colors contract(overlay, 2).result (the L1 side); the result colors
/// contract(overlay, 1).result (the L2 side). Each target sheet x gets
/// iota^{n(y)}(c1(pi1(y))) for the first overlay sheet y inside x.
/// Throws InvalidInput for a bad numbering or coloring.
Coloring phi(const Presentation& overlay, const Numbering& numbering, const RackTable& t, const Coloring& c1);

/// Same construction in the other direction with -n.
Coloring phi_inverse(const Presentation& overlay, const Numbering& numbering, const RackTable& t,
                     const Coloring& c2);

/// For every target sheet of phi, the value produced by each overlay sheet
/// inside it, in overlay order. phi is well defined iff every list is constant.
std::vector<std::vector<Element>> phi_representative_values(const Presentation& overlay, const Numbering& numbering,
                                                            const RackTable& t, const Coloring& c1);

/// Q_R-coloring of d -> R-coloring of pushoff(d).overlay: original sheets keep
/// their value, each strip gets iota of its parent's value.
Coloring psi(const Presentation& d, const PushOff& push, const RackTable& t, const Coloring& quandle_coloring);

/// Restriction of an overlay coloring to the sheets of d.
Coloring psi_inverse(const Presentation& d, const PushOff& push, const RackTable& t, const Coloring& overlay_coloring);

struct Theorem2Report {
  enum class Verdict { bijection_verified, no_bijection_claimed, bijection_failed };

  bool numbering_consistent = false;
  std::optional<NumberingObstruction> obstruction;
  bool identity_kink = false;  // Q_R = R; the bijection needs no numbering
  std::uint64_t quandle_count = 0;  // |Col_{Q_R}(d)|
  std::uint64_t rack_count = 0;     // |Col_R(d)|
  Verdict verdict = Verdict::no_bijection_claimed;
  std::string detail;
};

/// d must be plain and branch-free; t must be a rack.
Theorem2Report theorem2_report(const Presentation& d, const RackTable& t, const SolverOptions& options = {});

}  // namespace rackcolor
