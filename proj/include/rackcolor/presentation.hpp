#pragma once

/**
 * @file presentation.hpp
 * @brief Surface-knot diagrams as sheets plus relation edges.
 *
 * A presentation lists sheets and three kinds of constraint:
 *   double (i, j, k)   c(k) = c(i) * c(j): under-sheets i, k and over-sheet j
 *                      along one double-point-curve arc, the over-sheet
 *                      normal pointing from i to k;
 *   curve (i, j, l)    c(j) = iota(c(i)) across one immersed-curve arc of
 *                      layer l (1 or 2), the curve normal pointing from i to j;
 *   branch s           c(s) * c(s) = c(s).
 * A plain diagram has no curves. Geometric realizability is not checked.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rackcolor {

using SheetId = std::string;

struct DoubleRelation {
  SheetId under_from;
  SheetId over;
  SheetId under_to;
  friend bool operator==(const DoubleRelation&, const DoubleRelation&) = default;
};

struct CurveEdge {
  SheetId from;
  SheetId to;
  int layer = 1;
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct Presentation {
  std::vector<SheetId> sheets;
  std::vector<DoubleRelation> doubles;
  std::vector<CurveEdge> curves;
  std::vector<SheetId> branches;
  std::optional<int> genus;

  bool is_plain() const noexcept { return curves.empty(); }
  /// Position of a sheet in canonical order, or nullopt.
  std::optional<std::size_t> index_of(std::string_view id) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct Violation {
  enum class Kind { undeclared_sheet, duplicate_sheet, bad_layer, bad_id };
  Kind kind;
  std::string message;
};

std::vector<Violation> validate(const Presentation& p);
/// Throws InvalidInput carrying the first violation.
void require_valid(const Presentation& p);

/// `.pres` text. Throws ParseError on syntax, InvalidInput on violations.
/// Input starting with `{` is read as the JSON form of presentation_to_json.
Presentation parse_presentation(std::string_view text);
/// Syntax only; the result may violate the invariants (see validate).
Presentation parse_presentation_raw(std::string_view text);
std::string serialize_presentation(const Presentation& p);

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

/// Maps each sheet of a refined presentation to its sheet after contraction.
using ParentMap = std::map<SheetId, SheetId>;

struct Contraction {
  Presentation result;
  ParentMap parent;
};

/// Merges sheets joined by curve edges of `layer` and drops those edges.
/// A merged class takes the id of its first-declared member. Everything else
/// is rewritten through the map.
Contraction contract(const Presentation& p, int layer);

/// Names: satoh_d1, satoh_d2, sphere_circle.
Presentation builtin_presentation(std::string_view name);
std::span<const std::string_view> builtin_presentation_names();

/// Applies a bijection on sheet ids to every field.
Presentation rename(const Presentation& p, const std::map<SheetId, SheetId>& mapping);

/// `corpus:<name>` or a path to a `.pres` file.
Presentation load_presentation_source(const std::string& source);

}  // namespace rackcolor
