#pragma once

/**
 * @file moves.hpp
 * @brief Coloring invariance of local diagram moves.
 *
 * A move is a pair of local patches with a common boundary. The boundary is
 * a list of pieces (where sheets meet the boundary of the ball). On each side
 * a piece belongs to one sheet: the sheet of the same name, unless an
 * `attach <piece> <sheet>` line says otherwise. A move preserves colorings
 * when every boundary coloring extends to the same number of colorings on
 * both sides.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rackcolor/algebra.hpp"
#include "rackcolor/parallel.hpp"
#include "rackcolor/presentation.hpp"

namespace rackcolor {

struct MoveSchema {
  std::string name;
  std::vector<SheetId> boundary;
  Presentation before;
  Presentation after;
  std::map<SheetId, SheetId> before_attach;  // piece -> sheet, when not same-named
  std::map<SheetId, SheetId> after_attach;

  /// The sheet holding `piece` on the chosen side.
  const SheetId& sheet_of(const SheetId& piece, bool after_side) const;

  friend bool operator==(const MoveSchema&, const MoveSchema&) = default;
};

std::vector<std::string> validate_schema(const MoveSchema& m);

/// Header lines `name <label>` and `boundary <piece> ...`, then the before
/// block, a `---` line, and the after block. Blocks are `.pres` text plus
/// optional `attach` lines.
MoveSchema parse_schema(std::string_view text);
std::string serialize_schema(const MoveSchema& m);

/// Before and after exchanged.
MoveSchema swapped(const MoveSchema& m);

struct BoundaryTally {
  std::vector<Element> boundary;  // one value per boundary piece
  std::uint64_t before = 0;
  std::uint64_t after = 0;
};

struct MoveReport {
  std::string name;
  /// Boundary colorings with at least one extension on some side, in
  /// lexicographic order. Every other boundary coloring has 0 on both sides.
  std::vector<BoundaryTally> tallies;
  std::uint64_t total_before = 0;
  std::uint64_t total_after = 0;
  std::size_t mismatches = 0;
  bool bijective = false;
};

MoveReport verify_move(const MoveSchema& m, const RackTable& t, const SolverOptions& options = {});

/// The branch-free moves D1, D2, T1, T2.
std::vector<MoveSchema> catalog();

/// `catalog:<name>` or a path to a schema file.
MoveSchema load_schema_source(const std::string& source);

struct SatohReport {
  enum class Status { not_regular_equivalent, counts_agree, precondition_violated };
  Status status = Status::precondition_violated;
  std::uint64_t d1_count = 0;
  std::uint64_t d2_count = 0;
  std::string detail;
};

/// Counts colorings of the two Satoh diagrams by a connected non-quandle
/// rack. Different counts mean the diagrams are not related by branch-free
/// moves. Throws NotARack for a non-rack.
SatohReport satoh_discrimination(const RackTable& t);

}  // namespace rackcolor
