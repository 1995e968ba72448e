#pragma once

/**
 * @file algebra.hpp
 * @brief Finite racks and quandles stored as operation tables.
 *
 * A table of order n holds a*b at row a, column b. The right translation
 * by b is the column map a -> a*b. The axioms are
 *   (Q1) a*a = a,
 *   (Q2) every right translation is a bijection,
 *   (Q3) (a*b)*c = (a*c)*(b*c).
 * A rack satisfies Q2 and Q3; a quandle additionally satisfies Q1.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rackcolor {

using Element = int;

class RackTable {
 public:
  /// Throws MalformedTable when the shape is wrong or an entry is out of range.
  RackTable(int order, const std::vector<std::vector<Element>>& rows, std::string label = {});

  /// Row-major cells, n*n of them.
  static RackTable from_cells(int order, std::vector<Element> cells, std::string label = {});

  int order() const noexcept { return order_; }
  Element op(Element a, Element b) const noexcept { return cells_[static_cast<std::size_t>(a * order_ + b)]; }
  std::span<const Element> row(Element a) const noexcept {
    return {cells_.data() + static_cast<std::size_t>(a * order_), static_cast<std::size_t>(order_)};
  }
  std::span<const Element> cells() const noexcept { return cells_; }
  std::vector<std::vector<Element>> rows() const;

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Entrywise comparison; labels are ignored.
  friend bool operator==(const RackTable& lhs, const RackTable& rhs) noexcept {
    return lhs.order_ == rhs.order_ && lhs.cells_ == rhs.cells_;
  }

 private:
  RackTable() = default;
  void check_cells();

  int order_ = 0;
  std::vector<Element> cells_;
  std::string label_;
};

/// Exhaustive axiom check. Every witness is the lexicographically smallest
/// counterexample.
struct AxiomReport {
  std::optional<Element> idempotence_witness;                  // a with a*a != a
  std::optional<Element> translation_witness;                  // column b not bijective
  std::optional<std::array<Element, 3>> distributivity_witness;  // (a, b, c)

  bool q1() const noexcept { return !idempotence_witness; }
  bool q2() const noexcept { return !translation_witness; }
  bool q3() const noexcept { return !distributivity_witness; }
};

AxiomReport check_axioms(const RackTable& t);
bool is_rack(const RackTable& t);
bool is_quandle(const RackTable& t);

/// The kink map: forward(a) is the unique x with x*a = a.
class KinkMap {
 public:
  KinkMap(std::vector<Element> forward);

  int order() const noexcept { return static_cast<int>(forward_.size()); }
  std::span<const Element> forward() const noexcept { return forward_; }
  std::span<const Element> inverse() const noexcept { return inverse_; }
  Element operator()(Element a) const noexcept { return forward_[static_cast<std::size_t>(a)]; }
  Element inverse(Element a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }

  /// Applies the map m times; negative m applies the inverse -m times.
  Element power(Element a, long long m) const;
  bool is_identity() const noexcept;

 private:
  std::vector<Element> forward_;
  std::vector<Element> inverse_;
};

/// Throws NotARack if Q2 fails or the solution map is not a permutation.
KinkMap kink_map(const RackTable& t);

inline Element iota_power(const KinkMap& k, Element a, long long m) { return k.power(a, m); }

/// Exhaustive check of the kink-map laws:
///   defining equation  iota(a)*a = a
///   K1                 iota is a bijection
///   K2                 iota(a)*b = iota(a*b)
///   K3                 a*iota(b) = a*b
/// iota is recomputed column-wise from the table so K1 can actually fail.
struct KinkReport {
  std::optional<Element> defining_witness;
  std::optional<Element> bijection_witness;  // an element with two preimages
  std::optional<std::array<Element, 2>> k2_witness;
  std::optional<std::array<Element, 2>> k3_witness;

  bool defining() const noexcept { return !defining_witness; }
  bool k1() const noexcept { return !bijection_witness; }
  bool k2() const noexcept { return !k2_witness; }
  bool k3() const noexcept { return !k3_witness; }
  bool all() const noexcept { return defining() && k1() && k2() && k3(); }
};

KinkReport verify_kink_properties(const RackTable& t);

/// a *' b = iota(a) * b. The result is checked to be a quandle.
RackTable associated_quandle(const RackTable& t);

/// Orbits of the group generated by right translations, each sorted,
/// listed by smallest element.
std::vector<std::vector<Element>> connected_components(const RackTable& t);

/// The table restricted to a subset closed under the operation, relabelled
/// 0..k-1 in the order the subset lists its elements.
RackTable restrict_to(const RackTable& t, std::span<const Element> subset);

enum class Family { cyclic, dihedral, trivial };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);

/// cyclic: a*b = a+1 mod n; dihedral: a*b = 2b-a mod n; trivial: a*b = a.
RackTable builtin(Family family, int n);
RackTable builtin(std::string_view family, int n);

inline constexpr int kMaxEnumerationOrder = 4;

/// Every n x n table satisfying Q2 and Q3, in lexicographic (row-major) order.
std::vector<RackTable> enumerate_racks(int n);

}  // namespace rackcolor
