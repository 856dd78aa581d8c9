#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/exact.hpp"
#include "weyl/space_forms.hpp"

namespace weyl {

enum class Tri { No, Yes, Unknown };
std::string_view tri_name(Tri t);

/// What is known about a fundamental group (ordinary or orbifold).
struct Pi1Descriptor {
  enum class Kind { Trivial, FiniteOfOrder, FreeProductOfFinite, InfiniteResiduallyFinite, PositiveB1, Unknown };

  Kind kind = Kind::Unknown;
  long long order = 1;                 ///< FiniteOfOrder only
  std::vector<long long> factor_orders;  ///< FreeProductOfFinite only, each >= 2

  static Pi1Descriptor trivial() { return {Kind::Trivial, 1, {}}; }
  /// finite(1) normalises to trivial.
  static Pi1Descriptor finite(long long k);
  /// Drops trivial factors; fewer than two remaining factors collapse to
  /// trivial / finite.
  static Pi1Descriptor free_product(std::vector<long long> orders);
  static Pi1Descriptor infinite_residually_finite() { return {Kind::InfiniteResiduallyFinite, 1, {}}; }
  static Pi1Descriptor positive_b1() { return {Kind::PositiveB1, 1, {}}; }
  static Pi1Descriptor unknown() { return {Kind::Unknown, 1, {}}; }

  /// |G| when finite.
  std::optional<long long> finite_order() const;

  /// "trivial", "finite(k)", "free(a,b,...)", "infinite-rf", "b1-positive", "unknown".
  std::string str() const;
  static Pi1Descriptor parse(std::string_view text);

  friend bool operator==(const Pi1Descriptor&, const Pi1Descriptor&) = default;
};

/// Free product of the two groups (Seifert-Van Kampen for a connected sum).
Pi1Descriptor free_product(const Pi1Descriptor& a, const Pi1Descriptor& b);

/// Whether the group has subgroups of arbitrarily large finite index.
Tri has_large_index_subgroups(const Pi1Descriptor& p);

/// |H_1(M; Z)|, possibly infinite.
struct H1Order {
  bool infinite = false;
  long long order = 1;

  static H1Order finite(long long k) { return {false, k}; }
  static H1Order infinity() { return {true, 0}; }
  std::string str() const { return infinite ? "inf" : std::to_string(order); }
  friend bool operator==(const H1Order&, const H1Order&) = default;
};

/// A user-supplied orbifold cover of the descriptor: its degree and its own
/// underlying invariants and singular points.
struct CoverEntry {
  long long degree = 1;
  long long euler = 0;
  long long signature = 0;
  std::vector<GroupDescriptor> points;

  friend bool operator==(const CoverEntry&, const CoverEntry&) = default;
};

/// Closed oriented 4-orbifold with isolated singular points.
///
/// `euler` and `signature` are those of the underlying topological space.
/// `points` is an unordered multiset of non-trivial groups. `eta_extra`
/// carries the summed eta contribution of all points without a catalog eta
/// (kinds CyclicOther and D/E); it is required exactly when such points
/// exist.
struct OrbifoldDescriptor {
  std::string name;
  long long euler = 2;
  long long signature = 0;
  std::vector<GroupDescriptor> points;
  std::optional<long long> b1;
  std::optional<long long> b2_plus;
  std::optional<long long> b2_minus;
  std::optional<H1Order> h1_order;
  Pi1Descriptor pi1;
  Pi1Descriptor pi1_orb;
  std::optional<Rational> eta_extra;
  std::vector<CoverEntry> cover_data;

  bool is_manifold() const { return points.empty(); }
  bool has_uncatalogued_points() const;

  friend bool operator==(const OrbifoldDescriptor&, const OrbifoldDescriptor&) = default;
};

/// Throws DomainError(InvalidDescriptor) when the recorded Betti numbers
/// contradict the Euler characteristic, or a point has order < 2.
void validate(const OrbifoldDescriptor& m);

Rational chi_orb(const OrbifoldDescriptor& m);
/// Throws DomainError(NotInCatalog) when a point has no catalog eta and
/// eta_extra is absent.
Rational tau_orb(const OrbifoldDescriptor& m);

OrbifoldDescriptor connected_sum(const OrbifoldDescriptor& a, const OrbifoldDescriptor& b);
/// Left fold of connected_sum; the list must be non-empty.
OrbifoldDescriptor connected_sum(const std::vector<OrbifoldDescriptor>& parts);
OrbifoldDescriptor reverse_orientation(const OrbifoldDescriptor& m);

/// (k chi_orb, k tau_orb): what any k-fold orbifold cover must have.
std::pair<Rational, Rational> scale_by_cover(const OrbifoldDescriptor& m, long long k);

struct CoverCheck {
  long long degree = 1;
  Rational expected_chi_orb, expected_tau_orb;
  Rational cover_chi_orb;
  std::optional<Rational> cover_tau_orb;  ///< absent when a cover point has no catalog eta
  bool consistent = false;
};

/// Compares every cover_data entry with scale_by_cover.
std::vector<CoverCheck> check_cover_data(const OrbifoldDescriptor& m);

/// Points sorted into a canonical order (for multiset comparisons).
std::vector<GroupDescriptor> sorted_points(const OrbifoldDescriptor& m);

long long max_point_order(const std::vector<GroupDescriptor>& points);

/// b2+ > 0 as recorded in the descriptor.
Tri b2_plus_positive(const OrbifoldDescriptor& m);
Tri b2_minus_positive(const OrbifoldDescriptor& m);

/// Large-index predicate for pi1 or pi1_orb (Yes if either is Yes).
Tri has_large_index_subgroups(const OrbifoldDescriptor& m);

}  // namespace weyl
