#pragma once

#include <string>
#include <string_view>

#include "weyl/exact.hpp"

namespace weyl {

/// Finite subgroups of SO(4) acting freely on R^4 - {0}, as they occur for
/// isolated orbifold points.
///
/// Orientation: `orientation_sign` records which orientation of the link
/// S^3/Gamma the point carries. Every eta contribution is multiplied by it;
/// reversing the orbifold flips it.
enum class GroupKind {
  Trivial,
  AntipodalZ2,   ///< -1 on R^4 (centre of SU(2)); order 2.
  CyclicSU2,     ///< (z1, z2) -> (e^{2 pi i/n} z1, e^{-2 pi i/n} z2); order n.
  CyclicOther,   ///< cyclic of order n, action not recorded (no catalog eta).
  ADE_A,         ///< A-type tag; same subgroup of SU(2) as CyclicSU2(n).
  ADE_D,         ///< binary dihedral group of order 4n.
  ADE_E6,        ///< binary tetrahedral, order 24.
  ADE_E7,        ///< binary octahedral, order 48.
  ADE_E8,        ///< binary icosahedral, order 120.
};

struct GroupDescriptor {
  GroupKind kind = GroupKind::Trivial;
  long long n = 1;
  int orientation_sign = +1;

  static GroupDescriptor trivial() { return {GroupKind::Trivial, 1, +1}; }
  static GroupDescriptor antipodal() { return {GroupKind::AntipodalZ2, 2, +1}; }
  static GroupDescriptor cyclic_su2(long long n) { return {GroupKind::CyclicSU2, n, +1}; }
  static GroupDescriptor cyclic_other(long long n) { return {GroupKind::CyclicOther, n, +1}; }
  static GroupDescriptor ade_a(long long n) { return {GroupKind::ADE_A, n, +1}; }
  static GroupDescriptor ade_d(long long n) { return {GroupKind::ADE_D, n, +1}; }
  static GroupDescriptor ade_e(int which);

  long long order() const;
  GroupDescriptor reversed() const {
    GroupDescriptor g = *this;
    g.orientation_sign = -g.orientation_sign;
    return g;
  }

  /// Catalog name: "trivial", "Z2-antipodal", "Zn-su2(n)", "Zn(n)", "A(n)",
  /// "D(n)", "E6", "E7", "E8"; prefixed with '~' when orientation_sign < 0.
  std::string name() const;
  /// Inverse of name(). Throws std::invalid_argument on unknown names.
  static GroupDescriptor parse(std::string_view text);

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct EtaValue {
  Rational value;  ///< eta for the standard orientation of the link
  int orientation_sign = +1;

  Rational signed_value() const { return orientation_sign > 0 ? value : -value; }
  EtaValue reversed() const { return {value, -orientation_sign}; }
};

/// -(n-1)(n-2)/(3n), the eta invariant of S^3/Z_n for the CyclicSU2 action.
Rational eta_cyclic(long long n);

/// -(1/n) sum_{k=1}^{n-1} cot^2(k pi / n), evaluated term by term in double.
double eta_cotangent_oracle(long long n);

/// Throws DomainError(NotInCatalog) for D/E tags and for CyclicOther.
EtaValue eta_for_group(const GroupDescriptor& g);

/// True when eta_for_group would succeed.
bool has_catalog_eta(const GroupDescriptor& g);

/// Euler characteristic of the minimal resolution of C^2/Gamma (rank of the
/// root system plus one). Only meaningful for subgroups of SU(2).
long long resolution_euler(const GroupDescriptor& g);

}  // namespace weyl
