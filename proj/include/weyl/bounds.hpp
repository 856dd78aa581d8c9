#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/orbifold.hpp"

namespace weyl {

enum class YamabeSign { Positive, Zero, Negative, Unknown };
std::string_view yamabe_sign_name(YamabeSign s);
YamabeSign parse_yamabe_sign(std::string_view text);
Tri parse_tri(std::string_view text);

/// User-declared hypotheses about the conformal class and topology.
///
/// b2 flags left Unknown are filled from the descriptor; a flag that
/// contradicts recorded data is an InconsistentHypotheses error.
struct Hypotheses {
  YamabeSign yamabe_sign = YamabeSign::Unknown;
  Tri b2_plus_positive = Tri::Unknown;
  Tri b2_minus_positive = Tri::Unknown;
  Tri harmonic_wplus_nonzero = Tri::Unknown;  ///< delta W+ = 0 and W+ != 0
  bool is_manifold = false;                    ///< also implied by an empty point list
  bool excluded_s4_rp4 = false;                ///< also implied by chi or b2 data
  std::optional<Rational> seshadri_c2;         ///< c^2 where s + c|W| >= 0
  Tri itoh = Tri::Unknown;                     ///< s - 6 w^- >= 0
};

enum class BoundTag {
  Trivial,        // (a)
  Signature,      // (b)
  OrbifoldCover,  // (c)
  FinitePi1,      // (d)
  FiniteH1,       // (e)
  LargeIndex,     // (f)
  B2Plus,         // (g)
  HarmonicWPlus,  // (h)
  ManifoldChi,    // (i)
  B2Minus,        // (j)
  YamabeZero,     // (k)
  Seshadri,       // (l)
  Itoh,           // (m)
};

/// Letter (a)..(m) and short name, e.g. "d", "finite-pi1".
char bound_letter(BoundTag t);
std::string_view bound_name(BoundTag t);

/// A lower bound for the self-dual Weyl functional.
struct BoundResult {
  BoundTag tag = BoundTag::Trivial;
  std::optional<PiQuantity> value;  ///< absent when an input is unknown
  bool applies = false;
  std::vector<std::string> hypotheses_used;
  std::vector<std::string> missing;  ///< unmet or unknown hypotheses
  std::string equality_case;
};

/// All thirteen bounds in tag order. Throws InconsistentHypotheses, and
/// MissingInvariant when cover data exists but has no entry of the orbifold
/// fundamental group's order.
std::vector<BoundResult> enumerate_bounds(const OrbifoldDescriptor& m, const Hypotheses& h);

/// Largest applicable bound. Ties go to the earlier tag in
/// d, e, c, g, h, k, i, j, f, l, m, b, a.
BoundResult best_bound(const OrbifoldDescriptor& m, const Hypotheses& h);
int tie_priority(BoundTag t);

struct ObstructionReason {
  std::string theorem;    ///< "b2plus", "large-index" or "harmonic-wplus"
  std::string inequality;  ///< the witnessed strict inequality, with values
};

struct ObstructionVerdict {
  bool obstructed = false;
  std::vector<ObstructionReason> reasons;
};

/// Decides when no self-dual metric of positive Yamabe constant can exist.
/// `harmonic_wplus` is the only input not derivable from the descriptor.
ObstructionVerdict selfdual_psc_obstruction(const OrbifoldDescriptor& m, Tri harmonic_wplus = Tri::Unknown);

/// Smallest n0 such that M # n(S^2 x S^2) is obstructed for every n >= n0.
/// The b2+ route needs chi_orb - 3 tau_orb + 2n > 0, the pi1 route
/// 2 chi_orb - 3 tau_orb + 4n > 0; the smaller answer wins. Throws
/// HypothesisNotMet when neither route is available.
long long stabilization_threshold(const OrbifoldDescriptor& m);

/// Y^2 / 24.
double wplus_from_yamabe(double y_lower);

}  // namespace weyl
