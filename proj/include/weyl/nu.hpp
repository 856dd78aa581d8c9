#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/bounds.hpp"
#include "weyl/orbifold.hpp"

namespace weyl {

/// A summand with what is known about its Weyl-functional infima.
/// nu is the infimum of the Weyl functional over all metrics, nu_plus over
/// metrics of positive Yamabe constant (upper = +inf when that class could
/// be empty).
struct BuildingBlock {
  OrbifoldDescriptor descriptor;
  PiInterval nu;
  PiInterval nu_plus;
  Tri admits_selfdual = Tri::Unknown;
  Tri admits_selfdual_psc = Tri::Unknown;
  bool is_zero_filler = false;  ///< nu = nu_plus = tau_orb = 0
  std::string basis;            ///< the metric or argument behind the values
  std::vector<std::string> notes;

  const std::string& name() const { return descriptor.name; }
};

struct CatalogOptions {
  /// Accept D and E type ALE spaces, valued with 8 pi^2 (|Gamma| - 1/|Gamma|).
  bool paper_literal_ale = false;
};

BuildingBlock block_cp2();
BuildingBlock block_cp2bar();
BuildingBlock block_s4();
BuildingBlock block_s4_z2();
BuildingBlock block_s4_zn(long long n);
BuildingBlock block_s1xs3();
BuildingBlock block_s1xs3_zn(long long n);
BuildingBlock block_s2xt2();
BuildingBlock block_s2xs2();
BuildingBlock block_s2xs2_z2();
/// Throws InvalidWeights unless the weights are positive and pairwise coprime.
BuildingBlock block_weighted_projective(long long d1, long long d2, long long d3);
/// Compactified LeBrun space, oriented so that it is self-dual.
BuildingBlock block_lebrun(long long n);
/// type is 'A', 'D' or 'E'. D and E need options.paper_literal_ale and
/// otherwise throw NotInCatalog.
BuildingBlock block_ale(char type, long long n, const CatalogOptions& options = {});

/// One atom of the sum language, e.g. "WP(1,2,3)".
BuildingBlock catalog_block(std::string_view atom, const CatalogOptions& options = {});

/// Representative entries for --list-catalog.
std::vector<BuildingBlock> catalog_listing(const CatalogOptions& options = {});

struct NuValue {
  PiInterval interval;
  bool exact = false;
  std::vector<std::string> derivation;
};

NuValue nu_connected_sum(const std::vector<BuildingBlock>& blocks);

/// `wplus_bound` is a lower bound for the self-dual Weyl functional of the
/// sum over positive Yamabe classes. Throws InfiniteUpper when some block may
/// have no such class and the sum has more than one block.
NuValue nu_plus_connected_sum(const std::vector<BuildingBlock>& blocks,
                              const std::optional<BoundResult>& wplus_bound = std::nullopt);

/// Descriptor of the connected sum of the blocks, in order.
OrbifoldDescriptor sum_descriptor(const std::vector<BuildingBlock>& blocks);

/// Grammar:  sum  := term ('#' term)*
///           term := [INT '*'] atom
///           atom := CP2 | CP2bar | S4 | S4/Z2 | S4/Zn(n) | S1xS3 | S1xS3/Zn(n)
///                 | S2xT2 | S2xS2 | (S2xS2)/Z2 | WP(a,b,c) | Ln(n) | ALE(T,n)
/// Whitespace is free between tokens. Throws ParseError (line 1, 1-based
/// column) and propagates InvalidWeights / NotInCatalog.
std::vector<BuildingBlock> parse_sum_expression(std::string_view text, const CatalogOptions& options = {});

}  // namespace weyl
