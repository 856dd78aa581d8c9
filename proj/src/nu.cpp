#include "weyl/nu.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace weyl {

namespace {

OrbifoldDescriptor manifold(std::string name, long long euler, long long signature, long long b1, long long b2p,
                            long long b2m, Pi1Descriptor pi1, std::optional<H1Order> h1) {
  OrbifoldDescriptor d;
  d.name = std::move(name);
  d.euler = euler;
  d.signature = signature;
  d.b1 = b1;
  d.b2_plus = b2p;
  d.b2_minus = b2m;
  d.pi1 = pi1;
  d.pi1_orb = pi1;
  d.h1_order = h1;
  return d;
}

BuildingBlock zero_filler(OrbifoldDescriptor d, Tri selfdual, std::string basis) {
  BuildingBlock b;
  b.descriptor = std::move(d);
  b.nu = PiInterval::exactly(PiQuantity());
  b.nu_plus = PiInterval::exactly(PiQuantity());
  b.admits_selfdual = selfdual;
  b.admits_selfdual_psc = selfdual;
  b.is_zero_filler = true;
  b.basis = std::move(basis);
  return b;
}

PiQuantity twelve_tau(const OrbifoldDescriptor& d) { return pi2(Rational(12) * tau_orb(d)); }

BuildingBlock selfdual_block(OrbifoldDescriptor d, bool psc, std::string basis) {
  BuildingBlock b;
  b.descriptor = std::move(d);
  PiQuantity v = twelve_tau(b.descriptor);
  b.nu = PiInterval::exactly(v);
  b.nu_plus = psc ? PiInterval::exactly(v) : PiInterval::at_least(v);
  b.admits_selfdual = Tri::Yes;
  b.admits_selfdual_psc = psc ? Tri::Yes : Tri::Unknown;
  b.basis = std::move(basis);
  return b;
}

// A positive Kahler-Einstein metric realizes nu_plus: -12 pi^2 tau_orb plus
// twice the b2+ equality value.
PiQuantity kahler_einstein_nu_plus(const OrbifoldDescriptor& d) {
  Rational q = Rational(2) * chi_orb(d) + Rational(3) * tau_orb(d);
  return pi2(Rational(-12) * tau_orb(d) + Rational(8, 3) * q);
}

BuildingBlock kahler_einstein_block(OrbifoldDescriptor d, std::string basis) {
  BuildingBlock b;
  b.descriptor = std::move(d);
  PiQuantity np = kahler_einstein_nu_plus(b.descriptor);
  PiQuantity lower = std::max(PiQuantity(), twelve_tau(b.descriptor));
  b.nu = PiInterval(lower, np);
  b.nu_plus = PiInterval::exactly(np);
  b.admits_selfdual = Tri::Unknown;
  b.admits_selfdual_psc = selfdual_psc_obstruction(b.descriptor).obstructed ? Tri::No : Tri::Unknown;
  b.basis = std::move(basis);
  return b;
}

std::string param_name(std::string_view head, long long n) { return std::string(head) + "(" + std::to_string(n) + ")"; }

void require_at_least(long long n, long long lo, const std::string& what) {
  if (n < lo) {
    throw DomainError(ErrorCode::NotInCatalog, what + " needs parameter >= " + std::to_string(lo));
  }
}

}  // namespace

BuildingBlock block_cp2() {
  return selfdual_block(manifold("CP2", 3, 1, 0, 1, 0, Pi1Descriptor::trivial(), H1Order::finite(1)), true,
                        "Fubini-Study metric (self-dual, positive scalar curvature)");
}

BuildingBlock block_cp2bar() {
  BuildingBlock b;
  b.descriptor = reverse_orientation(block_cp2().descriptor);
  b.descriptor.name = "CP2bar";
  b.nu = PiInterval::exactly(pi2(Rational(12)));
  b.nu_plus = PiInterval::exactly(pi2(Rational(12)));
  b.admits_selfdual = Tri::No;
  b.admits_selfdual_psc = Tri::No;
  b.basis = "Weyl functional is orientation independent; Fubini-Study metric";
  return b;
}

BuildingBlock block_s4() {
  return zero_filler(manifold("S4", 2, 0, 0, 0, 0, Pi1Descriptor::trivial(), H1Order::finite(1)), Tri::Yes,
                     "round metric (conformally flat)");
}

BuildingBlock block_s4_z2() {
  auto d = manifold("S4/Z2", 2, 0, 0, 0, 0, Pi1Descriptor::trivial(), H1Order::finite(1));
  d.points = {GroupDescriptor::antipodal(), GroupDescriptor::antipodal()};
  d.pi1_orb = Pi1Descriptor::finite(2);
  return zero_filler(std::move(d), Tri::Yes, "quotient of the round metric (conformally flat)");
}

BuildingBlock block_s4_zn(long long n) {
  require_at_least(n, 2, "S4/Zn");
  auto d = manifold(param_name("S4/Zn", n), 2, 0, 0, 0, 0, Pi1Descriptor::trivial(), H1Order::finite(1));
  d.points = {GroupDescriptor::cyclic_su2(n), GroupDescriptor::cyclic_su2(n).reversed()};
  d.pi1_orb = Pi1Descriptor::finite(n);
  return zero_filler(std::move(d), Tri::Yes, "quotient of the round metric (conformally flat)");
}

BuildingBlock block_s1xs3() {
  return zero_filler(manifold("S1xS3", 0, 0, 1, 0, 0, Pi1Descriptor::positive_b1(), H1Order::infinity()), Tri::Yes,
                     "product of standard metrics (conformally flat)");
}

BuildingBlock block_s1xs3_zn(long long n) {
  require_at_least(n, 2, "S1xS3/Zn");
  return zero_filler(
      manifold(param_name("S1xS3/Zn", n), 0, 0, 1, 0, 0, Pi1Descriptor::positive_b1(), H1Order::infinity()),
      Tri::Yes, "product of standard metrics (conformally flat)");
}

BuildingBlock block_s2xt2() {
  return zero_filler(manifold("S2xT2", 0, 0, 2, 1, 1, Pi1Descriptor::positive_b1(), H1Order::infinity()),
                     Tri::Unknown, "collapse of the flat factor with bounded curvature and positive scalar curvature");
}

BuildingBlock block_s2xs2() {
  return kahler_einstein_block(manifold("S2xS2", 4, 0, 0, 1, 1, Pi1Descriptor::trivial(), H1Order::finite(1)),
                               "product Kahler-Einstein metric");
}

BuildingBlock block_s2xs2_z2() {
  auto d = manifold("(S2xS2)/Z2", 4, 0, 0, 1, 1, Pi1Descriptor::trivial(), H1Order::finite(1));
  d.points = std::vector<GroupDescriptor>(4, GroupDescriptor::antipodal());
  d.pi1_orb = Pi1Descriptor::finite(2);
  return kahler_einstein_block(std::move(d), "quotient of the product Kahler-Einstein metric");
}

BuildingBlock block_weighted_projective(long long d1, long long d2, long long d3) {
  const std::string name =
      "WP(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3) + ")";
  const long long w[3] = {d1, d2, d3};
  for (long long x : w) {
    if (x < 1) throw DomainError(ErrorCode::InvalidWeights, name + ": weights must be positive");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(w[i], w[j]) != 1) {
        throw DomainError(ErrorCode::InvalidWeights, name + ": weights " + std::to_string(w[i]) + " and " +
                                                         std::to_string(w[j]) + " are not coprime");
      }
    }
  }
  auto d = manifold(name, 3, 1, 0, 1, 0, Pi1Descriptor::trivial(), H1Order::finite(1));
  int ones = static_cast<int>(std::count(w, w + 3, 1LL));
  if (ones >= 2) {
    long long n = d1 * d2 * d3;
    if (n > 1) d.points = {GroupDescriptor::cyclic_su2(n).reversed()};
    BuildingBlock b = selfdual_block(std::move(d), true, "self-dual compactified LeBrun metric (positive Yamabe)");
    return b;
  }
  for (long long x : w) {
    if (x > 1) d.points.push_back(GroupDescriptor::cyclic_other(x));
  }
  Rational sum_sq = Rational(d1 * d1 + d2 * d2 + d3 * d3);
  d.eta_extra = Rational(-1) + sum_sq / (Rational(3) * Rational(d1) * Rational(d2) * Rational(d3));
  BuildingBlock b = selfdual_block(std::move(d), false, "self-dual Kahler orbifold metric");
  b.notes.push_back("positivity of the Yamabe constant is not recorded; nu_plus upper bound unknown");
  return b;
}

BuildingBlock block_lebrun(long long n) {
  require_at_least(n, 1, "Ln");
  // Complex orientation first: the exceptional curve has self-intersection -n.
  OrbifoldDescriptor complex = manifold("Ln", 3, -1, 0, 0, 1, Pi1Descriptor::trivial(), H1Order::finite(1));
  if (n > 1) complex.points = {GroupDescriptor::cyclic_su2(n)};
  OrbifoldDescriptor d = reverse_orientation(complex);
  d.name = param_name("Ln", n);
  return selfdual_block(std::move(d), true, "conformal compactification of the scalar-flat Kahler ALE metric");
}

BuildingBlock block_ale(char type, long long n, const CatalogOptions& options) {
  if (type == 'A') {
    require_at_least(n, 2, "ALE(A,n)");
    OrbifoldDescriptor d =
        manifold("ALE(A," + std::to_string(n) + ")", n + 1, n - 1, 0, n - 1, 0, Pi1Descriptor::trivial(),
                 H1Order::finite(1));
    d.points = {GroupDescriptor::cyclic_su2(n)};
    return selfdual_block(std::move(d), true, "conformal compactification of the hyperkahler ALE metric");
  }
  GroupDescriptor g;
  std::string name;
  if (type == 'D') {
    require_at_least(n, 2, "ALE(D,n)");
    g = GroupDescriptor::ade_d(n);
    name = "ALE(D," + std::to_string(n) + ")";
  } else if (type == 'E') {
    if (n < 6 || n > 8) throw DomainError(ErrorCode::NotInCatalog, "ALE(E,n) needs n in {6, 7, 8}");
    g = GroupDescriptor::ade_e(static_cast<int>(n));
    name = "ALE(E," + std::to_string(n) + ")";
  } else {
    throw DomainError(ErrorCode::NotInCatalog, std::string("ALE type must be A, D or E, got ") + type);
  }
  if (!options.paper_literal_ale) {
    throw DomainError(ErrorCode::NotInCatalog,
                      name + ": D/E values need the paper-literal ALE option (eta of " + g.name() + " is not catalogued)");
  }
  const long long order = g.order();
  const long long chi_resolution = resolution_euler(g);
  const long long rank = chi_resolution - 1;
  Rational inv = Rational(1, order);
  PiQuantity literal = pi2(Rational(8) * (Rational(order) - inv));
  PiQuantity via_euler = pi2(Rational(8) * (Rational(chi_resolution) - inv));

  OrbifoldDescriptor d =
      manifold(name, rank + 2, rank, 0, rank, 0, Pi1Descriptor::trivial(), H1Order::finite(1));
  d.points = {g};
  d.eta_extra = literal.coefficient() / Rational(12) - Rational(rank);
  BuildingBlock b = selfdual_block(std::move(d), true, "conformal compactification of the hyperkahler ALE metric");
  b.notes.push_back("value uses 8 pi^2 (|Gamma| - 1/|Gamma|) = " + literal.str());
  b.notes.push_back("the Euler-characteristic form 8 pi^2 (chi(X) - 1/|Gamma|) gives " + via_euler.str() +
                    (literal == via_euler ? " (agrees)" : " (disagrees)"));
  return b;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, 1, static_cast<int>(at) + 1);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool consume(std::string_view s) {
    if (text.substr(pos, s.size()) == s) {
      pos += s.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, text[pos] - '0', &v)) {
        fail("integer too large", start);
      }
      ++pos;
    }
    if (pos == start) fail("expected an integer", start);
    return v;
  }
  std::vector<long long> int_list(std::size_t count) {
    std::vector<long long> out;
    expect('(');
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(integer());
    }
    expect(')');
    return out;
  }
};

BuildingBlock parse_atom(Cursor& c, const CatalogOptions& options) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.consume("(S2xS2)/Z2")) return block_s2xs2_z2();
  if (c.consume("S1xS3/Zn")) return block_s1xs3_zn(c.int_list(1)[0]);
  if (c.consume("S1xS3")) return block_s1xs3();
  if (c.consume("S4/Zn")) return block_s4_zn(c.int_list(1)[0]);
  if (c.consume("S4/Z2")) return block_s4_z2();
  if (c.consume("S4")) return block_s4();
  if (c.consume("S2xT2")) return block_s2xt2();
  if (c.consume("S2xS2")) return block_s2xs2();
  if (c.consume("CP2bar")) return block_cp2bar();
  if (c.consume("CP2")) return block_cp2();
  if (c.consume("WP")) {
    auto w = c.int_list(3);
    return block_weighted_projective(w[0], w[1], w[2]);
  }
  if (c.consume("Ln")) return block_lebrun(c.int_list(1)[0]);
  if (c.consume("ALE")) {
    c.expect('(');
    c.skip_ws();
    if (c.pos >= c.text.size() || std::string_view("ADE").find(c.text[c.pos]) == std::string_view::npos) {
      c.fail("ALE type must be A, D or E", c.pos);
    }
    char type = c.text[c.pos++];
    c.expect(',');
    long long n = c.integer();
    c.expect(')');
    return block_ale(type, n, options);
  }
  c.fail("unknown building block", start);
}

}  // namespace

BuildingBlock catalog_block(std::string_view atom, const CatalogOptions& options) {
  Cursor c{atom};
  BuildingBlock b = parse_atom(c, options);
  if (!c.done()) c.fail("trailing characters after building block", c.pos);
  return b;
}

std::vector<BuildingBlock> parse_sum_expression(std::string_view text, const CatalogOptions& options) {
  Cursor c{text};
  std::vector<BuildingBlock> out;
  if (c.done()) c.fail("empty connected-sum expression", c.pos);
  while (true) {
    long long mult = 1;
    if (c.peek_digit()) {
      std::size_t at = c.pos;
      mult = c.integer();
      if (mult < 1) c.fail("multiplier must be positive", at);
      c.expect('*');
    }
    BuildingBlock b = parse_atom(c, options);
    for (long long i = 0; i < mult; ++i) out.push_back(b);
    if (c.done()) break;
    c.expect('#');
  }
  return out;
}

std::vector<BuildingBlock> catalog_listing(const CatalogOptions& options) {
  std::vector<BuildingBlock> out = {block_cp2(),      block_cp2bar(),       block_s4(),
                                    block_s4_z2(),    block_s4_zn(3),        block_s1xs3(),
                                    block_s1xs3_zn(3), block_s2xt2(),       block_s2xs2(),
                                    block_s2xs2_z2(), block_weighted_projective(1, 1, 3),
                                    block_weighted_projective(1, 2, 3), block_lebrun(3), block_ale('A', 3)};
  if (options.paper_literal_ale) {
    out.push_back(block_ale('D', 2, options));
    out.push_back(block_ale('E', 6, options));
    out.push_back(block_ale('E', 7, options));
    out.push_back(block_ale('E', 8, options));
  }
  return out;
}

OrbifoldDescriptor sum_descriptor(const std::vector<BuildingBlock>& blocks) {
  std::vector<OrbifoldDescriptor> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(b.descriptor);
  return connected_sum(parts);
}

namespace {

Rational tau_sum(const std::vector<BuildingBlock>& blocks) {
  Rational t(0);
  for (const auto& b : blocks) t += tau_orb(b.descriptor);
  return t;
}

std::string block_list(const std::vector<BuildingBlock>& blocks, auto pred) {
  std::string s;
  for (const auto& b : blocks) {
    if (!pred(b)) continue;
    if (!s.empty()) s += ", ";
    s += b.name();
  }
  return s.empty() ? "none" : s;
}

}  // namespace

NuValue nu_connected_sum(const std::vector<BuildingBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("nu of an empty connected sum");
  NuValue v;
  if (blocks.size() == 1) {
    v.interval = blocks.front().nu;
    v.exact = v.interval.is_exact();
    v.derivation.push_back("catalog value of " + blocks.front().name() + ": " + blocks.front().basis);
    return v;
  }
  const PiQuantity signature = pi2(Rational(12) * tau_sum(blocks));
  bool theorem = std::all_of(blocks.begin(), blocks.end(), [](const BuildingBlock& b) {
    return b.is_zero_filler || b.admits_selfdual == Tri::Yes;
  });
  if (theorem) {
    v.interval = PiInterval::exactly(signature);
    v.exact = true;
    v.derivation.push_back("self-dual summands: " +
                           block_list(blocks, [](const BuildingBlock& b) { return !b.is_zero_filler; }));
    v.derivation.push_back("zero fillers: " + block_list(blocks, [](const BuildingBlock& b) { return b.is_zero_filler; }));
    v.derivation.push_back("nu = 12 pi^2 sum tau_orb = " + signature.str());
    return v;
  }
  PiQuantity lower = std::max(PiQuantity(), signature);
  std::optional<PiQuantity> upper = PiQuantity();
  for (const auto& b : blocks) {
    if (upper && b.nu.upper()) *upper += *b.nu.upper();
    else upper.reset();
  }
  v.interval = PiInterval(lower, upper);
  v.exact = v.interval.is_exact();
  v.derivation.push_back("lower: max(0, 12 pi^2 sum tau_orb) = " + lower.str());
  v.derivation.push_back("upper: subadditivity, sum of block upper bounds = " +
                         (upper ? upper->str() : std::string("+inf")));
  v.derivation.push_back("not self-dual or unknown: " +
                         block_list(blocks, [](const BuildingBlock& b) {
                           return !b.is_zero_filler && b.admits_selfdual != Tri::Yes;
                         }));
  return v;
}

NuValue nu_plus_connected_sum(const std::vector<BuildingBlock>& blocks, const std::optional<BoundResult>& wplus_bound) {
  if (blocks.empty()) throw std::invalid_argument("nu_plus of an empty connected sum");
  NuValue v;
  if (blocks.size() == 1) {
    v.interval = blocks.front().nu_plus;
    v.exact = v.interval.is_exact();
    v.derivation.push_back("catalog value of " + blocks.front().name() + ": " + blocks.front().basis);
    return v;
  }
  const Rational tau = tau_sum(blocks);
  const PiQuantity signature = pi2(Rational(12) * tau);
  bool theorem = std::all_of(blocks.begin(), blocks.end(), [](const BuildingBlock& b) {
    return b.is_zero_filler || b.admits_selfdual_psc == Tri::Yes;
  });
  if (theorem) {
    v.interval = PiInterval::exactly(signature);
    v.exact = true;
    v.derivation.push_back("self-dual summands of positive Yamabe constant: " +
                           block_list(blocks, [](const BuildingBlock& b) { return !b.is_zero_filler; }));
    v.derivation.push_back("nu_plus = 12 pi^2 sum tau_orb = " + signature.str());
    return v;
  }
  PiQuantity upper;
  for (const auto& b : blocks) {
    if (!b.nu_plus.upper()) {
      throw DomainError(ErrorCode::InfiniteUpper, b.name() + ": nu_plus has no finite upper bound (positive Yamabe metrics not recorded)");
    }
    upper += *b.nu_plus.upper();
  }
  PiQuantity lower = std::max(PiQuantity(), signature);
  v.derivation.push_back("12 pi^2 tau_orb = " + signature.str());
  if (wplus_bound && wplus_bound->value) {
    PiQuantity via = -signature + Rational(2) * *wplus_bound->value;
    v.derivation.push_back("-12 pi^2 tau_orb + 2 * bound (" + std::string(1, bound_letter(wplus_bound->tag)) + ") " +
                           std::string(bound_name(wplus_bound->tag)) + " " + wplus_bound->value->str() + " = " +
                           via.str());
    lower = std::max(lower, via);
  }
  v.derivation.push_back("upper: subadditivity, sum of block nu_plus = " + upper.str());
  if (upper < lower) {
    throw std::logic_error("nu_plus interval is empty: lower " + lower.str() + " exceeds upper " + upper.str());
  }
  v.interval = PiInterval(lower, upper);
  v.exact = v.interval.is_exact();
  return v;
}

}  // namespace weyl
