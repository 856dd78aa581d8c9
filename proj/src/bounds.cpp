#include "weyl/bounds.hpp"

#include <algorithm>
#include <array>

namespace weyl {

std::string_view yamabe_sign_name(YamabeSign s) {
  switch (s) {
    case YamabeSign::Positive: return "positive";
    case YamabeSign::Zero: return "zero";
    case YamabeSign::Negative: return "negative";
    case YamabeSign::Unknown: return "unknown";
  }
  return "unknown";
}

YamabeSign parse_yamabe_sign(std::string_view text) {
  if (text == "positive" || text == "+") return YamabeSign::Positive;
  if (text == "zero" || text == "0") return YamabeSign::Zero;
  if (text == "negative" || text == "-") return YamabeSign::Negative;
  if (text == "unknown") return YamabeSign::Unknown;
  throw std::invalid_argument("yamabe sign must be positive, zero, negative or unknown: " + std::string(text));
}

Tri parse_tri(std::string_view text) {
  if (text == "yes") return Tri::Yes;
  if (text == "no") return Tri::No;
  if (text == "unknown") return Tri::Unknown;
  throw std::invalid_argument("expected yes, no or unknown: " + std::string(text));
}

char bound_letter(BoundTag t) { return static_cast<char>('a' + static_cast<int>(t)); }

std::string_view bound_name(BoundTag t) {
  static constexpr std::array<std::string_view, 13> kNames = {
      "trivial",       "signature",    "orbifold-cover", "finite-pi1", "finite-h1", "large-index", "b2plus",
      "harmonic-wplus", "manifold-chi", "b2minus",        "yamabe-zero", "seshadri", "itoh"};
  return kNames[static_cast<std::size_t>(t)];
}

int tie_priority(BoundTag t) {
  static constexpr std::array<BoundTag, 13> kOrder = {
      BoundTag::FinitePi1,  BoundTag::FiniteH1, BoundTag::OrbifoldCover, BoundTag::B2Plus,   BoundTag::HarmonicWPlus,
      BoundTag::YamabeZero, BoundTag::ManifoldChi, BoundTag::B2Minus,    BoundTag::LargeIndex, BoundTag::Seshadri,
      BoundTag::Itoh,       BoundTag::Signature, BoundTag::Trivial};
  return static_cast<int>(std::find(kOrder.begin(), kOrder.end(), t) - kOrder.begin());
}

namespace {

// Hypotheses after merging the user's flags with descriptor data.
struct Resolved {
  YamabeSign yamabe;
  Tri b2_plus;
  Tri b2_minus;
  Tri harmonic;
  bool manifold;
  bool excluded_s4_rp4;
  std::optional<Rational> c2;
  Tri itoh;
  Tri large_index;
};

Tri merge(Tri flag, Tri recorded, const char* what, const std::string& name) {
  if (flag != Tri::Unknown && recorded != Tri::Unknown && flag != recorded) {
    throw DomainError(ErrorCode::InconsistentHypotheses, std::string(what) + " declared " +
                                                             std::string(tri_name(flag)) + " but " + name +
                                                             " records " + std::string(tri_name(recorded)));
  }
  return flag != Tri::Unknown ? flag : recorded;
}

Resolved resolve(const OrbifoldDescriptor& m, const Hypotheses& h) {
  Resolved r;
  r.yamabe = h.yamabe_sign;
  r.b2_plus = merge(h.b2_plus_positive, b2_plus_positive(m), "b2+ > 0", m.name);
  r.b2_minus = merge(h.b2_minus_positive, b2_minus_positive(m), "b2- > 0", m.name);
  r.harmonic = h.harmonic_wplus_nonzero;
  if (h.is_manifold && !m.points.empty()) {
    throw DomainError(ErrorCode::InconsistentHypotheses, "manifold declared but " + m.name + " has orbifold points");
  }
  r.manifold = h.is_manifold || m.points.empty();
  // S^4 and RP^4 have chi in {1, 2}, tau = 0 and b2 = 0.
  bool ruled_out = (m.euler != 1 && m.euler != 2) || m.signature != 0 || r.b2_plus == Tri::Yes || r.b2_minus == Tri::Yes;
  r.excluded_s4_rp4 = h.excluded_s4_rp4 || (r.manifold && ruled_out);
  if (h.seshadri_c2 && h.seshadri_c2->sign() <= 0) {
    throw DomainError(ErrorCode::InconsistentHypotheses, "Seshadri constant must satisfy c^2 > 0");
  }
  r.c2 = h.seshadri_c2;
  r.itoh = h.itoh;
  r.large_index = has_large_index_subgroups(m);
  return r;
}

PiQuantity aubin_corrected(const Rational& q, long long k, long long gmax) {
  Rational correction(8);
  correction /= Rational(k) * Rational(gmax);
  return pi2(Rational(2) * q - correction);
}

class Builder {
 public:
  Builder(BoundTag tag) { r_.tag = tag; }  // NOLINT
  Builder& need(bool ok, std::string what) {
    (ok ? r_.hypotheses_used : r_.missing).push_back(std::move(what));
    return *this;
  }
  Builder& value(std::optional<PiQuantity> v) {
    r_.value = v;
    return *this;
  }
  Builder& equality(std::string text) {
    r_.equality_case = std::move(text);
    return *this;
  }
  BoundResult done() {
    r_.applies = r_.missing.empty() && r_.value.has_value();
    if (!r_.value) r_.missing.push_back("value not computable from the descriptor");
    return r_;
  }

 private:
  BoundResult r_;
};

}  // namespace

std::vector<BoundResult> enumerate_bounds(const OrbifoldDescriptor& m, const Hypotheses& h) {
  const Resolved r = resolve(m, h);
  const bool ypos = r.yamabe == YamabeSign::Positive;
  const std::string ypos_text = "Y > 0";

  const Rational chi = chi_orb(m);
  std::optional<Rational> tau;
  if (!m.has_uncatalogued_points() || m.eta_extra) tau = tau_orb(m);
  std::optional<Rational> q;  // 2 chi_orb + 3 tau_orb
  if (tau) q = Rational(2) * chi + Rational(3) * *tau;
  const Rational qm = Rational(2 * m.euler + 3 * m.signature);  // manifold version
  const Rational chi3tau = Rational(m.euler + 3 * m.signature);

  auto scaled = [&](Rational k) -> std::optional<PiQuantity> {
    if (!q) return std::nullopt;
    return pi2(k * *q);
  };
  const std::string round_or_open = r.manifold ? "round 4-sphere" : "not characterized";

  std::vector<BoundResult> out;

  out.push_back(Builder(BoundTag::Trivial).value(PiQuantity()).equality("anti-self-dual (W+ = 0)").done());

  out.push_back(Builder(BoundTag::Signature)
                    .value(tau ? std::optional(pi2(Rational(12) * *tau)) : std::nullopt)
                    .equality("self-dual (W- = 0)")
                    .done());

  {
    Builder b(BoundTag::OrbifoldCover);
    b.need(ypos, ypos_text);
    auto k = m.pi1_orb.finite_order();
    b.need(k.has_value(), "|pi1_orb| finite");
    std::optional<PiQuantity> v;
    if (k && q) {
      long long gmax = 1;
      if (!m.cover_data.empty()) {
        auto it = std::find_if(m.cover_data.begin(), m.cover_data.end(),
                               [&](const CoverEntry& c) { return c.degree == *k; });
        if (it == m.cover_data.end()) {
          throw DomainError(ErrorCode::MissingInvariant,
                            m.name + ": no cover entry of degree |pi1_orb| = " + std::to_string(*k));
        }
        gmax = max_point_order(it->points);
      }
      v = aubin_corrected(*q, *k, gmax);
    }
    out.push_back(b.value(v).equality("not characterized").done());
  }

  {
    Builder b(BoundTag::FinitePi1);
    b.need(ypos, ypos_text);
    auto k = m.pi1.finite_order();
    b.need(k.has_value(), "|pi1| finite");
    std::optional<PiQuantity> v;
    if (k && q) v = aubin_corrected(*q, *k, max_point_order(m.points));
    out.push_back(b.value(v).equality(round_or_open).done());
  }

  {
    Builder b(BoundTag::FiniteH1);
    b.need(ypos, ypos_text);
    std::optional<long long> h1;
    if (m.h1_order && !m.h1_order->infinite) h1 = m.h1_order->order;
    else if (!m.h1_order && m.pi1.kind == Pi1Descriptor::Kind::Trivial) h1 = 1;
    b.need(h1.has_value(), "|H1| finite");
    std::optional<PiQuantity> v;
    if (h1 && q) v = aubin_corrected(*q, *h1, max_point_order(m.points));
    out.push_back(b.value(v).equality(round_or_open).done());
  }

  {
    Builder b(BoundTag::LargeIndex);
    b.need(ypos, ypos_text);
    b.need(r.large_index == Tri::Yes, "pi1 or pi1_orb has subgroups of arbitrarily large finite index");
    bool b1_pos = m.b1 && *m.b1 > 0;
    out.push_back(b.value(scaled(Rational(2)))
                      .equality(r.manifold && b1_pos ? "quotient of S^3 x R" : "not characterized")
                      .done());
  }

  out.push_back(Builder(BoundTag::B2Plus)
                    .need(ypos, ypos_text)
                    .need(r.b2_plus == Tri::Yes, "b2+ > 0")
                    .value(scaled(Rational(4, 3)))
                    .equality(r.manifold ? "Kahler-Einstein" : "orbifold Kahler-Einstein")
                    .done());

  out.push_back(Builder(BoundTag::HarmonicWPlus)
                    .need(ypos, ypos_text)
                    .need(r.harmonic == Tri::Yes, "delta W+ = 0 with W+ != 0")
                    .value(scaled(Rational(4, 3)))
                    .equality("Einstein and Kahler, or a free anti-holomorphic isometric quotient of Kahler")
                    .done());

  out.push_back(Builder(BoundTag::ManifoldChi)
                    .need(ypos, ypos_text)
                    .need(r.manifold, "manifold")
                    .need(r.excluded_s4_rp4, "not diffeomorphic to S^4 or RP^4")
                    .value(pi2(Rational(2) * chi3tau))
                    .equality("CP^2 with Fubini-Study, or a quotient of S^1 x S^3 with a product metric")
                    .done());

  out.push_back(Builder(BoundTag::B2Minus)
                    .need(ypos, ypos_text)
                    .need(r.manifold, "manifold")
                    .need(r.b2_minus == Tri::Yes, "b2- > 0")
                    .value(pi2(Rational(8, 3) * chi3tau))
                    .equality("not characterized")
                    .done());

  out.push_back(Builder(BoundTag::YamabeZero)
                    .need(r.yamabe == YamabeSign::Zero, "Y = 0")
                    .value(scaled(Rational(2)))
                    .equality(r.manifold ? "Ricci-flat" : "Ricci-flat orbifold")
                    .done());

  {
    Builder b(BoundTag::Seshadri);
    b.need(r.manifold, "manifold");
    b.need(r.c2.has_value(), "s + c|W| >= 0 for some c > 0");
    std::optional<PiQuantity> v;
    if (r.c2) {
      Rational denom = Rational(1) + *r.c2 / Rational(24);
      v = pi2(Rational(2) * (Rational(2 * m.euler) / denom + Rational(3 * m.signature)));
    }
    out.push_back(b.value(v).equality("not characterized").done());
  }

  out.push_back(Builder(BoundTag::Itoh)
                    .need(r.manifold, "manifold")
                    .need(r.itoh == Tri::Yes, "s - 6 w^- >= 0")
                    .value(pi2(Rational(4, 3) * qm))
                    .equality("not characterized")
                    .done());

  return out;
}

BoundResult best_bound(const OrbifoldDescriptor& m, const Hypotheses& h) {
  auto all = enumerate_bounds(m, h);
  const BoundResult* best = nullptr;
  for (const auto& b : all) {
    if (!b.applies) continue;
    if (!best || *b.value > *best->value ||
        (*b.value == *best->value && tie_priority(b.tag) < tie_priority(best->tag))) {
      best = &b;
    }
  }
  return *best;  // the trivial bound always applies
}

ObstructionVerdict selfdual_psc_obstruction(const OrbifoldDescriptor& m, Tri harmonic_wplus) {
  ObstructionVerdict v;
  const Rational chi = chi_orb(m);
  const Rational tau = tau_orb(m);
  const Rational q1 = chi - Rational(3) * tau;
  const Rational q2 = Rational(2) * chi - Rational(3) * tau;
  auto witness = [](const std::string& lhs, const Rational& value) { return lhs + " = " + value.str() + " > 0"; };
  if (b2_plus_positive(m) == Tri::Yes && q1.sign() > 0) {
    v.reasons.push_back({"b2plus", witness("chi_orb - 3 tau_orb", q1)});
  }
  if (has_large_index_subgroups(m) == Tri::Yes && q2.sign() > 0) {
    v.reasons.push_back({"large-index", witness("2 chi_orb - 3 tau_orb", q2)});
  }
  if (harmonic_wplus == Tri::Yes && q1.sign() > 0) {
    v.reasons.push_back({"harmonic-wplus", witness("chi_orb - 3 tau_orb", q1)});
  }
  v.obstructed = !v.reasons.empty();
  return v;
}

namespace {

Int floor_div(const Rational& r) {
  Int n = r.numerator(), d = r.denominator();
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Smallest n >= 0 with base + step * n > 0.
long long first_positive(const Rational& base, long long step) {
  Int n0 = floor_div(-base / Rational(step)) + 1;
  if (n0 < 0) n0 = 0;
  return static_cast<long long>(n0);
}

}  // namespace

long long stabilization_threshold(const OrbifoldDescriptor& m) {
  const Rational chi = chi_orb(m);
  const Rational tau = tau_orb(m);
  std::optional<long long> best;
  if (b2_plus_positive(m) == Tri::Yes) best = first_positive(chi - Rational(3) * tau, 2);
  if (has_large_index_subgroups(m) == Tri::Yes) {
    long long n = first_positive(Rational(2) * chi - Rational(3) * tau, 4);
    best = best ? std::min(*best, n) : n;
  }
  if (!best) {
    throw DomainError(ErrorCode::HypothesisNotMet,
                      m.name + ": needs b2+ > 0 or a fundamental group with arbitrarily large finite-index subgroups");
  }
  return *best;
}

double wplus_from_yamabe(double y_lower) { return y_lower * y_lower / 24.0; }

}  // namespace weyl
