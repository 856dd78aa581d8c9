#include "weyl/orbifold.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

Pi1Descriptor Pi1Descriptor::finite(long long k) {
  if (k < 1) throw std::invalid_argument("finite group order must be >= 1");
  if (k == 1) return trivial();
  return {Kind::FiniteOfOrder, k, {}};
}

Pi1Descriptor Pi1Descriptor::free_product(std::vector<long long> orders) {
  orders.erase(std::remove(orders.begin(), orders.end(), 1LL), orders.end());
  for (long long o : orders) {
    if (o < 1) throw std::invalid_argument("free factor order must be >= 1");
  }
  if (orders.empty()) return trivial();
  if (orders.size() == 1) return finite(orders.front());
  return {Kind::FreeProductOfFinite, 1, std::move(orders)};
}

std::optional<long long> Pi1Descriptor::finite_order() const {
  if (kind == Kind::Trivial) return 1;
  if (kind == Kind::FiniteOfOrder) return order;
  return std::nullopt;
}

std::string Pi1Descriptor::str() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::FiniteOfOrder: return "finite(" + std::to_string(order) + ")";
    case Kind::FreeProductOfFinite: {
      std::string s = "free(";
      for (std::size_t i = 0; i < factor_orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(factor_orders[i]);
      }
      return s + ")";
    }
    case Kind::InfiniteResiduallyFinite: return "infinite-rf";
    case Kind::PositiveB1: return "b1-positive";
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::vector<long long> parse_int_list(std::string_view body, std::string_view whole) {
  std::vector<long long> out;
  std::string item;
  std::stringstream ss{std::string(body)};
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in " + std::string(whole));
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("expected positive integers in " + std::string(whole));
    }
    out.push_back(std::stoll(item));
  }
  return out;
}

}  // namespace

Pi1Descriptor Pi1Descriptor::parse(std::string_view text) {
  if (text == "trivial") return trivial();
  if (text == "infinite-rf") return infinite_residually_finite();
  if (text == "b1-positive") return positive_b1();
  if (text == "unknown") return unknown();
  auto open = text.find('(');
  if (open != std::string_view::npos && text.back() == ')') {
    auto head = text.substr(0, open);
    auto body = text.substr(open + 1, text.size() - open - 2);
    auto values = parse_int_list(body, text);
    if (head == "finite" && values.size() == 1) return finite(values.front());
    if (head == "free" && !values.empty()) return free_product(values);
  }
  throw std::invalid_argument("unknown fundamental group descriptor: " + std::string(text));
}

Pi1Descriptor free_product(const Pi1Descriptor& a, const Pi1Descriptor& b) {
  using K = Pi1Descriptor::Kind;
  if (a.kind == K::Trivial) return b;
  if (b.kind == K::Trivial) return a;
  // b1 is additive under free products.
  if (a.kind == K::PositiveB1 || b.kind == K::PositiveB1) return Pi1Descriptor::positive_b1();
  if (a.kind == K::Unknown || b.kind == K::Unknown) return Pi1Descriptor::unknown();
  if (a.kind == K::InfiniteResiduallyFinite || b.kind == K::InfiniteResiduallyFinite) {
    return Pi1Descriptor::infinite_residually_finite();
  }
  auto factors = [](const Pi1Descriptor& p) {
    if (p.kind == K::FiniteOfOrder) return std::vector<long long>{p.order};
    return p.factor_orders;
  };
  auto fa = factors(a);
  auto fb = factors(b);
  fa.insert(fa.end(), fb.begin(), fb.end());
  return Pi1Descriptor::free_product(std::move(fa));
}

Tri has_large_index_subgroups(const Pi1Descriptor& p) {
  using K = Pi1Descriptor::Kind;
  switch (p.kind) {
    case K::Trivial:
    case K::FiniteOfOrder: return Tri::No;
    case K::PositiveB1:
    case K::InfiniteResiduallyFinite: return Tri::Yes;
    case K::FreeProductOfFinite: return p.factor_orders.size() >= 2 ? Tri::Yes : Tri::No;
    case K::Unknown: return Tri::Unknown;
  }
  return Tri::Unknown;
}

Tri has_large_index_subgroups(const OrbifoldDescriptor& m) {
  Tri a = has_large_index_subgroups(m.pi1);
  Tri b = has_large_index_subgroups(m.pi1_orb);
  if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
  if (a == Tri::No && b == Tri::No) return Tri::No;
  return Tri::Unknown;
}

bool OrbifoldDescriptor::has_uncatalogued_points() const {
  return std::any_of(points.begin(), points.end(), [](const GroupDescriptor& g) { return !has_catalog_eta(g); });
}

void validate(const OrbifoldDescriptor& m) {
  for (const auto& g : m.points) {
    if (g.order() < 2) {
      throw DomainError(ErrorCode::InvalidDescriptor, m.name + ": orbifold point " + g.name() + " has order < 2");
    }
  }
  auto nonneg = [&](const std::optional<long long>& v, const char* what) {
    if (v && *v < 0) throw DomainError(ErrorCode::InvalidDescriptor, m.name + ": negative " + what);
  };
  nonneg(m.b1, "b1");
  nonneg(m.b2_plus, "b2+");
  nonneg(m.b2_minus, "b2-");
  if (m.h1_order && !m.h1_order->infinite && m.h1_order->order < 1) {
    throw DomainError(ErrorCode::InvalidDescriptor, m.name + ": h1_order must be >= 1");
  }
  if (m.b2_plus && m.b2_minus && *m.b2_plus - *m.b2_minus != m.signature) {
    throw DomainError(ErrorCode::InvalidDescriptor,
                      m.name + ": signature " + std::to_string(m.signature) + " != b2+ - b2-");
  }
  if (m.b1 && m.b2_plus && m.b2_minus) {
    long long expected = 2 - 2 * *m.b1 + *m.b2_plus + *m.b2_minus;
    if (m.euler != expected) {
      throw DomainError(ErrorCode::InvalidDescriptor, m.name + ": euler " + std::to_string(m.euler) +
                                                          " != 2 - 2 b1 + b2+ + b2- = " + std::to_string(expected));
    }
  }
  if (m.b1 && *m.b1 > 0 && m.pi1.finite_order()) {
    throw DomainError(ErrorCode::InvalidDescriptor, m.name + ": b1 > 0 with finite pi1");
  }
  for (const auto& c : m.cover_data) {
    if (c.degree < 1) throw DomainError(ErrorCode::InvalidDescriptor, m.name + ": cover degree must be >= 1");
  }
}

Rational chi_orb(const OrbifoldDescriptor& m) {
  Rational chi(m.euler);
  for (const auto& g : m.points) {
    chi -= Rational(1) - Rational(1, g.order());
  }
  return chi;
}

Rational tau_orb(const OrbifoldDescriptor& m) {
  Rational tau(m.signature);
  bool needs_extra = false;
  for (const auto& g : m.points) {
    if (has_catalog_eta(g)) {
      tau += eta_for_group(g).signed_value();
    } else {
      needs_extra = true;
    }
  }
  if (needs_extra) {
    if (!m.eta_extra) {
      for (const auto& g : m.points) {
        if (!has_catalog_eta(g)) eta_for_group(g);  // throws NotInCatalog with the group name
      }
    }
  }
  if (m.eta_extra) tau += *m.eta_extra;
  return tau;
}

namespace {

std::optional<long long> add_opt(const std::optional<long long>& a, const std::optional<long long>& b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

std::optional<H1Order> h1_product(const std::optional<H1Order>& a, const std::optional<H1Order>& b) {
  if ((a && a->infinite) || (b && b->infinite)) return H1Order::infinity();
  if (a && b) {
    long long r;
    if (__builtin_mul_overflow(a->order, b->order, &r)) {
      throw DomainError(ErrorCode::Overflow, "h1 order product overflows");
    }
    return H1Order::finite(r);
  }
  return std::nullopt;
}

std::string strip_reversal(const std::string& name, bool& was_reversed) {
  was_reversed = name.size() > 5 && name.rfind("rev(", 0) == 0 && name.back() == ')';
  return was_reversed ? name.substr(4, name.size() - 5) : name;
}

// eta_extra of a sum is defined only when each side accounts for all of its
// uncatalogued points.
std::optional<Rational> combine_eta_extra(const OrbifoldDescriptor& a, const OrbifoldDescriptor& b) {
  bool a_ok = a.eta_extra || !a.has_uncatalogued_points();
  bool b_ok = b.eta_extra || !b.has_uncatalogued_points();
  if (!a_ok || !b_ok) return std::nullopt;
  if (!a.eta_extra && !b.eta_extra) return std::nullopt;
  return a.eta_extra.value_or(Rational(0)) + b.eta_extra.value_or(Rational(0));
}

}  // namespace

OrbifoldDescriptor connected_sum(const OrbifoldDescriptor& a, const OrbifoldDescriptor& b) {
  OrbifoldDescriptor s;
  s.name = a.name + " # " + b.name;
  s.euler = a.euler + b.euler - 2;
  s.signature = a.signature + b.signature;
  s.points = a.points;
  s.points.insert(s.points.end(), b.points.begin(), b.points.end());
  s.b1 = add_opt(a.b1, b.b1);
  s.b2_plus = add_opt(a.b2_plus, b.b2_plus);
  s.b2_minus = add_opt(a.b2_minus, b.b2_minus);
  s.h1_order = h1_product(a.h1_order, b.h1_order);
  s.pi1 = free_product(a.pi1, b.pi1);
  s.pi1_orb = free_product(a.pi1_orb, b.pi1_orb);
  s.eta_extra = combine_eta_extra(a, b);
  // Covers of a sum are not determined by covers of the summands.
  return s;
}

OrbifoldDescriptor connected_sum(const std::vector<OrbifoldDescriptor>& parts) {
  if (parts.empty()) throw std::invalid_argument("connected sum of an empty list");
  OrbifoldDescriptor acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = connected_sum(acc, parts[i]);
  return acc;
}

OrbifoldDescriptor reverse_orientation(const OrbifoldDescriptor& m) {
  OrbifoldDescriptor r = m;
  bool was_reversed = false;
  std::string base = strip_reversal(m.name, was_reversed);
  r.name = was_reversed ? base : "rev(" + m.name + ")";
  r.signature = -m.signature;
  std::swap(r.b2_plus, r.b2_minus);
  for (auto& g : r.points) g = g.reversed();
  if (r.eta_extra) r.eta_extra = -*r.eta_extra;
  for (auto& c : r.cover_data) {
    c.signature = -c.signature;
    for (auto& g : c.points) g = g.reversed();
  }
  return r;
}

std::pair<Rational, Rational> scale_by_cover(const OrbifoldDescriptor& m, long long k) {
  if (k < 1) throw std::invalid_argument("cover degree must be >= 1");
  Rational kk(k);
  return {kk * chi_orb(m), kk * tau_orb(m)};
}

std::vector<CoverCheck> check_cover_data(const OrbifoldDescriptor& m) {
  std::vector<CoverCheck> out;
  for (const auto& c : m.cover_data) {
    CoverCheck check;
    check.degree = c.degree;
    auto [chi, tau] = scale_by_cover(m, c.degree);
    check.expected_chi_orb = chi;
    check.expected_tau_orb = tau;
    OrbifoldDescriptor cover;
    cover.euler = c.euler;
    cover.signature = c.signature;
    cover.points = c.points;
    check.cover_chi_orb = chi_orb(cover);
    if (!cover.has_uncatalogued_points()) check.cover_tau_orb = tau_orb(cover);
    check.consistent = check.cover_chi_orb == chi && (!check.cover_tau_orb || *check.cover_tau_orb == tau);
    out.push_back(check);
  }
  return out;
}

std::vector<GroupDescriptor> sorted_points(const OrbifoldDescriptor& m) {
  auto p = m.points;
  std::sort(p.begin(), p.end());
  return p;
}

long long max_point_order(const std::vector<GroupDescriptor>& points) {
  long long best = 1;
  for (const auto& g : points) best = std::max(best, g.order());
  return best;
}

Tri b2_plus_positive(const OrbifoldDescriptor& m) {
  if (!m.b2_plus) return Tri::Unknown;
  return *m.b2_plus > 0 ? Tri::Yes : Tri::No;
}

Tri b2_minus_positive(const OrbifoldDescriptor& m) {
  if (!m.b2_minus) return Tri::Unknown;
  return *m.b2_minus > 0 ? Tri::Yes : Tri::No;
}

}  // namespace weyl
