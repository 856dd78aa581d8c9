#include "weyl/space_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weyl {

GroupDescriptor GroupDescriptor::ade_e(int which) {
  switch (which) {
    case 6: return {GroupKind::ADE_E6, 6, +1};
    case 7: return {GroupKind::ADE_E7, 7, +1};
    case 8: return {GroupKind::ADE_E8, 8, +1};
    default: throw std::invalid_argument("E-type tag must be 6, 7 or 8");
  }
}

long long GroupDescriptor::order() const {
  switch (kind) {
    case GroupKind::Trivial: return 1;
    case GroupKind::AntipodalZ2: return 2;
    case GroupKind::CyclicSU2:
    case GroupKind::CyclicOther:
    case GroupKind::ADE_A: return n;
    case GroupKind::ADE_D: return 4 * n;
    case GroupKind::ADE_E6: return 24;
    case GroupKind::ADE_E7: return 48;
    case GroupKind::ADE_E8: return 120;
  }
  return 1;
}

std::string GroupDescriptor::name() const {
  std::string base;
  switch (kind) {
    case GroupKind::Trivial: base = "trivial"; break;
    case GroupKind::AntipodalZ2: base = "Z2-antipodal"; break;
    case GroupKind::CyclicSU2: base = "Zn-su2(" + std::to_string(n) + ")"; break;
    case GroupKind::CyclicOther: base = "Zn(" + std::to_string(n) + ")"; break;
    case GroupKind::ADE_A: base = "A(" + std::to_string(n) + ")"; break;
    case GroupKind::ADE_D: base = "D(" + std::to_string(n) + ")"; break;
    case GroupKind::ADE_E6: base = "E6"; break;
    case GroupKind::ADE_E7: base = "E7"; break;
    case GroupKind::ADE_E8: base = "E8"; break;
  }
  return orientation_sign < 0 ? "~" + base : base;
}

namespace {

long long parse_param(std::string_view text, std::string_view prefix) {
  // text looks like prefix + "(" + digits + ")"
  std::string_view rest = text.substr(prefix.size());
  if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
    throw std::invalid_argument("expected " + std::string(prefix) + "(n): " + std::string(text));
  }
  std::string digits(rest.substr(1, rest.size() - 2));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("group parameter must be a positive integer: " + std::string(text));
  }
  long long v = std::stoll(digits);
  if (v < 1) throw std::invalid_argument("group parameter must be positive: " + std::string(text));
  return v;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  int sign = +1;
  if (!text.empty() && text.front() == '~') {
    sign = -1;
    text.remove_prefix(1);
  }
  GroupDescriptor g;
  if (text == "trivial") {
    g = trivial();
  } else if (text == "Z2-antipodal") {
    g = antipodal();
  } else if (starts_with(text, "Zn-su2")) {
    g = cyclic_su2(parse_param(text, "Zn-su2"));
  } else if (starts_with(text, "Zn")) {
    g = cyclic_other(parse_param(text, "Zn"));
  } else if (starts_with(text, "A")) {
    g = ade_a(parse_param(text, "A"));
  } else if (starts_with(text, "D")) {
    g = ade_d(parse_param(text, "D"));
    if (g.n < 2) throw std::invalid_argument("binary dihedral D(n) needs n >= 2");
  } else if (text == "E6") {
    g = ade_e(6);
  } else if (text == "E7") {
    g = ade_e(7);
  } else if (text == "E8") {
    g = ade_e(8);
  } else {
    throw std::invalid_argument("unknown group name: " + std::string(text));
  }
  g.orientation_sign = sign;
  return g;
}

Rational eta_cyclic(long long n) {
  if (n < 1) throw std::invalid_argument("eta_cyclic needs n >= 1");
  return Rational(-static_cast<Int>(n - 1) * (n - 2), static_cast<Int>(3) * n);
}

double eta_cotangent_oracle(long long n) {
  if (n < 2) throw std::invalid_argument("eta_cotangent_oracle needs n >= 2");
  double sum = 0.0;
  for (long long k = 1; k < n; ++k) {
    double t = std::tan(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
    sum += 1.0 / (t * t);
  }
  return -sum / static_cast<double>(n);
}

bool has_catalog_eta(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::Trivial:
    case GroupKind::AntipodalZ2:
    case GroupKind::CyclicSU2:
    case GroupKind::ADE_A: return true;
    default: return false;
  }
}

EtaValue eta_for_group(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::Trivial:
    case GroupKind::AntipodalZ2: return {Rational(0), g.orientation_sign};
    case GroupKind::CyclicSU2:
    case GroupKind::ADE_A: return {eta_cyclic(g.n), g.orientation_sign};
    case GroupKind::CyclicOther:
      throw DomainError(ErrorCode::NotInCatalog,
                        "eta of " + g.name() + " depends on the action, which the descriptor does not record");
    default:
      throw DomainError(ErrorCode::NotInCatalog, "no catalog eta invariant for " + g.name());
  }
}

long long resolution_euler(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::Trivial: return 1;
    case GroupKind::AntipodalZ2: return 2;
    case GroupKind::CyclicSU2:
    case GroupKind::ADE_A: return g.n;
    case GroupKind::ADE_D: return g.n + 3;  // D_{n+2}
    case GroupKind::ADE_E6: return 7;
    case GroupKind::ADE_E7: return 8;
    case GroupKind::ADE_E8: return 9;
    case GroupKind::CyclicOther: break;
  }
  throw DomainError(ErrorCode::NotInCatalog, "resolution of " + g.name() + " is not an ADE resolution");
}

}  // namespace weyl
