#include "weyl/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numbers>
#include <sstream>

namespace weyl {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::MissingInvariant: return "MissingInvariant";
    case ErrorCode::InconsistentHypotheses: return "InconsistentHypotheses";
    case ErrorCode::InfiniteUpper: return "InfiniteUpper";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
  }
  return "UnknownError";
}

namespace {

constexpr Int kIntMin = static_cast<Int>(static_cast<unsigned __int128>(1) << 127);

[[noreturn]] void overflow(const char* op) {
  throw DomainError(ErrorCode::Overflow, std::string("128-bit overflow in rational ") + op);
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

Int checked_neg(Int a) {
  if (a == kIntMin) overflow("negation");
  return -a;
}

Int abs_int(Int a) { return a < 0 ? checked_neg(a) : a; }

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational::Rational(Int n, Int d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  Int g = gcd_int(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const { return Rational(checked_neg(num_), den_); }

Rational Rational::operator+(const Rational& rhs) const {
  Int g = gcd_int(den_, rhs.den_);
  Int lhs_scale = rhs.den_ / g;
  Int rhs_scale = den_ / g;
  Int n = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
  Int d = checked_mul(den_, lhs_scale);
  return Rational(n, d);
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
  // Cross-reduce first so intermediate products stay as small as possible.
  Int g1 = gcd_int(num_, rhs.den_);
  Int g2 = gcd_int(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  Int n = checked_mul(num_ / g1, rhs.num_ / g2);
  Int d = checked_mul(den_ / g2, rhs.den_ / g1);
  return Rational(n, d);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::operator/(const Rational& rhs) const { return *this * rhs.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  // Sign test avoids the cross-multiplication in the common mixed-sign case.
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  Rational diff = a - b;
  return diff.sign() <=> 0;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  Int v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("invalid digit in integer: " + std::string(text));
    }
    v = checked_add(checked_mul(v, 10), c - '0');
  }
  return neg ? -v : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  Int d = parse_int(trim(text.substr(slash + 1)));
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(trim(text.substr(0, slash))), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

double PiQuantity::to_double() const {
  return coef_.to_double() * (std::numbers::pi * std::numbers::pi);
}

std::string PiQuantity::str() const { return coef_.str() + "·π^2"; }

PiQuantity PiQuantity::parse(std::string_view text) {
  text = trim(text);
  static constexpr std::string_view kSuffixes[] = {"·π^2", "*pi^2", "·π²", "pi^2"};
  for (auto suffix : kSuffixes) {
    if (text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix) {
      auto coef = trim(text.substr(0, text.size() - suffix.size()));
      if (coef.empty()) return PiQuantity(Rational(1));
      return PiQuantity(Rational::parse(coef));
    }
  }
  if (text == "0") return PiQuantity();
  throw std::invalid_argument("not a multiple of pi^2: " + std::string(text));
}

std::ostream& operator<<(std::ostream& os, const PiQuantity& q) { return os << q.str(); }

Ordering compare(const PiQuantity& a, const PiQuantity& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

PiInterval::PiInterval(PiQuantity lower, std::optional<PiQuantity> upper) : lower_(lower), upper_(upper) {
  if (upper_ && *upper_ < lower_) {
    throw std::invalid_argument("interval with upper < lower: " + lower.str() + " > " + upper_->str());
  }
}

std::string PiInterval::str() const {
  if (is_exact()) return lower_.str();
  if (!upper_) return "[" + lower_.str() + ", +inf)";
  return "[" + lower_.str() + ", " + upper_->str() + "]";
}

}  // namespace weyl
