#pragma once

/// Exact rationals and rational multiples of pi^2.
///
/// Integers are signed 128-bit with every operation checked; an overflow
/// throws DomainError(Overflow) instead of wrapping. Values are always kept
/// in lowest terms with a positive denominator, so equality is structural.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "weyl/errors.hpp"

namespace weyl {

using Int = __int128;

std::string to_string(Int v);

class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);

  static Rational from_int128(Int n) { return Rational(n, 1); }

  Int numerator() const noexcept { return num_; }
  Int denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  double to_double() const;

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;
  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  Rational reciprocal() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when integral.
  std::string str() const;
  /// Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// coefficient * pi^2.
class PiQuantity {
 public:
  constexpr PiQuantity() = default;
  explicit PiQuantity(Rational coefficient) : coef_(coefficient) {}

  const Rational& coefficient() const noexcept { return coef_; }
  double to_double() const;

  PiQuantity operator-() const { return PiQuantity(-coef_); }
  PiQuantity operator+(const PiQuantity& rhs) const { return PiQuantity(coef_ + rhs.coef_); }
  PiQuantity operator-(const PiQuantity& rhs) const { return PiQuantity(coef_ - rhs.coef_); }
  PiQuantity& operator+=(const PiQuantity& rhs) { return *this = *this + rhs; }
  PiQuantity& operator-=(const PiQuantity& rhs) { return *this = *this - rhs; }
  friend PiQuantity operator*(const Rational& k, const PiQuantity& q) { return PiQuantity(k * q.coef_); }
  friend PiQuantity operator*(const PiQuantity& q, const Rational& k) { return PiQuantity(k * q.coef_); }

  friend bool operator==(const PiQuantity&, const PiQuantity&) = default;
  friend std::strong_ordering operator<=>(const PiQuantity& a, const PiQuantity& b) {
    return a.coef_ <=> b.coef_;
  }

  /// "p/q·π^2" (U+00B7 middle dot), "12·π^2", "0·π^2".
  std::string str() const;
  /// Accepts the rendered form, plus ASCII "p/q*pi^2" and a bare "0".
  static PiQuantity parse(std::string_view text);

 private:
  Rational coef_;
};

std::ostream& operator<<(std::ostream& os, const PiQuantity& q);

/// k * pi^2 shorthand.
inline PiQuantity pi2(Rational k) { return PiQuantity(k); }

enum class Ordering { Less, Equal, Greater };
Ordering compare(const PiQuantity& a, const PiQuantity& b);
std::string_view ordering_name(Ordering o);

/// Closed interval [lower, upper] with upper possibly +infinity.
class PiInterval {
 public:
  PiInterval() = default;
  PiInterval(PiQuantity lower, std::optional<PiQuantity> upper);
  static PiInterval exactly(PiQuantity v) { return PiInterval(v, v); }
  static PiInterval at_least(PiQuantity v) { return PiInterval(v, std::nullopt); }

  const PiQuantity& lower() const noexcept { return lower_; }
  /// nullopt encodes +infinity.
  const std::optional<PiQuantity>& upper() const noexcept { return upper_; }
  bool is_exact() const noexcept { return upper_ && *upper_ == lower_; }
  bool upper_finite() const noexcept { return upper_.has_value(); }

  friend bool operator==(const PiInterval&, const PiInterval&) = default;

  /// "[a, b]" or "[a, +inf)"; an exact value renders as the bare value.
  std::string str() const;

 private:
  PiQuantity lower_;
  std::optional<PiQuantity> upper_;
};

}  // namespace weyl
