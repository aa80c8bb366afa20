#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "residuate/error.hpp"

namespace residuate {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// A rational number extended with the two sentinels -inf and +inf.
///
/// Ordering is the numeric one (-inf < every finite value < +inf). No
/// arithmetic is defined here: the treatment of inf + (-inf) depends on the
/// quantale, so each instance carries its own addition and subtraction.
class Extended {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  Extended() = default;
  Extended(const Rational& value) : kind_(Kind::finite), value_(value) {}  // NOLINT
  Extended(long long value) : kind_(Kind::finite), value_(value) {}        // NOLINT
  Extended(long long num, long long den) : kind_(Kind::finite), value_(num, den) {}

  static Extended pos_inf() { return Extended(Kind::pos_inf); }
  static Extended neg_inf() { return Extended(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// Finite payload; zero for the sentinels.
  const Rational& value() const { return value_; }

  bool is_integer() const {
    return !is_finite() || boost::multiprecision::denominator(value_) == 1;
  }

  Extended operator-() const {
    switch (kind_) {
      case Kind::neg_inf: return pos_inf();
      case Kind::pos_inf: return neg_inf();
      case Kind::finite: break;
    }
    return Extended(Rational(-value_));
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }

  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Extended(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_{0};
};

/// Exact rational value of a finite double (every double is a dyadic rational).
inline Rational rational_from_double(double d) {
  if (!std::isfinite(d)) {
    throw Error(ErrorCode::invalid_value, "non-finite double has no rational value");
  }
  int exponent = 0;
  double mantissa = std::frexp(d, &exponent);
  // Scale the mantissa to a 53-bit integer.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{Integer(scaled)};
  if (exponent > 0) {
    r *= Rational(Integer(1) << exponent);
  } else if (exponent < 0) {
    r /= Rational(Integer(1) << -exponent);
  }
  return r;
}

inline Extended extended_from_double(double d) {
  if (std::isnan(d)) throw Error(ErrorCode::invalid_value, "NaN is not a scalar");
  if (std::isinf(d)) return d > 0 ? Extended::pos_inf() : Extended::neg_inf();
  return Extended(rational_from_double(d));
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

/// Base-10 digits to an integer. Leading zeros are dropped first because the
/// multiprecision string constructor reads them as an octal prefix.
inline Integer decimal_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer{std::string(digits.substr(first))};
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::parse_error, "malformed number literal '" + std::string(whole) + "'");
  }
  Integer v = decimal_digits(s);
  return negative ? Integer(-v) : v;
}

}  // namespace detail

/// Parses "3", "-1/2", "0.75", "1.5e-3", "inf", "+inf", "-inf" exactly.
inline Extended parse_extended(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return Extended::pos_inf();
  if (text == "-inf" || text == "-infinity") return Extended::neg_inf();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text)) {
      throw Error(ErrorCode::parse_error, "malformed rational literal '" + std::string(text) + "'");
    }
    Integer den = detail::decimal_digits(den_text);
    if (den == 0) {
      throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    return Extended(Rational(num, den));
  }

  // Decimal with optional fraction and exponent, read exactly.
  std::string_view mantissa = text;
  long long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    Integer parsed = detail::parse_integer(exp_text, text);
    if (parsed > 4096 || parsed < -4096) {
      throw Error(ErrorCode::parse_error, "exponent out of range in '" + std::string(text) + "'");
    }
    exponent = parsed.convert_to<long long>();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part))) {
      throw Error(ErrorCode::parse_error, "malformed decimal literal '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long long>(frac_part.size());
  } else {
    if (!detail::all_digits(mantissa)) {
      throw Error(ErrorCode::parse_error, "malformed number literal '" + std::string(text) + "'");
    }
    digits = std::string(mantissa);
  }
  Rational r{detail::decimal_digits(digits)};
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent > 0) r *= Rational(scale);
  if (exponent < 0) r /= Rational(scale);
  if (negative) r = -r;
  return Extended(r);
}

/// Canonical text: lowest-terms "p" or "p/q", or "inf" / "-inf".
inline std::string format_extended(const Extended& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  const Rational& r = x.value();
  std::string out = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1) {
    out += "/";
    out += boost::multiprecision::denominator(r).str();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Extended& x) { return os << format_extended(x); }

/// Lossy decimal rendering for human reading.
inline std::string format_extended_decimal(const Extended& x) {
  if (!x.is_finite()) return format_extended(x);
  std::ostringstream os;
  os << std::setprecision(12) << x.value().convert_to<double>();
  return os.str();
}

}  // namespace residuate
