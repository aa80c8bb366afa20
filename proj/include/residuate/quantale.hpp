#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "residuate/error.hpp"
#include "residuate/extended.hpp"

namespace residuate {

/// The built-in quantales.
///
/// Every instance is commutative. The min-plus style instances (min_plus,
/// lawvere_min_plus, min_max, int_lawvere) are ordered by the reverse of the
/// numeric order, so their bottom element is +inf.
enum class QuantaleId {
  boolean2,
  max_plus,
  min_plus,
  lawvere_min_plus,
  min_max,
  int_max_plus,
  int_lawvere,
};

inline constexpr std::array<QuantaleId, 7> all_quantales = {
    QuantaleId::boolean2,     QuantaleId::max_plus, QuantaleId::min_plus,
    QuantaleId::lawvere_min_plus, QuantaleId::min_max, QuantaleId::int_max_plus,
    QuantaleId::int_lawvere,
};

inline std::string_view quantale_name(QuantaleId q) {
  switch (q) {
    case QuantaleId::boolean2: return "bool";
    case QuantaleId::max_plus: return "max-plus";
    case QuantaleId::min_plus: return "min-plus";
    case QuantaleId::lawvere_min_plus: return "lawvere";
    case QuantaleId::min_max: return "min-max";
    case QuantaleId::int_max_plus: return "int-max-plus";
    case QuantaleId::int_lawvere: return "int-lawvere";
  }
  return "?";
}

inline QuantaleId parse_quantale_name(std::string_view name) {
  for (QuantaleId q : all_quantales) {
    if (quantale_name(q) == name) return q;
  }
  throw Error(ErrorCode::unknown_quantale, "unknown quantale '" + std::string(name) + "'");
}

inline bool is_commutative(QuantaleId) { return true; }

/// True when the carrier is finite, so hulls can be enumerated.
inline bool is_enumerable(QuantaleId q) { return q == QuantaleId::boolean2; }

/// One scalar of a built-in quantale. Immutable value type.
class QuantaleValue {
 public:
  static QuantaleValue boolean(bool b) { return QuantaleValue(QuantaleId::boolean2, b); }

  /// Builds a numeric scalar, rejecting payloads outside the carrier.
  static QuantaleValue make(QuantaleId q, const Extended& x) {
    switch (q) {
      case QuantaleId::boolean2:
        throw Error(ErrorCode::invalid_value, "bool quantale takes true/false, not numbers");
      case QuantaleId::max_plus:
      case QuantaleId::min_plus:
        break;
      case QuantaleId::int_max_plus:
        if (!x.is_integer()) {
          throw Error(ErrorCode::invalid_value,
                      "int-max-plus value must be an integer or infinity: " + format_extended(x));
        }
        break;
      case QuantaleId::lawvere_min_plus:
      case QuantaleId::min_max:
      case QuantaleId::int_lawvere:
        if (x.is_neg_inf() || (x.is_finite() && x.value() < 0)) {
          throw Error(ErrorCode::invalid_value, std::string(quantale_name(q)) +
                                                    " values lie in [0, inf]: " + format_extended(x));
        }
        if (q == QuantaleId::int_lawvere && !x.is_integer()) {
          throw Error(ErrorCode::invalid_value,
                      "int-lawvere value must be an integer or inf: " + format_extended(x));
        }
        break;
    }
    return QuantaleValue(q, x);
  }

  QuantaleId quantale() const { return q_; }
  bool is_boolean() const { return q_ == QuantaleId::boolean2; }

  bool as_bool() const { return std::get<bool>(payload_); }
  const Extended& as_extended() const { return std::get<Extended>(payload_); }

  friend bool operator==(const QuantaleValue& a, const QuantaleValue& b) {
    return a.q_ == b.q_ && a.payload_ == b.payload_;
  }

 private:
  QuantaleValue(QuantaleId q, bool b) : q_(q), payload_(b) {}
  QuantaleValue(QuantaleId q, const Extended& x) : q_(q), payload_(x) {}

  QuantaleId q_;
  std::variant<bool, Extended> payload_;
};

inline std::string format_value(const QuantaleValue& v) {
  if (v.is_boolean()) return v.as_bool() ? "true" : "false";
  return format_extended(v.as_extended());
}

/// Parses a scalar literal for quantale `q`.
inline std::ostream& operator<<(std::ostream& os, const QuantaleValue& v) { return os << format_value(v); }

inline QuantaleValue parse_value(QuantaleId q, std::string_view text) {
  if (q == QuantaleId::boolean2) {
    if (text == "true" || text == "1" || text == "top") return QuantaleValue::boolean(true);
    if (text == "false" || text == "0" || text == "bot") return QuantaleValue::boolean(false);
    throw Error(ErrorCode::parse_error, "bool scalar must be true/false, got '" + std::string(text) + "'");
  }
  return QuantaleValue::make(q, parse_extended(text));
}

namespace ops {

// Each family below implements one operation table. The two additions
// (max-plus and min-plus) are deliberately separate routines: they disagree on
// -inf + inf.

struct MaxPlus {
  static Extended bottom() { return Extended::neg_inf(); }
  static Extended top() { return Extended::pos_inf(); }
  static bool leq(const Extended& a, const Extended& b) { return a <= b; }

  /// -inf annihilates, then +inf absorbs.
  static Extended mul(const Extended& y, const Extended& x) {
    if (y.is_neg_inf() || x.is_neg_inf()) return Extended::neg_inf();
    if (y.is_pos_inf() || x.is_pos_inf()) return Extended::pos_inf();
    return Extended(Rational(y.value() + x.value()));
  }

  /// z - x, the largest w (numerically) with w + x <= z.
  static Extended rext(const Extended& z, const Extended& x) {
    if (x.is_neg_inf() || z.is_pos_inf()) return Extended::pos_inf();
    if (x.is_pos_inf() || z.is_neg_inf()) return Extended::neg_inf();
    return Extended(Rational(z.value() - x.value()));
  }
};

struct MinPlus {
  static Extended bottom() { return Extended::pos_inf(); }
  static Extended top() { return Extended::neg_inf(); }
  static bool leq(const Extended& a, const Extended& b) { return a >= b; }

  /// +inf annihilates, then -inf absorbs.
  static Extended mul(const Extended& y, const Extended& x) {
    if (y.is_pos_inf() || x.is_pos_inf()) return Extended::pos_inf();
    if (y.is_neg_inf() || x.is_neg_inf()) return Extended::neg_inf();
    return Extended(Rational(y.value() + x.value()));
  }

  /// The numerically smallest w with w + x >= z.
  static Extended rext(const Extended& z, const Extended& x) {
    if (x.is_pos_inf() || z.is_neg_inf()) return Extended::neg_inf();
    if (x.is_neg_inf() || z.is_pos_inf()) return Extended::pos_inf();
    return Extended(Rational(z.value() - x.value()));
  }
};

/// ([0, inf], >=, 0, +) with truncated subtraction.
struct Lawvere {
  static Extended bottom() { return Extended::pos_inf(); }
  static Extended top() { return Extended(0); }
  static bool leq(const Extended& a, const Extended& b) { return a >= b; }

  static Extended mul(const Extended& y, const Extended& x) {
    if (y.is_pos_inf() || x.is_pos_inf()) return Extended::pos_inf();
    return Extended(Rational(y.value() + x.value()));
  }

  static Extended rext(const Extended& z, const Extended& x) {
    if (x.is_pos_inf()) return Extended(0);
    if (z.is_pos_inf()) return Extended::pos_inf();
    Rational d = z.value() - x.value();
    return d > 0 ? Extended(d) : Extended(0);
  }
};

/// ([0, inf], >=, 0, max).
struct MinMax {
  static Extended bottom() { return Extended::pos_inf(); }
  static Extended top() { return Extended(0); }
  static bool leq(const Extended& a, const Extended& b) { return a >= b; }

  static Extended mul(const Extended& y, const Extended& x) { return std::max(y, x); }

  // The tie x == z may go to either branch; both give 0 here.
  static Extended rext(const Extended& z, const Extended& x) {
    return x >= z ? Extended(0) : z;
  }
};

template <typename F>
decltype(auto) visit_numeric(QuantaleId q, F&& f) {
  switch (q) {
    case QuantaleId::max_plus:
    case QuantaleId::int_max_plus:
      return f(MaxPlus{});
    case QuantaleId::min_plus:
      return f(MinPlus{});
    case QuantaleId::lawvere_min_plus:
    case QuantaleId::int_lawvere:
      return f(Lawvere{});
    case QuantaleId::min_max:
      return f(MinMax{});
    case QuantaleId::boolean2:
      break;
  }
  throw Error(ErrorCode::instance_mismatch, "bool has no numeric operation table");
}

}  // namespace ops

inline void require_same(const QuantaleValue& a, const QuantaleValue& b) {
  if (a.quantale() != b.quantale()) {
    throw Error(ErrorCode::instance_mismatch, "mixed quantales: " + std::string(quantale_name(a.quantale())) +
                                                  " vs " + std::string(quantale_name(b.quantale())));
  }
}

inline QuantaleValue bottom(QuantaleId q) {
  if (q == QuantaleId::boolean2) return QuantaleValue::boolean(false);
  return ops::visit_numeric(q, [q](auto family) { return QuantaleValue::make(q, family.bottom()); });
}

inline QuantaleValue top(QuantaleId q) {
  if (q == QuantaleId::boolean2) return QuantaleValue::boolean(true);
  return ops::visit_numeric(q, [q](auto family) { return QuantaleValue::make(q, family.top()); });
}

/// The monoid unit I_Q.
inline QuantaleValue unit(QuantaleId q) {
  if (q == QuantaleId::boolean2) return QuantaleValue::boolean(true);
  return QuantaleValue::make(q, Extended(0));
}

/// a ⪯ b in the quantale order.
inline bool leq(const QuantaleValue& a, const QuantaleValue& b) {
  require_same(a, b);
  if (a.is_boolean()) return !a.as_bool() || b.as_bool();
  return ops::visit_numeric(a.quantale(), [&](auto family) {
    return family.leq(a.as_extended(), b.as_extended());
  });
}

/// y ∘ x.
inline QuantaleValue mul(const QuantaleValue& y, const QuantaleValue& x) {
  require_same(y, x);
  if (y.is_boolean()) return QuantaleValue::boolean(y.as_bool() && x.as_bool());
  return ops::visit_numeric(y.quantale(), [&](auto family) {
    return QuantaleValue::make(y.quantale(), family.mul(y.as_extended(), x.as_extended()));
  });
}

/// Right extension z ↙ x: the largest w with w ∘ x ⪯ z.
inline QuantaleValue rext(const QuantaleValue& z, const QuantaleValue& x) {
  require_same(z, x);
  if (z.is_boolean()) return QuantaleValue::boolean(!x.as_bool() || z.as_bool());
  return ops::visit_numeric(z.quantale(), [&](auto family) {
    return QuantaleValue::make(z.quantale(), family.rext(z.as_extended(), x.as_extended()));
  });
}

/// Right lifting y ↘ z: the largest w with y ∘ w ⪯ z. Every built-in
/// instance is commutative, so this is rext with the arguments swapped.
inline QuantaleValue rlift(const QuantaleValue& y, const QuantaleValue& z) { return rext(z, y); }

inline QuantaleValue join(const QuantaleValue& a, const QuantaleValue& b) { return leq(a, b) ? b : a; }
inline QuantaleValue meet(const QuantaleValue& a, const QuantaleValue& b) { return leq(a, b) ? a : b; }

/// Supremum of a finite multiset; the empty join is the bottom of `q`.
inline QuantaleValue join(QuantaleId q, std::span<const QuantaleValue> values) {
  QuantaleValue acc = bottom(q);
  for (const auto& v : values) {
    require_same(acc, v);
    acc = join(acc, v);
  }
  return acc;
}

/// Infimum of a finite multiset; the empty meet is the top of `q`.
inline QuantaleValue meet(QuantaleId q, std::span<const QuantaleValue> values) {
  QuantaleValue acc = top(q);
  for (const auto& v : values) {
    require_same(acc, v);
    acc = meet(acc, v);
  }
  return acc;
}

/// The full carrier for bool; a five-point sample with every infinity the
/// carrier admits otherwise.
inline std::vector<QuantaleValue> default_samples(QuantaleId q) {
  std::vector<std::string_view> literals;
  switch (q) {
    case QuantaleId::boolean2: literals = {"false", "true"}; break;
    case QuantaleId::max_plus:
    case QuantaleId::min_plus: literals = {"-inf", "-1", "0", "5/2", "inf"}; break;
    case QuantaleId::int_max_plus: literals = {"-inf", "-1", "0", "2", "inf"}; break;
    case QuantaleId::lawvere_min_plus: literals = {"0", "1/2", "1", "3", "inf"}; break;
    case QuantaleId::min_max: literals = {"0", "1", "7/2", "7", "inf"}; break;
    case QuantaleId::int_lawvere: literals = {"0", "1", "2", "5", "inf"}; break;
  }
  std::vector<QuantaleValue> out;
  out.reserve(literals.size());
  for (auto lit : literals) out.push_back(parse_value(q, lit));
  return out;
}

struct LawReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks associativity, units, distributivity over every finite sub-join
/// of the samples, and the three-way residuation adjointness on all sample
/// triples. For bool the full carrier is used regardless of `samples`.
inline LawReport check_quantale_laws(QuantaleId q, std::span<const QuantaleValue> samples) {
  LawReport report;
  std::vector<QuantaleValue> pts;
  if (q == QuantaleId::boolean2) {
    pts = default_samples(q);
  } else {
    for (const auto& s : samples) {
      if (s.quantale() != q) {
        report.violations.push_back("sample " + format_value(s) + " belongs to " +
                                    std::string(quantale_name(s.quantale())));
        return report;
      }
      pts.push_back(s);
    }
  }
  auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };
  const QuantaleValue e = unit(q);

  for (const auto& x : pts) {
    if (!(mul(e, x) == x)) fail("left unit fails at " + format_value(x));
    if (!(mul(x, e) == x)) fail("right unit fails at " + format_value(x));
  }
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      for (const auto& z : pts) {
        const std::string at = "(" + format_value(x) + ", " + format_value(y) + ", " + format_value(z) + ")";
        if (!(mul(mul(z, y), x) == mul(z, mul(y, x)))) fail("associativity fails at " + at);
        const bool left = leq(y, rext(z, x));
        const bool middle = leq(mul(y, x), z);
        const bool right = leq(x, rlift(y, z));
        if (left != middle || middle != right) fail("residuation adjointness fails at (y, x, z) = " + at);
      }
    }
  }
  // Distributivity over every subset of the samples, including the empty join.
  const std::size_t n = pts.size();
  if (n < 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<QuantaleValue> family;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) family.push_back(pts[i]);
      }
      const QuantaleValue sup = join(q, family);
      for (const auto& x : pts) {
        std::vector<QuantaleValue> right_products, left_products;
        for (const auto& y : family) {
          right_products.push_back(mul(y, x));
          left_products.push_back(mul(x, y));
        }
        if (!(mul(sup, x) == join(q, right_products))) {
          fail("right distributivity fails for subset mask " + std::to_string(mask) + " and x = " + format_value(x));
        }
        if (!(mul(x, sup) == join(q, left_products))) {
          fail("left distributivity fails for subset mask " + std::to_string(mask) + " and x = " + format_value(x));
        }
      }
    }
  }
  return report;
}

}  // namespace residuate
