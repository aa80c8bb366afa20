#pragma once

#include <random>
#include <string>
#include <vector>

#include "residuate/residuate.hpp"

namespace residuate::oracle {

/// Seeded generators for random quantale values and matrices. Entries are
/// small rationals so that exact arithmetic stays cheap.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(int one_in = 2) { return uniform(1, one_in) == 1; }

  Rational rational(int lo, int hi, bool integral = false) {
    const int den = integral ? 1 : uniform(1, 4);
    return Rational(uniform(lo * den, hi * den), den);
  }

  Extended finite_for(QuantaleId q) {
    switch (q) {
      case QuantaleId::max_plus:
      case QuantaleId::min_plus: return rational(-6, 6);
      case QuantaleId::int_max_plus: return rational(-6, 6, true);
      case QuantaleId::lawvere_min_plus:
      case QuantaleId::min_max: return rational(0, 6);
      case QuantaleId::int_lawvere: return rational(0, 6, true);
      case QuantaleId::boolean2: break;
    }
    return Extended(0);
  }

  /// With `finite`, never returns an infinity.
  QuantaleValue value(QuantaleId q, bool finite = false) {
    if (q == QuantaleId::boolean2) return QuantaleValue::boolean(coin());
    if (!finite && coin(6)) return QuantaleValue::make(q, Extended::pos_inf());
    const bool has_neg_inf = q == QuantaleId::max_plus || q == QuantaleId::min_plus || q == QuantaleId::int_max_plus;
    if (!finite && has_neg_inf && coin(6)) return QuantaleValue::make(q, Extended::neg_inf());
    return QuantaleValue::make(q, finite_for(q));
  }

  QMatrix matrix(QuantaleId q, const IndexSet& rows, const IndexSet& cols, bool finite = false) {
    std::vector<QuantaleValue> e;
    for (std::size_t i = 0; i < rows.size() * cols.size(); ++i) e.push_back(value(q, finite));
    return QMatrix(q, rows, cols, std::move(e));
  }

  IndexSet labels(std::size_t n, const std::string& prefix) { return IndexSet::numbered(n, prefix); }

 private:
  std::mt19937 rng_;
};

}  // namespace residuate::oracle
