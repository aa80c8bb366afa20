#pragma once

#include "residuate/isbell.hpp"

namespace residuate {

// Tropical polytopes over max-plus. The generators are the rows of Z : A ⇸ C
// (one row per generator, one column per coordinate), and a point is a row
// vector over A.
//
// A point X lies in the hull iff X = Y ↘ Z for some column Y, i.e.
//   X_a = min over c of (Z_{c,a} - Y_c),
// which is a tropical linear combination with coordinate-wise min as the
// tropical sum and coefficients -Y_c. The hull meet (coordinate-wise min of
// points) is that tropical sum. Points are not projectivised.

inline void require_max_plus(const QMatrix& z) {
  if (z.quantale() != QuantaleId::max_plus && z.quantale() != QuantaleId::int_max_plus) {
    throw Error(ErrorCode::instance_mismatch, "tropical polytopes live over max-plus");
  }
}

inline bool has_infinite_entries(const QMatrix& m) {
  for (const auto& v : m.entries()) {
    if (!v.as_extended().is_finite()) return true;
  }
  return false;
}

/// Membership of a finite point in the tropical polytope spanned by the rows
/// of `z`. Points with an infinite coordinate are outside the finite part and
/// give false.
inline bool tropical_membership(const QMatrix& z, const QMatrix& point) {
  require_max_plus(z);
  if (has_infinite_entries(point)) return false;
  return is_member(z, point);
}

/// The least hull point above `point`.
inline QMatrix tropical_closure(const QMatrix& z, const QMatrix& point) {
  require_max_plus(z);
  return closure_row(z, point);
}

/// (X, Y) ∈ Isb(Z) ↦ (Yᵀ, Xᵀ) ∈ Isb(Zᵀ). Involutive and order-reversing.
inline IsbellPair tropical_dual(const QMatrix& z, const IsbellPair& p) {
  require_max_plus(z);
  IsbellHull(z).require_member(p);
  return IsbellPair::make(transpose(z), transpose(p.y()), transpose(p.x()));
}

}  // namespace residuate
