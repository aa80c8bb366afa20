#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "residuate/qmatrix.hpp"

namespace residuate {

inline constexpr unsigned kDefaultEnumerationGuard = 20;

namespace detail {

inline void require_row_for(const QMatrix& z, const QMatrix& x) {
  require_quantale(z, x);
  if (!x.is_row_vector() || !x.cols().same_set(z.cols())) {
    throw Error(ErrorCode::shape_mismatch, "expected a row vector indexed by the columns of the ambient matrix");
  }
}

inline void require_col_for(const QMatrix& z, const QMatrix& y) {
  require_quantale(z, y);
  if (!y.is_column_vector() || !y.rows().same_set(z.rows())) {
    throw Error(ErrorCode::shape_mismatch, "expected a column vector indexed by the rows of the ambient matrix");
  }
}

}  // namespace detail

/// X ↦ (Z ↙ X) ↘ Z on row vectors X : A ⇸ 1, for Z : A ⇸ C.
/// Extensive, monotone and idempotent; its fixed points are the hull.
inline QMatrix closure_row(const QMatrix& z, const QMatrix& x) {
  detail::require_row_for(z, x);
  return right_lifting(right_extension(z, x.with_unit_row()), z);
}

/// Y ↦ Z ↙ (Y ↘ Z) on column vectors Y : 1 ⇸ C.
inline QMatrix closure_col(const QMatrix& z, const QMatrix& y) {
  detail::require_col_for(z, y);
  return right_extension(z, right_lifting(y.with_unit_col(), z));
}

inline bool is_member(const QMatrix& z, const QMatrix& x) {
  return closure_row(z, x) == x.with_unit_row();
}

inline bool is_member_col(const QMatrix& z, const QMatrix& y) {
  return closure_col(z, y) == y.with_unit_col();
}

/// A fixed point (X, Y) of the Isbell adjunction of some ambient Z:
/// Y = Z ↙ X and X = Y ↘ Z. Only the ambient's shape is retained.
class IsbellPair {
 public:
  /// Validates both fixed-point equations against `z`.
  static IsbellPair make(const QMatrix& z, const QMatrix& x, const QMatrix& y) {
    detail::require_row_for(z, x);
    detail::require_col_for(z, y);
    QMatrix xr = x.with_unit_row();
    QMatrix yc = y.with_unit_col();
    if (!(right_extension(z, xr) == yc) || !(right_lifting(yc, z) == xr)) {
      throw Error(ErrorCode::not_a_member, "(X, Y) is not a fixed pair of the Isbell adjunction");
    }
    return IsbellPair(std::move(xr), std::move(yc));
  }

  /// The pair whose first coordinate is the row vector `x`, which must
  /// already be closed.
  static IsbellPair from_row(const QMatrix& z, const QMatrix& x) {
    detail::require_row_for(z, x);
    QMatrix y = right_extension(z, x.with_unit_row());
    QMatrix closed = right_lifting(y, z);
    if (!(closed == x.with_unit_row())) throw Error(ErrorCode::not_a_member, "row vector is not in the hull");
    return IsbellPair(std::move(closed), std::move(y));
  }

  static IsbellPair from_col(const QMatrix& z, const QMatrix& y) {
    detail::require_col_for(z, y);
    QMatrix x = right_lifting(y.with_unit_col(), z);
    QMatrix closed = right_extension(z, x);
    if (!(closed == y.with_unit_col())) throw Error(ErrorCode::not_a_member, "column vector is not in the hull");
    return IsbellPair(std::move(x), std::move(closed));
  }

  /// The least hull element whose first coordinate lies above `x`.
  static IsbellPair closing_row(const QMatrix& z, const QMatrix& x) {
    detail::require_row_for(z, x);
    QMatrix y = right_extension(z, x.with_unit_row());
    QMatrix closed = right_lifting(y, z);
    return IsbellPair(std::move(closed), std::move(y));
  }

  /// The greatest hull element whose second coordinate lies above `y`.
  static IsbellPair closing_col(const QMatrix& z, const QMatrix& y) {
    detail::require_col_for(z, y);
    QMatrix x = right_lifting(y.with_unit_col(), z);
    QMatrix closed = right_extension(z, x);
    return IsbellPair(std::move(x), std::move(closed));
  }

  const QMatrix& x() const { return x_; }
  const QMatrix& y() const { return y_; }
  QuantaleId quantale() const { return x_.quantale(); }

  friend bool operator==(const IsbellPair& a, const IsbellPair& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  IsbellPair(QMatrix x, QMatrix y) : x_(std::move(x)), y_(std::move(y)) {}

  QMatrix x_;
  QMatrix y_;
};

/// Hull order: (X, Y) ⪯ (X', Y') iff X ⪯ X' (equivalently Y' ⪯ Y).
inline bool hull_leq(const IsbellPair& p, const IsbellPair& q) { return mat_leq(p.x(), q.x()); }

/// The Isbell hull of an ambient matrix. Hulls over finite carriers may hold
/// an explicit element list (ordered along the hull order, bottom first);
/// otherwise the hull answers membership and closure queries only.
class IsbellHull {
 public:
  explicit IsbellHull(QMatrix ambient) : ambient_(std::move(ambient)) {}
  IsbellHull(QMatrix ambient, std::vector<IsbellPair> elements)
      : ambient_(std::move(ambient)), elements_(std::move(elements)) {}

  const QMatrix& ambient() const { return ambient_; }
  bool is_explicit() const { return elements_.has_value(); }
  const std::vector<IsbellPair>& elements() const {
    if (!elements_) throw Error(ErrorCode::non_enumerable, "hull is intensional; it has no element list");
    return *elements_;
  }

  bool contains_row(const QMatrix& x) const { return is_member(ambient_, x); }

  bool contains(const IsbellPair& p) const {
    if (p.quantale() != ambient_.quantale() || !p.x().cols().same_set(ambient_.cols()) ||
        !p.y().rows().same_set(ambient_.rows())) {
      return false;
    }
    return right_extension(ambient_, p.x()) == p.y() && right_lifting(p.y(), ambient_) == p.x();
  }

  IsbellPair closure(const QMatrix& x) const { return IsbellPair::closing_row(ambient_, x); }

  /// Throws not_a_member unless `p` is a fixed pair of this ambient.
  void require_member(const IsbellPair& p) const {
    if (p.quantale() != ambient_.quantale() || !p.x().cols().same_set(ambient_.cols()) ||
        !p.y().rows().same_set(ambient_.rows())) {
      throw Error(ErrorCode::shape_mismatch, "pair belongs to a different ambient matrix");
    }
    if (!contains(p)) throw Error(ErrorCode::not_a_member, "pair is not a fixed point of this hull");
  }

  std::optional<std::size_t> index_of(const IsbellPair& p) const {
    const auto& els = elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (els[i] == p) return i;
    }
    return std::nullopt;
  }

 private:
  QMatrix ambient_;
  std::optional<std::vector<IsbellPair>> elements_;
};

/// The pair closing X' upward, with the check that Y' still fits under the
/// new second coordinate. Requires Y' ∘ X' ⪯ Z.
inline IsbellPair complete_pair(const QMatrix& z, const QMatrix& x0, const QMatrix& y0) {
  detail::require_row_for(z, x0);
  detail::require_col_for(z, y0);
  const QMatrix xr = x0.with_unit_row();
  const QMatrix yc = y0.with_unit_col();
  if (!mat_leq(compose(yc, xr), z)) {
    throw Error(ErrorCode::not_under_approximating, "Y' ∘ X' is not below Z");
  }
  IsbellPair p = IsbellPair::closing_row(z, xr);
  if (!mat_leq(yc, p.y())) {
    throw Error(ErrorCode::not_under_approximating, "Y' is not below Z ↙ X' (second coordinate obstructs)");
  }
  return p;
}

namespace detail {

inline std::uint64_t row_mask(const QMatrix& x) {
  std::uint64_t m = 0;
  for (std::size_t a = 0; a < x.col_count(); ++a) {
    if (x.at(0, a).as_bool()) m |= std::uint64_t{1} << a;
  }
  return m;
}

/// Bit-parallel Boolean closure on subsets of A, with A given by the ambient's
/// column order.
class BooleanClosure {
 public:
  explicit BooleanClosure(const QMatrix& z) : full_(z.col_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << z.col_count()) - 1) {
    rows_.reserve(z.row_count());
    for (std::size_t c = 0; c < z.row_count(); ++c) {
      std::uint64_t m = 0;
      for (std::size_t a = 0; a < z.col_count(); ++a) {
        if (z.at(c, a).as_bool()) m |= std::uint64_t{1} << a;
      }
      rows_.push_back(m);
    }
  }

  /// (Z ↙ X) ↘ Z: intersect the rows of every object that has all of X.
  std::uint64_t close(std::uint64_t x) const {
    std::uint64_t out = full_;
    for (std::uint64_t r : rows_) {
      if ((x & ~r) == 0) out &= r;
    }
    return out;
  }

  std::uint64_t full() const { return full_; }

 private:
  std::uint64_t full_;
  std::vector<std::uint64_t> rows_;
};

inline QMatrix bool_row(const IndexSet& cols, std::uint64_t mask) {
  std::vector<QuantaleValue> entries;
  entries.reserve(cols.size());
  for (std::size_t a = 0; a < cols.size(); ++a) entries.push_back(QuantaleValue::boolean(((mask >> a) & 1U) != 0));
  return QMatrix(QuantaleId::boolean2, IndexSet::unit(), cols, std::move(entries));
}

/// Linear extension of the hull order: by size, then by the bit pattern read
/// in label order.
inline bool mask_before(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Compare as label-ordered bit strings, first label most significant.
  for (int i = 0; i < 64; ++i) {
    const bool ba = ((a >> i) & 1U) != 0;
    const bool bb = ((b >> i) & 1U) != 0;
    if (ba != bb) return bb;
  }
  return false;
}

}  // namespace detail

/// Every fixed pair of a Boolean ambient matrix, found by closing all 2^|A|
/// subsets of A. Rejects |A| above `guard_exponent` instead of truncating.
inline IsbellHull enumerate_hull(const QMatrix& z, unsigned guard_exponent = kDefaultEnumerationGuard) {
  if (!is_enumerable(z.quantale())) {
    throw Error(ErrorCode::non_enumerable,
                std::string(quantale_name(z.quantale())) + " has an infinite carrier; its hull cannot be listed");
  }
  const std::size_t n = z.col_count();
  if (n > guard_exponent || n > 30) {
    throw Error(ErrorCode::guard_exceeded, "hull enumeration needs 2^" + std::to_string(n) +
                                               " candidates, above the guard 2^" + std::to_string(guard_exponent));
  }
  detail::BooleanClosure closure(z);
  std::vector<std::uint64_t> masks;
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const std::uint64_t c = closure.close(x);
    if (!seen[c]) {
      seen[c] = true;
      masks.push_back(c);
    }
  }
  std::sort(masks.begin(), masks.end(), detail::mask_before);
  std::vector<IsbellPair> elements;
  elements.reserve(masks.size());
  for (std::uint64_t m : masks) elements.push_back(IsbellPair::closing_row(z, detail::bool_row(z.cols(), m)));
  return IsbellHull(z, std::move(elements));
}

/// Covering pairs (i, j) of an explicit Boolean hull: element i lies directly
/// below element j. Sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const IsbellHull& hull) {
  const auto& els = hull.elements();
  const QMatrix& z = hull.ambient();
  if (z.col_count() > 64) throw Error(ErrorCode::guard_exceeded, "too many attributes for covering computation");
  detail::BooleanClosure closure(z);
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const std::uint64_t m = detail::row_mask(els[i].x().reindexed(IndexSet::unit(), z.cols()));
    masks.push_back(m);
    index.emplace(m, i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < els.size(); ++i) {
    // Upper covers are the minimal closures of X ∪ {a}.
    std::vector<std::uint64_t> candidates;
    for (std::size_t a = 0; a < z.col_count(); ++a) {
      const std::uint64_t bit = std::uint64_t{1} << a;
      if (masks[i] & bit) continue;
      candidates.push_back(closure.close(masks[i] | bit));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (std::uint64_t c : candidates) {
      bool minimal = true;
      for (std::uint64_t d : candidates) {
        if (d != c && (d & ~c) == 0) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.emplace_back(i, index.at(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Infimum in the hull: meet the first coordinates, then recompute Y.
/// The empty meet is the top pair.
inline IsbellPair hull_meet(const IsbellHull& hull, std::span<const IsbellPair> pairs) {
  const QMatrix& z = hull.ambient();
  std::vector<QMatrix> xs;
  for (const auto& p : pairs) {
    hull.require_member(p);
    xs.push_back(p.x());
  }
  QMatrix x = mat_meet(xs, z.quantale(), IndexSet::unit(), z.cols());
  QMatrix y = right_extension(z, x);
  return IsbellPair::make(z, x, y);
}

/// Supremum in the hull. The hull order reverses the order of second
/// coordinates, so the supremum meets the Y's and recomputes X.
inline IsbellPair hull_join(const IsbellHull& hull, std::span<const IsbellPair> pairs) {
  const QMatrix& z = hull.ambient();
  std::vector<QMatrix> ys;
  for (const auto& p : pairs) {
    hull.require_member(p);
    ys.push_back(p.y());
  }
  QMatrix y = mat_meet(ys, z.quantale(), z.rows(), IndexSet::unit());
  QMatrix x = right_lifting(y, z);
  return IsbellPair::make(z, x, y);
}

}  // namespace residuate
