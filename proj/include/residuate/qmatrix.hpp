#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "residuate/quantale.hpp"

namespace residuate {

/// Label of the singleton index set used by scalars, row and column vectors.
inline constexpr std::string_view kUnitLabel = "*";

/// An ordered list of distinct labels. May be empty.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::string> labels) : IndexSet(std::vector<std::string>(labels)) {}
  explicit IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!position_.emplace(labels_[i], i).second) {
        throw Error(ErrorCode::duplicate_label, "duplicate label '" + labels_[i] + "'");
      }
    }
  }

  static IndexSet unit() { return IndexSet({std::string(kUnitLabel)}); }

  /// Labels "<prefix>0", "<prefix>1", ...
  static IndexSet numbered(std::size_t n, std::string_view prefix = "i") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
    return IndexSet(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool contains(std::string_view label) const { return position_.find(label) != position_.end(); }

  std::size_t index_of(std::string_view label) const {
    auto it = position_.find(label);
    if (it == position_.end()) {
      throw Error(ErrorCode::unknown_label, "unknown label '" + std::string(label) + "'");
    }
    return it->second;
  }

  /// Same labels, in any order.
  bool same_set(const IndexSet& other) const {
    if (size() != other.size()) return false;
    for (const auto& l : labels_) {
      if (!other.contains(l)) return false;
    }
    return true;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> position_;
};

/// A Q-matrix X : A ⇸ B, stored as a rows(B) × cols(A) array.
///
/// Label sets, not positions, identify indices: operations that combine two
/// matrices match their shared index sets by label and accept any order.
class QMatrix {
 public:
  QMatrix(QuantaleId q, IndexSet rows, IndexSet cols, std::vector<QuantaleValue> entries)
      : q_(q), rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
    if (entries_.size() != rows_.size() * cols_.size()) {
      throw Error(ErrorCode::shape_mismatch, "matrix has " + std::to_string(entries_.size()) +
                                                 " entries, expected " +
                                                 std::to_string(rows_.size() * cols_.size()));
    }
    for (const auto& v : entries_) {
      if (v.quantale() != q_) {
        throw Error(ErrorCode::instance_mismatch, "matrix over " + std::string(quantale_name(q_)) +
                                                      " holds a " + std::string(quantale_name(v.quantale())) +
                                                      " entry");
      }
    }
  }

  static QMatrix filled(QuantaleId q, IndexSet rows, IndexSet cols, const QuantaleValue& value) {
    std::vector<QuantaleValue> entries(rows.size() * cols.size(), value);
    return QMatrix(q, std::move(rows), std::move(cols), std::move(entries));
  }

  /// Convenience constructor from literal rows, with numbered labels.
  static QMatrix from_literals(QuantaleId q, const std::vector<std::vector<std::string>>& rows,
                               std::string_view row_prefix = "r", std::string_view col_prefix = "c") {
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    std::vector<QuantaleValue> entries;
    for (const auto& r : rows) {
      if (r.size() != ncols) throw Error(ErrorCode::shape_mismatch, "ragged literal matrix");
      for (const auto& lit : r) entries.push_back(parse_value(q, lit));
    }
    return QMatrix(q, IndexSet::numbered(rows.size(), row_prefix), IndexSet::numbered(ncols, col_prefix),
                   std::move(entries));
  }

  QuantaleId quantale() const { return q_; }
  const IndexSet& rows() const { return rows_; }
  const IndexSet& cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  const QuantaleValue& at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }
  const QuantaleValue& at(std::string_view row, std::string_view col) const {
    return at(rows_.index_of(row), cols_.index_of(col));
  }
  const std::vector<QuantaleValue>& entries() const { return entries_; }

  bool is_scalar() const { return rows_.size() == 1 && cols_.size() == 1; }
  bool is_row_vector() const { return rows_.size() == 1; }
  bool is_column_vector() const { return cols_.size() == 1; }

  /// Copy with the singleton row (resp. column) relabelled to kUnitLabel.
  QMatrix with_unit_row() const {
    if (rows_.size() != 1) throw Error(ErrorCode::shape_mismatch, "not a row vector");
    return QMatrix(q_, IndexSet::unit(), cols_, entries_);
  }
  QMatrix with_unit_col() const {
    if (cols_.size() != 1) throw Error(ErrorCode::shape_mismatch, "not a column vector");
    return QMatrix(q_, rows_, IndexSet::unit(), entries_);
  }

  /// Entries permuted to follow the given label orders (which must be
  /// permutations of this matrix's labels).
  QMatrix reindexed(const IndexSet& rows, const IndexSet& cols) const {
    if (!rows.same_set(rows_) || !cols.same_set(cols_)) {
      throw Error(ErrorCode::shape_mismatch, "reindexing needs the same label sets");
    }
    std::vector<QuantaleValue> out;
    out.reserve(entries_.size());
    for (const auto& r : rows) {
      const std::size_t ri = rows_.index_of(r);
      for (const auto& c : cols) out.push_back(at(ri, cols_.index_of(c)));
    }
    return QMatrix(q_, rows, cols, std::move(out));
  }

  /// Equality up to the order of labels.
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    if (a.q_ != b.q_ || !a.rows_.same_set(b.rows_) || !a.cols_.same_set(b.cols_)) return false;
    if (a.rows_ == b.rows_ && a.cols_ == b.cols_) return a.entries_ == b.entries_;
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
      const std::size_t br = b.rows_.index_of(a.rows_[r]);
      for (std::size_t c = 0; c < a.cols_.size(); ++c) {
        if (!(a.at(r, c) == b.at(br, b.cols_.index_of(a.cols_[c])))) return false;
      }
    }
    return true;
  }

 private:
  QuantaleId q_;
  IndexSet rows_;
  IndexSet cols_;
  std::vector<QuantaleValue> entries_;
};

namespace detail {

inline void require_quantale(const QMatrix& a, const QMatrix& b) {
  if (a.quantale() != b.quantale()) {
    throw Error(ErrorCode::instance_mismatch, "matrices over " + std::string(quantale_name(a.quantale())) +
                                                  " and " + std::string(quantale_name(b.quantale())));
  }
}

inline void require_index_match(const IndexSet& a, const IndexSet& b, std::string_view what) {
  if (!a.same_set(b)) {
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": index sets differ (" +
                                                   std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                                   " labels)");
  }
}

/// position in `b` of each label of `a`
inline std::vector<std::size_t> permutation(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = b.index_of(a[i]);
  return p;
}

}  // namespace detail

/// Compact one-line rendering, rows separated by ';'.
inline std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << quantale_name(m.quantale()) << '[';
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (r > 0) os << "; ";
    os << m.rows()[r] << ':';
    for (std::size_t c = 0; c < m.col_count(); ++c) os << ' ' << m.cols()[c] << '=' << m.at(r, c);
  }
  return os << ']';
}

/// Identity matrix I_A: I_Q on the diagonal, bottom elsewhere.
inline QMatrix identity(const IndexSet& a, QuantaleId q) {
  std::vector<QuantaleValue> entries;
  entries.reserve(a.size() * a.size());
  const QuantaleValue one = unit(q);
  const QuantaleValue zero = bottom(q);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) entries.push_back(i == j ? one : zero);
  }
  return QMatrix(q, a, a, std::move(entries));
}

/// Y ∘ X for X : A ⇸ B and Y : B ⇸ C.
inline QMatrix compose(const QMatrix& y, const QMatrix& x) {
  detail::require_quantale(y, x);
  detail::require_index_match(y.cols(), x.rows(), "compose");
  const QuantaleId q = y.quantale();
  const auto perm = detail::permutation(y.cols(), x.rows());
  std::vector<QuantaleValue> out;
  out.reserve(y.row_count() * x.col_count());
  for (std::size_t c = 0; c < y.row_count(); ++c) {
    for (std::size_t a = 0; a < x.col_count(); ++a) {
      QuantaleValue acc = bottom(q);
      for (std::size_t b = 0; b < y.col_count(); ++b) acc = join(acc, mul(y.at(c, b), x.at(perm[b], a)));
      out.push_back(std::move(acc));
    }
  }
  return QMatrix(q, y.rows(), x.cols(), std::move(out));
}

inline QMatrix transpose(const QMatrix& x) {
  std::vector<QuantaleValue> out;
  out.reserve(x.entries().size());
  for (std::size_t a = 0; a < x.col_count(); ++a) {
    for (std::size_t b = 0; b < x.row_count(); ++b) out.push_back(x.at(b, a));
  }
  return QMatrix(x.quantale(), x.cols(), x.rows(), std::move(out));
}

/// Entrywise order. Shapes must agree as label sets.
inline bool mat_leq(const QMatrix& x, const QMatrix& y) {
  detail::require_quantale(x, y);
  if (!x.rows().same_set(y.rows()) || !x.cols().same_set(y.cols())) {
    throw Error(ErrorCode::shape_mismatch, "mat_leq on matrices of different shapes");
  }
  const auto rp = detail::permutation(x.rows(), y.rows());
  const auto cp = detail::permutation(x.cols(), y.cols());
  for (std::size_t r = 0; r < x.row_count(); ++r) {
    for (std::size_t c = 0; c < x.col_count(); ++c) {
      if (!leq(x.at(r, c), y.at(rp[r], cp[c]))) return false;
    }
  }
  return true;
}

namespace detail {

template <typename Combine>
QMatrix entrywise_fold(std::span<const QMatrix> list, QuantaleId q, const IndexSet& rows, const IndexSet& cols,
                       const QuantaleValue& init, Combine combine) {
  std::vector<QuantaleValue> acc(rows.size() * cols.size(), init);
  for (const auto& m : list) {
    if (m.quantale() != q) throw Error(ErrorCode::instance_mismatch, "entrywise fold over mixed quantales");
    if (!m.rows().same_set(rows) || !m.cols().same_set(cols)) {
      throw Error(ErrorCode::shape_mismatch, "entrywise fold over matrices of different shapes");
    }
    const auto rp = permutation(rows, m.rows());
    const auto cp = permutation(cols, m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        auto& slot = acc[r * cols.size() + c];
        slot = combine(slot, m.at(rp[r], cp[c]));
      }
    }
  }
  return QMatrix(q, rows, cols, std::move(acc));
}

}  // namespace detail

/// Entrywise supremum of a family of matrices of the given shape. The empty
/// family yields the all-bottom matrix.
inline QMatrix mat_join(std::span<const QMatrix> list, QuantaleId q, const IndexSet& rows, const IndexSet& cols) {
  return detail::entrywise_fold(list, q, rows, cols, bottom(q),
                                [](const QuantaleValue& a, const QuantaleValue& b) { return join(a, b); });
}

inline QMatrix mat_meet(std::span<const QMatrix> list, QuantaleId q, const IndexSet& rows, const IndexSet& cols) {
  return detail::entrywise_fold(list, q, rows, cols, top(q),
                                [](const QuantaleValue& a, const QuantaleValue& b) { return meet(a, b); });
}

/// Nonempty-family forms; the shape is taken from the first matrix.
inline QMatrix mat_join(std::span<const QMatrix> list) {
  if (list.empty()) throw Error(ErrorCode::shape_mismatch, "mat_join of an empty list needs an explicit shape");
  return mat_join(list, list.front().quantale(), list.front().rows(), list.front().cols());
}

inline QMatrix mat_meet(std::span<const QMatrix> list) {
  if (list.empty()) throw Error(ErrorCode::shape_mismatch, "mat_meet of an empty list needs an explicit shape");
  return mat_meet(list, list.front().quantale(), list.front().rows(), list.front().cols());
}

inline QMatrix mat_join(const QMatrix& a, const QMatrix& b) {
  const QMatrix pair[] = {a, b};
  return mat_join(pair);
}

inline QMatrix mat_meet(const QMatrix& a, const QMatrix& b) {
  const QMatrix pair[] = {a, b};
  return mat_meet(pair);
}

/// Z ↙ X for Z : A ⇸ C and X : A ⇸ B; the result is B ⇸ C with
/// (Z ↙ X)_{c,b} = meet over a of Z_{c,a} ↙ X_{b,a}. An empty A gives the
/// all-top matrix.
inline QMatrix right_extension(const QMatrix& z, const QMatrix& x) {
  detail::require_quantale(z, x);
  detail::require_index_match(z.cols(), x.cols(), "right_extension");
  const QuantaleId q = z.quantale();
  const auto perm = detail::permutation(z.cols(), x.cols());
  std::vector<QuantaleValue> out;
  out.reserve(z.row_count() * x.row_count());
  for (std::size_t c = 0; c < z.row_count(); ++c) {
    for (std::size_t b = 0; b < x.row_count(); ++b) {
      QuantaleValue acc = top(q);
      for (std::size_t a = 0; a < z.col_count(); ++a) acc = meet(acc, rext(z.at(c, a), x.at(b, perm[a])));
      out.push_back(std::move(acc));
    }
  }
  return QMatrix(q, z.rows(), x.rows(), std::move(out));
}

/// Y ↘ Z for Y : B ⇸ C and Z : A ⇸ C; the result is A ⇸ B with
/// (Y ↘ Z)_{b,a} = meet over c of Y_{c,b} ↘ Z_{c,a}.
inline QMatrix right_lifting(const QMatrix& y, const QMatrix& z) {
  detail::require_quantale(y, z);
  detail::require_index_match(y.rows(), z.rows(), "right_lifting");
  const QuantaleId q = y.quantale();
  const auto perm = detail::permutation(y.rows(), z.rows());
  std::vector<QuantaleValue> out;
  out.reserve(y.col_count() * z.col_count());
  for (std::size_t b = 0; b < y.col_count(); ++b) {
    for (std::size_t a = 0; a < z.col_count(); ++a) {
      QuantaleValue acc = top(q);
      for (std::size_t c = 0; c < y.row_count(); ++c) acc = meet(acc, rlift(y.at(c, b), z.at(perm[c], a)));
      out.push_back(std::move(acc));
    }
  }
  return QMatrix(q, y.cols(), z.cols(), std::move(out));
}

/// Y ∘ X for a row vector Y : A ⇸ 1 and a column vector X : 1 ⇸ A.
inline QuantaleValue scalar_product(const QMatrix& y, const QMatrix& x) {
  if (!y.is_row_vector() || !x.is_column_vector()) {
    throw Error(ErrorCode::shape_mismatch, "scalar_product takes a row vector and a column vector");
  }
  return compose(y, x).at(0, 0);
}

/// The b-th row vector X_{b,-} : A ⇸ 1.
inline QMatrix row(const QMatrix& x, std::string_view b) {
  const std::size_t r = x.rows().index_of(b);
  std::vector<QuantaleValue> out(x.entries().begin() + static_cast<std::ptrdiff_t>(r * x.col_count()),
                                 x.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * x.col_count()));
  return QMatrix(x.quantale(), IndexSet::unit(), x.cols(), std::move(out));
}

/// The a-th column vector X_{-,a} : 1 ⇸ B.
inline QMatrix col(const QMatrix& x, std::string_view a) {
  const std::size_t c = x.cols().index_of(a);
  std::vector<QuantaleValue> out;
  out.reserve(x.row_count());
  for (std::size_t r = 0; r < x.row_count(); ++r) out.push_back(x.at(r, c));
  return QMatrix(x.quantale(), x.rows(), IndexSet::unit(), std::move(out));
}

/// A 1×1 matrix holding `v`.
inline QMatrix scalar_matrix(const QuantaleValue& v) {
  return QMatrix(v.quantale(), IndexSet::unit(), IndexSet::unit(), {v});
}

}  // namespace residuate
