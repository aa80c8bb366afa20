#pragma once

#include <set>
#include <string>
#include <vector>

#include "residuate/qmatrix.hpp"

namespace residuate {

using GridPoint = std::vector<Rational>;

/// A function tabulated on finitely many distinct points of Q^n, with values
/// in [-inf, inf] read as min-plus scalars.
class GridFunction {
 public:
  GridFunction(std::size_t dim, std::vector<GridPoint> grid, std::vector<Extended> values)
      : dim_(dim), grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.empty()) throw Error(ErrorCode::empty_grid, "grid function needs at least one point");
    if (grid_.size() != values_.size()) {
      throw Error(ErrorCode::shape_mismatch, "grid has " + std::to_string(grid_.size()) + " points but " +
                                                 std::to_string(values_.size()) + " values");
    }
    std::set<GridPoint> distinct;
    for (const auto& p : grid_) {
      if (p.size() != dim_) throw Error(ErrorCode::dimension_mismatch, "grid point of the wrong dimension");
      if (!distinct.insert(p).second) throw Error(ErrorCode::invalid_value, "grid points must be distinct");
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<GridPoint>& grid() const { return grid_; }
  const std::vector<Extended>& values() const { return values_; }

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    return a.dim_ == b.dim_ && a.grid_ == b.grid_ && a.values_ == b.values_;
  }

 private:
  std::size_t dim_;
  std::vector<GridPoint> grid_;
  std::vector<Extended> values_;
};

inline Rational pairing(const GridPoint& p, const GridPoint& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * v[i];
  return s;
}

namespace detail {

inline void require_grid(const std::vector<GridPoint>& grid, std::size_t dim) {
  if (grid.empty()) throw Error(ErrorCode::empty_grid, "dual grid is empty");
  std::set<GridPoint> distinct;
  for (const auto& p : grid) {
    if (p.size() != dim) throw Error(ErrorCode::dimension_mismatch, "dual grid point of the wrong dimension");
    if (!distinct.insert(p).second) throw Error(ErrorCode::invalid_value, "dual grid points must be distinct");
  }
}

/// The pairing as a min-plus matrix primal ⇸ dual: rows "p<i>", columns "v<j>".
inline QMatrix pairing_matrix(const std::vector<GridPoint>& primal, const std::vector<GridPoint>& dual) {
  std::vector<QuantaleValue> entries;
  entries.reserve(primal.size() * dual.size());
  for (const auto& p : dual) {
    for (const auto& v : primal) entries.push_back(QuantaleValue::make(QuantaleId::min_plus, Extended(pairing(p, v))));
  }
  return QMatrix(QuantaleId::min_plus, IndexSet::numbered(dual.size(), "p"), IndexSet::numbered(primal.size(), "v"),
                 std::move(entries));
}

inline QMatrix as_row(const GridFunction& f) {
  std::vector<QuantaleValue> entries;
  for (const auto& v : f.values()) entries.push_back(QuantaleValue::make(QuantaleId::min_plus, v));
  return QMatrix(QuantaleId::min_plus, IndexSet::unit(), IndexSet::numbered(f.grid().size(), "v"), std::move(entries));
}

inline std::vector<Extended> payloads(const std::vector<QuantaleValue>& values) {
  std::vector<Extended> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.as_extended());
  return out;
}

}  // namespace detail

/// f*(p) = sup over grid points v of (<p, v> - f(v)), computed as the right
/// extension of the pairing along f over min-plus.
inline GridFunction lf_conjugate(const GridFunction& f, const std::vector<GridPoint>& dual_grid) {
  detail::require_grid(dual_grid, f.dim());
  const QMatrix pair = detail::pairing_matrix(f.grid(), dual_grid);
  const QMatrix conj = right_extension(pair, detail::as_row(f));
  return GridFunction(f.dim(), dual_grid, detail::payloads(conj.entries()));
}

/// f** on the primal grid: the right lifting of the pairing along f*, i.e.
/// sup over dual points p of (<p, v> - f*(p)).
inline GridFunction lf_biconjugate(const GridFunction& f, const std::vector<GridPoint>& dual_grid) {
  detail::require_grid(dual_grid, f.dim());
  const QMatrix pair = detail::pairing_matrix(f.grid(), dual_grid);
  const QMatrix conj = right_extension(pair, detail::as_row(f));
  const QMatrix bi = right_lifting(conj, pair);
  return GridFunction(f.dim(), f.grid(), detail::payloads(bi.entries()));
}

}  // namespace residuate
