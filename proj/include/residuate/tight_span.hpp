#pragma once

#include <string>
#include <vector>

#include "residuate/qcategory.hpp"
#include "residuate/semimodule.hpp"

namespace residuate {

/// A generalised metric space: distances in [0, inf], d(a, a) = 0 and the
/// triangle inequality, but no symmetry and possibly d(a, b) = 0 for a ≠ b.
class GeneralizedMetric {
 public:
  /// `d[i][j]` is the distance from points[i] to points[j].
  GeneralizedMetric(IndexSet points, const std::vector<std::vector<Extended>>& d)
      : GeneralizedMetric(QCategory::make(build(points, d))) {}

  /// From a Lawvere-valued Q-category.
  explicit GeneralizedMetric(QCategory cat) : cat_(std::move(cat)) {
    if (cat_.quantale() != QuantaleId::lawvere_min_plus && cat_.quantale() != QuantaleId::int_lawvere) {
      throw Error(ErrorCode::instance_mismatch, "a generalised metric takes values in the Lawvere quantale");
    }
  }

  const IndexSet& points() const { return cat_.objects(); }
  const Extended& distance(std::string_view from, std::string_view to) const {
    return cat_.hom(from, to).as_extended();
  }
  const QCategory& category() const { return cat_; }
  /// Z_{b,a} = d(a, b).
  const QMatrix& matrix() const { return cat_.matrix(); }

 private:
  static QMatrix build(const IndexSet& points, const std::vector<std::vector<Extended>>& d) {
    const std::size_t n = points.size();
    if (d.size() != n) throw Error(ErrorCode::shape_mismatch, "distance table needs one row per point");
    for (const auto& r : d) {
      if (r.size() != n) throw Error(ErrorCode::shape_mismatch, "distance table must be square");
    }
    std::vector<QuantaleValue> entries;
    entries.reserve(n * n);
    for (std::size_t to = 0; to < n; ++to) {
      for (std::size_t from = 0; from < n; ++from) {
        entries.push_back(QuantaleValue::make(QuantaleId::lawvere_min_plus, d[from][to]));
      }
    }
    return QMatrix(QuantaleId::lawvere_min_plus, points, points, std::move(entries));
  }

  QCategory cat_;
};

/// The directed tight span: the hull of d, which carries the
/// sup-of-truncated-differences metric.
inline SemimoduleView tight_span(const GeneralizedMetric& m) { return SemimoduleView(IsbellHull(m.matrix())); }

/// c ↦ (d(-, c), d(c, -)), checked to be a fixed pair.
inline IsbellPair tight_span_embed(const GeneralizedMetric& m, std::string_view c) {
  const QMatrix& z = m.matrix();
  return IsbellPair::make(z, row(z, c), col(z, c));
}

/// Distance in the tight span: sup over points a of X_q(a) ∸ X_p(a).
inline QuantaleValue tight_span_hom(const GeneralizedMetric& m, const IsbellPair& p, const IsbellPair& q) {
  return hull_hom(tight_span(m), p, q);
}

}  // namespace residuate
