#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "residuate/qmatrix.hpp"

namespace residuate {

/// A witness against one of the two category axioms.
struct AxiomViolation {
  enum class Axiom { unit, composition } axiom;
  /// (c) for the unit axiom, (c, c', c'') for composition.
  std::vector<std::string> objects;
};

/// A Q-category: a square matrix with hom_{c',c} = C(c, c') satisfying
/// I ⪯ C(c, c) and C(c', c'') ∘ C(c, c') ⪯ C(c, c'').
class QCategory {
 public:
  /// Throws not_a_category (carrying the first witness) on a violation.
  static QCategory make(const QMatrix& hom);

  const IndexSet& objects() const { return hom_.rows(); }
  const QMatrix& matrix() const { return hom_; }
  QuantaleId quantale() const { return hom_.quantale(); }

  /// C(from, to).
  const QuantaleValue& hom(std::string_view from, std::string_view to) const { return hom_.at(to, from); }
  const QuantaleValue& hom(std::size_t from, std::size_t to) const { return hom_.at(to, from); }

 private:
  explicit QCategory(QMatrix hom) : hom_(std::move(hom)) {}
  friend struct QCategoryCheck check_qcategory(const QMatrix& hom);

  QMatrix hom_;
};

struct QCategoryCheck {
  std::optional<QCategory> category;
  std::vector<AxiomViolation> violations;
};

inline std::string describe(const AxiomViolation& v) {
  std::string out = v.axiom == AxiomViolation::Axiom::unit ? "CA1 (unit) fails at (" : "CA2 (composition) fails at (";
  for (std::size_t i = 0; i < v.objects.size(); ++i) {
    if (i) out += ", ";
    out += v.objects[i];
  }
  return out + ")";
}

/// Checks both axioms on a square matrix and either returns the category or
/// lists every witness. The columns are reordered to follow the rows.
inline QCategoryCheck check_qcategory(const QMatrix& hom) {
  if (!hom.rows().same_set(hom.cols())) {
    throw Error(ErrorCode::shape_mismatch, "a Q-category needs a square matrix over one index set");
  }
  QMatrix m = hom.reindexed(hom.rows(), hom.rows());
  const IndexSet& obj = m.rows();
  const std::size_t n = obj.size();
  const QuantaleValue e = unit(m.quantale());
  // C(i, j) lives at row j, column i.
  auto c = [&](std::size_t i, std::size_t j) -> const QuantaleValue& { return m.at(j, i); };

  QCategoryCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(e, c(i, i))) out.violations.push_back({AxiomViolation::Axiom::unit, {obj[i]}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!leq(mul(c(j, k), c(i, j)), c(i, k))) {
          out.violations.push_back({AxiomViolation::Axiom::composition, {obj[i], obj[j], obj[k]}});
        }
      }
    }
  }
  if (out.violations.empty()) out.category = QCategory(std::move(m));
  return out;
}

inline QCategory QCategory::make(const QMatrix& hom) {
  QCategoryCheck check = check_qcategory(hom);
  if (!check.category) {
    throw Error(ErrorCode::not_a_category, describe(check.violations.front()) + " (" +
                                               std::to_string(check.violations.size()) + " violation(s))");
  }
  return std::move(*check.category);
}

/// The Boolean relation c ⪯ c' iff I ⪯ C(c, c'), in the same orientation as
/// the hom matrix (entry at row c', column c).
inline QMatrix induced_preorder(const QCategory& cat) {
  const IndexSet& obj = cat.objects();
  const QuantaleValue e = unit(cat.quantale());
  std::vector<QuantaleValue> entries;
  entries.reserve(obj.size() * obj.size());
  for (std::size_t to = 0; to < obj.size(); ++to) {
    for (std::size_t from = 0; from < obj.size(); ++from) {
      entries.push_back(QuantaleValue::boolean(leq(e, cat.hom(from, to))));
    }
  }
  return QMatrix(QuantaleId::boolean2, obj, obj, std::move(entries));
}

/// Unordered pairs of distinct isomorphic objects, in label order.
inline std::vector<std::pair<std::string, std::string>> isomorphic_objects(const QCategory& cat) {
  const IndexSet& obj = cat.objects();
  const QuantaleValue e = unit(cat.quantale());
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < obj.size(); ++i) {
    for (std::size_t j = i + 1; j < obj.size(); ++j) {
      if (leq(e, cat.hom(i, j)) && leq(e, cat.hom(j, i))) out.emplace_back(obj[i], obj[j]);
    }
  }
  return out;
}

inline bool is_skeletal(const QCategory& cat) { return isomorphic_objects(cat).empty(); }

/// Every c' with C(c', d) = C(c, d) ↙ x for all d. Copowers are unique up to
/// isomorphism, so this is one isomorphism class (possibly empty).
inline std::vector<std::string> copower_class(const QCategory& cat, std::string_view c, const QuantaleValue& x) {
  const IndexSet& obj = cat.objects();
  const std::size_t ci = obj.index_of(c);
  std::vector<std::string> out;
  for (std::size_t cand = 0; cand < obj.size(); ++cand) {
    bool ok = true;
    for (std::size_t d = 0; d < obj.size() && ok; ++d) ok = cat.hom(cand, d) == rext(cat.hom(ci, d), x);
    if (ok) out.push_back(obj[cand]);
  }
  return out;
}

/// Every c' with C(d, c') = x ↘ C(d, c) for all d.
inline std::vector<std::string> power_class(const QCategory& cat, std::string_view c, const QuantaleValue& x) {
  const IndexSet& obj = cat.objects();
  const std::size_t ci = obj.index_of(c);
  std::vector<std::string> out;
  for (std::size_t cand = 0; cand < obj.size(); ++cand) {
    bool ok = true;
    for (std::size_t d = 0; d < obj.size() && ok; ++d) ok = cat.hom(d, cand) == rlift(x, cat.hom(d, ci));
    if (ok) out.push_back(obj[cand]);
  }
  return out;
}

/// First copower witness in label order, if any.
inline std::optional<std::string> copower_of(const QCategory& cat, std::string_view c, const QuantaleValue& x) {
  auto cls = copower_class(cat, c, x);
  if (cls.empty()) return std::nullopt;
  return cls.front();
}

inline std::optional<std::string> power_of(const QCategory& cat, std::string_view c, const QuantaleValue& x) {
  auto cls = power_class(cat, c, x);
  if (cls.empty()) return std::nullopt;
  return cls.front();
}

struct CompletenessReport {
  bool copowered = true;
  bool powered = true;
  bool order_complete = true;
  /// True when every scalar of the carrier was tried; otherwise the
  /// copowered/powered flags only cover the sampled scalars.
  bool exhaustive = false;

  bool complete() const { return copowered && powered && order_complete; }
};

/// Completeness of a finite Q-category. Order-completeness is decided exactly
/// (a least element plus binary suprema); powers and copowers are checked for
/// the whole carrier when it is finite and for `scalars` otherwise.
inline CompletenessReport check_completeness(const QCategory& cat, std::span<const QuantaleValue> scalars) {
  CompletenessReport report;
  std::vector<QuantaleValue> xs;
  if (is_enumerable(cat.quantale())) {
    xs = default_samples(cat.quantale());
    report.exhaustive = true;
  } else {
    xs.assign(scalars.begin(), scalars.end());
  }
  const IndexSet& obj = cat.objects();
  for (const auto& x : xs) {
    for (const auto& c : obj) {
      if (!copower_of(cat, c, x)) report.copowered = false;
      if (!power_of(cat, c, x)) report.powered = false;
    }
  }

  const QMatrix order = induced_preorder(cat);
  auto below = [&](std::size_t a, std::size_t b) { return order.at(b, a).as_bool(); };
  const std::size_t n = obj.size();
  // A supremum of S: an upper bound of S below every upper bound of S.
  auto has_sup = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> ubs;
    for (std::size_t u = 0; u < n; ++u) {
      bool ub = true;
      for (std::size_t m : s) ub = ub && below(m, u);
      if (ub) ubs.push_back(u);
    }
    for (std::size_t u : ubs) {
      bool least = true;
      for (std::size_t v : ubs) least = least && below(u, v);
      if (least) return true;
    }
    return false;
  };
  if (!has_sup({})) report.order_complete = false;
  for (std::size_t i = 0; i < n && report.order_complete; ++i) {
    for (std::size_t j = i + 1; j < n && report.order_complete; ++j) {
      if (!has_sup({i, j})) report.order_complete = false;
    }
  }
  return report;
}

}  // namespace residuate
