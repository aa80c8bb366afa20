#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "residuate/isbell.hpp"
#include "residuate/qcategory.hpp"

namespace residuate {

/// An Isbell hull seen as a complete semimodule over its quantale, ordered by
/// the hull order (first coordinates).
///
///   copower  x ∗ (X, Y)   closes the row X ∘ x; its Y is Y ↙ x entrywise
///   power    x ↘ (X, Y)   acts on X entrywise by x ↘ (−) and is already closed
///   hom      (p, q)       the largest x with x ∗ p ⪯ q
///
/// so that x ⪯ hom(p, q) ⟺ x ∗ p ⪯ q ⟺ p ⪯ x ↘ q.
class SemimoduleView {
 public:
  explicit SemimoduleView(IsbellHull hull) : hull_(std::move(hull)) {}

  const IsbellHull& hull() const { return hull_; }
  const QMatrix& ambient() const { return hull_.ambient(); }
  QuantaleId quantale() const { return hull_.ambient().quantale(); }

 private:
  IsbellHull hull_;
};

namespace detail {

template <typename F>
QMatrix map_row(const QMatrix& x, F f) {
  std::vector<QuantaleValue> out;
  out.reserve(x.col_count());
  for (std::size_t a = 0; a < x.col_count(); ++a) out.push_back(f(x.at(0, a)));
  return QMatrix(x.quantale(), x.rows(), x.cols(), std::move(out));
}

inline void require_scalar(const SemimoduleView& s, const QuantaleValue& x) {
  if (x.quantale() != s.quantale()) {
    throw Error(ErrorCode::instance_mismatch, "scalar from " + std::string(quantale_name(x.quantale())) +
                                                  " acting on a " + std::string(quantale_name(s.quantale())) +
                                                  " semimodule");
  }
}

}  // namespace detail

inline IsbellPair hull_copower(const SemimoduleView& s, const QuantaleValue& x, const IsbellPair& p) {
  detail::require_scalar(s, x);
  s.hull().require_member(p);
  QMatrix acted = detail::map_row(p.x(), [&](const QuantaleValue& v) { return mul(x, v); });
  return IsbellPair::closing_row(s.ambient(), acted);
}

inline IsbellPair hull_power(const SemimoduleView& s, const QuantaleValue& x, const IsbellPair& p) {
  detail::require_scalar(s, x);
  s.hull().require_member(p);
  QMatrix acted = detail::map_row(p.x(), [&](const QuantaleValue& v) { return rlift(x, v); });
  return IsbellPair::from_row(s.ambient(), acted);
}

/// hom(p, q) = meet over a of X_q(a) ↙ X_p(a).
inline QuantaleValue hull_hom(const SemimoduleView& s, const IsbellPair& p, const IsbellPair& q) {
  s.hull().require_member(p);
  s.hull().require_member(q);
  const IndexSet& a = s.ambient().cols();
  QuantaleValue acc = top(s.quantale());
  for (const auto& label : a) acc = meet(acc, rext(q.x().at(kUnitLabel, label), p.x().at(kUnitLabel, label)));
  return acc;
}

/// The same value computed from second coordinates:
/// meet over c of Y_q(c) ↘ Y_p(c).
inline QuantaleValue hull_hom_from_cols(const SemimoduleView& s, const IsbellPair& p, const IsbellPair& q) {
  s.hull().require_member(p);
  s.hull().require_member(q);
  const IndexSet& c = s.ambient().rows();
  QuantaleValue acc = top(s.quantale());
  for (const auto& label : c) acc = meet(acc, rlift(q.y().at(label, kUnitLabel), p.y().at(label, kUnitLabel)));
  return acc;
}

/// Checks the semimodule axioms on the given scalars and hull elements:
/// unit and associativity of the copower, distributivity over finite joins
/// in each argument (every subset of at most two, including the empty one),
/// the copower/hom/power adjointness, the four laws of the dual semimodule,
/// and agreement of the two hom formulas.
inline LawReport check_semimodule_laws(const SemimoduleView& s, std::span<const QuantaleValue> scalars,
                                       std::span<const IsbellPair> elements) {
  LawReport report;
  const QuantaleId q = s.quantale();
  const IsbellHull& h = s.hull();
  auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };
  const QuantaleValue e = unit(q);

  for (const auto& p : elements) {
    if (!h.contains(p)) {
      fail("sample element is not in the hull");
      return report;
    }
  }

  // Subfamilies of size 0, 1 and 2.
  auto small_families = [](std::size_t n) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back({i});
      for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
    }
    return out;
  };
  const auto scalar_families = small_families(scalars.size());
  const auto element_families = small_families(elements.size());

  for (std::size_t pi = 0; pi < elements.size(); ++pi) {
    const auto& p = elements[pi];
    const std::string at_p = "element #" + std::to_string(pi);
    if (!(hull_copower(s, e, p) == p)) fail("copower unit fails at " + at_p);
    if (!(hull_power(s, e, p) == p)) fail("power unit fails at " + at_p);

    for (const auto& x : scalars) {
      for (const auto& y : scalars) {
        const std::string at = at_p + ", x = " + format_value(x) + ", y = " + format_value(y);
        if (!(hull_copower(s, x, hull_copower(s, y, p)) == hull_copower(s, mul(x, y), p))) {
          fail("copower associativity fails at " + at);
        }
        if (!(hull_power(s, x, hull_power(s, y, p)) == hull_power(s, mul(y, x), p))) {
          fail("power associativity fails at " + at);
        }
      }
    }

    for (const auto& fam : scalar_families) {
      std::vector<QuantaleValue> xs;
      std::vector<IsbellPair> copowers, powers;
      for (std::size_t i : fam) {
        xs.push_back(scalars[i]);
        copowers.push_back(hull_copower(s, scalars[i], p));
        powers.push_back(hull_power(s, scalars[i], p));
      }
      const QuantaleValue sup = join(q, xs);
      if (!(hull_copower(s, sup, p) == hull_join(h, copowers))) {
        fail("copower does not preserve a scalar join at " + at_p);
      }
      if (!(hull_power(s, sup, p) == hull_meet(h, powers))) {
        fail("power does not turn a scalar join into a meet at " + at_p);
      }
    }
  }

  for (const auto& x : scalars) {
    for (const auto& fam : element_families) {
      std::vector<IsbellPair> ps, copowers, powers;
      for (std::size_t i : fam) {
        ps.push_back(elements[i]);
        copowers.push_back(hull_copower(s, x, elements[i]));
        powers.push_back(hull_power(s, x, elements[i]));
      }
      if (!(hull_copower(s, x, hull_join(h, ps)) == hull_join(h, copowers))) {
        fail("copower does not preserve an element join at x = " + format_value(x));
      }
      if (!(hull_power(s, x, hull_meet(h, ps)) == hull_meet(h, powers))) {
        fail("power does not preserve an element meet at x = " + format_value(x));
      }
    }
  }

  for (std::size_t pi = 0; pi < elements.size(); ++pi) {
    for (std::size_t qi = 0; qi < elements.size(); ++qi) {
      const auto& p = elements[pi];
      const auto& r = elements[qi];
      const QuantaleValue hom = hull_hom(s, p, r);
      const std::string at = "elements #" + std::to_string(pi) + ", #" + std::to_string(qi);
      if (!(hom == hull_hom_from_cols(s, p, r))) fail("hom formulas disagree at " + at);
      for (const auto& x : scalars) {
        const bool a = leq(x, hom);
        const bool b = hull_leq(hull_copower(s, x, p), r);
        const bool c = hull_leq(p, hull_power(s, x, r));
        if (a != b || b != c) fail("copower/hom/power adjointness fails at " + at + ", x = " + format_value(x));
      }
    }
  }
  return report;
}

/// The hull as a Q-category: objects "h0", "h1", ... in element order, with
/// C(h_i, h_j) = hom(element i, element j).
inline QCategory hull_category(const SemimoduleView& s) {
  const auto& els = s.hull().elements();
  const IndexSet obj = IndexSet::numbered(els.size(), "h");
  std::vector<QuantaleValue> entries;
  entries.reserve(els.size() * els.size());
  for (std::size_t to = 0; to < els.size(); ++to) {
    for (std::size_t from = 0; from < els.size(); ++from) entries.push_back(hull_hom(s, els[from], els[to]));
  }
  return QCategory::make(QMatrix(s.quantale(), obj, obj, std::move(entries)));
}

/// The completion of a Q-category: its hom matrix's hull, with the embedding
/// c ↦ (C_{c,-}, C_{-,c}).
struct MacNeille {
  SemimoduleView view;
  std::vector<std::pair<std::string, IsbellPair>> embedding;

  const IsbellPair& image(std::string_view c) const {
    for (const auto& [label, pair] : embedding) {
      if (label == c) return pair;
    }
    throw Error(ErrorCode::unknown_label, "no object '" + std::string(c) + "'");
  }
};

/// Enumerates the hull when the quantale is finite and the object count fits
/// the guard; otherwise the completion is intensional.
inline MacNeille macneille(const QCategory& cat, unsigned guard_exponent = kDefaultEnumerationGuard) {
  const QMatrix& z = cat.matrix();
  IsbellHull hull = is_enumerable(cat.quantale()) ? enumerate_hull(z, guard_exponent) : IsbellHull(z);
  std::vector<std::pair<std::string, IsbellPair>> embedding;
  for (const auto& c : cat.objects()) embedding.emplace_back(c, IsbellPair::make(z, row(z, c), col(z, c)));
  return MacNeille{SemimoduleView(std::move(hull)), std::move(embedding)};
}

}  // namespace residuate
