#pragma once

#include <string>
#include <vector>

#include "residuate/isbell.hpp"

namespace residuate {

/// A formal context: objects, attributes, and which object has which
/// attribute. The incidence is a Boolean matrix attributes ⇸ objects (rows are
/// objects, columns attributes).
class Context {
 public:
  explicit Context(QMatrix incidence) : incidence_(std::move(incidence)) {
    if (incidence_.quantale() != QuantaleId::boolean2) {
      throw Error(ErrorCode::instance_mismatch, "a context's incidence relation must be Boolean");
    }
  }

  Context(IndexSet objects, IndexSet attributes, const std::vector<std::vector<bool>>& has)
      : Context(build(std::move(objects), std::move(attributes), has)) {}

  const IndexSet& objects() const { return incidence_.rows(); }
  const IndexSet& attributes() const { return incidence_.cols(); }
  const QMatrix& incidence() const { return incidence_; }

 private:
  static QMatrix build(IndexSet objects, IndexSet attributes, const std::vector<std::vector<bool>>& has) {
    if (has.size() != objects.size()) throw Error(ErrorCode::shape_mismatch, "incidence needs one row per object");
    std::vector<QuantaleValue> entries;
    for (const auto& r : has) {
      if (r.size() != attributes.size()) {
        throw Error(ErrorCode::shape_mismatch, "incidence needs one column per attribute");
      }
      for (bool b : r) entries.push_back(QuantaleValue::boolean(b));
    }
    return QMatrix(QuantaleId::boolean2, std::move(objects), std::move(attributes), std::move(entries));
  }

  QMatrix incidence_;
};

/// Each concept pairs an intent X ⊆ attributes with the extent
/// Y = {objects having all of X}, where X = {attributes shared by all of Y}.
inline IsbellHull concepts(const Context& ctx, unsigned guard_exponent = kDefaultEnumerationGuard) {
  return enumerate_hull(ctx.incidence(), guard_exponent);
}

/// Attribute labels of a concept.
inline std::vector<std::string> intent(const IsbellPair& c) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < c.x().col_count(); ++a) {
    if (c.x().at(0, a).as_bool()) out.push_back(c.x().cols()[a]);
  }
  return out;
}

/// Object labels of a concept.
inline std::vector<std::string> extent(const IsbellPair& c) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.y().row_count(); ++i) {
    if (c.y().at(i, 0).as_bool()) out.push_back(c.y().rows()[i]);
  }
  return out;
}

}  // namespace residuate
