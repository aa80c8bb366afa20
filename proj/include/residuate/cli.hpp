#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "residuate/io.hpp"
#include "residuate/residuate.hpp"

namespace residuate::cli {

using io::Json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

struct Invocation {
  std::vector<std::string> files;
  bool check = false;
  io::Style style;
  unsigned guard = kDefaultEnumerationGuard;
};

/// What a verb produced: the JSON document and whether the verb's own
/// verdict was negative (laws found, axioms violated).
struct Outcome {
  Json doc;
  bool failed = false;
};

namespace detail {

inline unsigned guard_from_env() {
  const char* raw = std::getenv("RESIDUATE_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationGuard;
  std::string s(raw);
  if (s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::usage_error, "RESIDUATE_GUARD must be a small non-negative integer exponent");
  }
  return static_cast<unsigned>(std::stoul(s));
}

inline void verify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::check_failed, what);
}

inline QMatrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }

inline Json with_warnings(Json doc, const std::vector<std::string>& warnings) {
  if (!warnings.empty()) doc["warnings"] = warnings;
  return doc;
}

}  // namespace detail

inline Outcome do_compose(const Invocation& in) {
  const QMatrix y = detail::load_matrix(in.files[0]);
  const QMatrix x = detail::load_matrix(in.files[1]);
  const QMatrix r = compose(y, x);
  if (in.check) detail::verify(mat_leq(y, right_extension(r, x)), "Y is not below (Y∘X)↙X");
  return {io::to_json(r, in.style)};
}

inline Outcome do_rext(const Invocation& in) {
  const QMatrix z = detail::load_matrix(in.files[0]);
  const QMatrix x = detail::load_matrix(in.files[1]);
  const QMatrix r = right_extension(z, x);
  if (in.check) {
    detail::verify(mat_leq(compose(r, x), z), "(Z↙X)∘X is not below Z");
    detail::verify(mat_leq(x, right_lifting(r, z)), "X is not below (Z↙X)↘Z");
  }
  return {io::to_json(r, in.style)};
}

inline Outcome do_rlift(const Invocation& in) {
  const QMatrix y = detail::load_matrix(in.files[0]);
  const QMatrix z = detail::load_matrix(in.files[1]);
  const QMatrix r = right_lifting(y, z);
  if (in.check) {
    detail::verify(mat_leq(compose(y, r), z), "Y∘(Y↘Z) is not below Z");
    detail::verify(mat_leq(y, right_extension(z, r)), "Y is not below Z↙(Y↘Z)");
  }
  return {io::to_json(r, in.style)};
}

inline Outcome do_closure(const Invocation& in) {
  const QMatrix z = detail::load_matrix(in.files[0]);
  const QMatrix x = detail::load_matrix(in.files[1]);
  const IsbellPair p = IsbellPair::closing_row(z, x);
  if (in.check) {
    detail::verify(mat_leq(x.with_unit_row(), p.x()), "closure is not extensive");
    detail::verify(IsbellPair::make(z, p.x(), p.y()) == p, "closure is not a fixed pair");
  }
  return {io::to_json(p, in.style)};
}

inline Outcome do_member(const Invocation& in) {
  const QMatrix z = detail::load_matrix(in.files[0]);
  const QMatrix x = detail::load_matrix(in.files[1]);
  const bool member = is_member(z, x);
  const QMatrix closed = closure_row(z, x);
  if (in.check) detail::verify(member == (closed == x.with_unit_row()), "membership disagrees with the closure");
  Json doc;
  doc["member"] = member;
  doc["closure"] = io::to_json(closed, in.style);
  return {doc};
}

inline Outcome do_complete_pair(const Invocation& in) {
  const QMatrix z = detail::load_matrix(in.files[0]);
  const QMatrix x0 = detail::load_matrix(in.files[1]);
  const QMatrix y0 = detail::load_matrix(in.files[2]);
  const IsbellPair p = complete_pair(z, x0, y0);
  if (in.check) {
    detail::verify(mat_leq(x0.with_unit_row(), p.x()) && mat_leq(y0.with_unit_col(), p.y()),
                   "completed pair is not above the input");
    detail::verify(IsbellPair::make(z, p.x(), p.y()) == p, "completed pair is not a fixed pair");
  }
  return {io::to_json(p, in.style)};
}

inline void check_hull(const IsbellHull& h) {
  const auto& els = h.elements();
  for (const auto& p : els) detail::verify(h.contains(p), "listed element is not a fixed pair");
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      detail::verify(!(els[i] == els[j]), "hull lists an element twice");
      detail::verify(!hull_leq(els[j], els[i]), "hull elements are not listed bottom first");
    }
  }
}

inline Outcome do_hull(const Invocation& in) {
  const IsbellHull h = enumerate_hull(detail::load_matrix(in.files[0]), in.guard);
  if (in.check) check_hull(h);
  return {io::to_json(h, in.style)};
}

inline Outcome do_laws(const Invocation& in) {
  const QuantaleId q = parse_quantale_name(in.files[0]);
  const std::vector<QuantaleValue> samples = default_samples(q);
  const LawReport report = check_quantale_laws(q, samples);
  Json doc;
  doc["quantale"] = std::string(quantale_name(q));
  Json s = Json::array();
  for (const auto& v : samples) s.push_back(io::to_json(v, in.style));
  doc["samples"] = std::move(s);
  doc["violations"] = report.violations;
  return {doc, !report.ok()};
}

inline Json violation_json(const AxiomViolation& v) {
  Json j;
  j["axiom"] = v.axiom == AxiomViolation::Axiom::unit ? "unit" : "composition";
  j["objects"] = v.objects;
  return j;
}

inline Outcome do_qcat_check(const Invocation& in) {
  const QCategoryCheck check = io::qcategory_check_from_json(io::read_json_file(in.files[0]));
  Json doc;
  doc["valid"] = check.category.has_value();
  if (check.category) {
    Json iso = Json::array();
    for (const auto& [a, b] : isomorphic_objects(*check.category)) iso.push_back({a, b});
    doc["skeletal"] = iso.empty();
    doc["isomorphic"] = std::move(iso);
  }
  Json vs = Json::array();
  for (const auto& v : check.violations) vs.push_back(violation_json(v));
  doc["violations"] = std::move(vs);
  if (in.check) detail::verify(check.category.has_value() == check.violations.empty(), "verdict and witnesses disagree");
  return {doc, !check.category.has_value()};
}

inline Outcome do_macneille(const Invocation& in) {
  const QCategory cat = io::qcategory_from_json(io::read_json_file(in.files[0]));
  const MacNeille m = macneille(cat, in.guard);
  if (in.check) {
    for (const auto& [c, pc] : m.embedding) {
      for (const auto& [d, pd] : m.embedding) {
        detail::verify(hull_hom(m.view, pc, pd) == cat.hom(c, d), "embedding does not preserve hom at " + c + ", " + d);
      }
    }
    if (m.view.hull().is_explicit()) check_hull(m.view.hull());
  }
  Json doc;
  doc["objects"] = cat.objects().labels();
  Json emb = Json::object();
  for (const auto& [c, p] : m.embedding) emb[c] = io::to_json(p, in.style);
  doc["embedding"] = std::move(emb);
  doc["enumerated"] = m.view.hull().is_explicit();
  if (m.view.hull().is_explicit()) {
    const auto& els = m.view.hull().elements();
    Json images = Json::object();
    for (const auto& [c, p] : m.embedding) {
      images[c] = static_cast<std::size_t>(std::find(els.begin(), els.end(), p) - els.begin());
    }
    doc["hull"] = io::to_json(m.view.hull(), in.style);
    doc["images"] = std::move(images);
  }
  return {doc};
}

inline Outcome do_concepts(const Invocation& in) {
  const Context ctx = io::context_from_json(io::read_json_file(in.files[0]));
  const IsbellHull h = concepts(ctx, in.guard);
  if (in.check) check_hull(h);
  Json doc;
  doc["objects"] = ctx.objects().labels();
  doc["attributes"] = ctx.attributes().labels();
  Json cs = Json::array();
  for (const auto& p : h.elements()) {
    Json c;
    c["extent"] = extent(p);
    c["intent"] = intent(p);
    cs.push_back(std::move(c));
  }
  doc["concepts"] = std::move(cs);
  Json covers = Json::array();
  for (const auto& [lo, hi] : covering_pairs(h)) covers.push_back({lo, hi});
  doc["covers"] = std::move(covers);
  return {doc};
}

inline Outcome do_tropical_member(const Invocation& in) {
  const QMatrix z = detail::load_matrix(in.files[0]);
  const QMatrix x = detail::load_matrix(in.files[1]);
  const bool member = tropical_membership(z, x);
  const QMatrix closed = tropical_closure(z, x);
  if (in.check) {
    detail::verify(!member || closed == x.with_unit_row(), "member point is not closed");
    detail::verify(mat_leq(x.with_unit_row(), closed), "closure is not extensive");
  }
  Json doc;
  doc["member"] = member;
  doc["closure"] = io::to_json(closed, in.style);
  std::vector<std::string> warnings;
  if (has_infinite_entries(z)) warnings.push_back("generator matrix has infinite entries");
  if (has_infinite_entries(x)) warnings.push_back("point has infinite coordinates; it is outside the finite part");
  return {detail::with_warnings(std::move(doc), warnings)};
}

inline Outcome do_tropical_dual(const Invocation& in) {
  const QMatrix z = detail::load_matrix(in.files[0]);
  const IsbellPair p = io::pair_from_json(z, io::read_json_file(in.files[1]));
  const IsbellPair d = tropical_dual(z, p);
  if (in.check) detail::verify(tropical_dual(transpose(z), d) == p, "duality is not involutive here");
  Json doc;
  doc["ambient"] = io::to_json(transpose(z), in.style);
  doc["pair"] = io::to_json(d, in.style);
  return {doc};
}

inline Outcome do_tightspan(const Invocation& in) {
  const GeneralizedMetric m = io::metric_from_json(io::read_json_file(in.files[0]));
  Json emb = Json::object();
  std::vector<IsbellPair> pairs;
  for (const auto& c : m.points()) {
    pairs.push_back(tight_span_embed(m, c));
    emb[c] = io::to_json(pairs.back(), in.style);
  }
  const auto& pts = m.points();
  Json dist = Json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const QuantaleValue h = tight_span_hom(m, pairs[i], pairs[j]);
      if (in.check) detail::verify(h.as_extended() == m.distance(pts[i], pts[j]), "embedding is not isometric");
      row.push_back(io::to_json(h, in.style));
    }
    dist.push_back(std::move(row));
  }
  Json doc;
  doc["points"] = pts.labels();
  doc["embedding"] = std::move(emb);
  doc["distances"] = std::move(dist);
  return {doc};
}

inline Outcome do_lf(const Invocation& in) {
  const GridFunction f = io::grid_function_from_json(io::read_json_file(in.files[0]));
  const std::vector<GridPoint> dual = in.files.size() > 1 ? io::grid_from_json(io::read_json_file(in.files[1])) : f.grid();
  const GridFunction conj = lf_conjugate(f, dual);
  const GridFunction bi = lf_biconjugate(f, dual);
  if (in.check) {
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      detail::verify(bi.values()[i] <= f.values()[i], "biconjugate exceeds the function");
    }
    detail::verify(lf_conjugate(bi, dual) == conj, "third conjugate differs from the first");
  }
  Json doc;
  doc["conjugate"] = io::to_json(conj, in.style);
  doc["biconjugate"] = io::to_json(bi, in.style);
  return {doc};
}

struct Verb {
  const char* name;
  const char* help;
  std::vector<const char*> inputs;
  std::size_t optional = 0;
  Outcome (*run)(const Invocation&);
};

inline const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table = {
      {"compose", "matrix composition Y∘X", {"Y", "X"}, 0, do_compose},
      {"rext", "right extension Z↙X", {"Z", "X"}, 0, do_rext},
      {"rlift", "right lifting Y↘Z", {"Y", "Z"}, 0, do_rlift},
      {"closure", "least hull element above a row vector", {"Z", "X"}, 0, do_closure},
      {"member", "whether a row vector is in the hull", {"Z", "X"}, 0, do_member},
      {"complete-pair", "extend an under-approximating pair to a fixed pair", {"Z", "X0", "Y0"}, 0,
       do_complete_pair},
      {"hull", "enumerate a Boolean hull", {"Z"}, 0, do_hull},
      {"laws", "check the quantale laws on sample values", {"QUANTALE"}, 0, do_laws},
      {"qcat-check", "check the Q-category axioms", {"QCAT"}, 0, do_qcat_check},
      {"macneille", "completion with its embedding", {"QCAT"}, 0, do_macneille},
      {"concepts", "concept lattice of a formal context", {"CONTEXT"}, 0, do_concepts},
      {"tropical-member", "membership in a tropical polytope", {"Z", "POINT"}, 0, do_tropical_member},
      {"tropical-dual", "hull element of the transpose", {"Z", "PAIR"}, 0, do_tropical_dual},
      {"tightspan", "embed a generalised metric in its tight span", {"METRIC"}, 0, do_tightspan},
      {"lf", "Legendre-Fenchel conjugate and biconjugate on a grid", {"FUNCTION", "DUAL_GRID"}, 1, do_lf},
  };
  return table;
}

inline int fail(std::ostream& err, ErrorCode code, const std::string& message) {
  Json j;
  j["error"]["code"] = to_string(code);
  j["error"]["message"] = message;
  err << j.dump() << "\n";
  switch (code) {
    case ErrorCode::guard_exceeded: return kExitGuard;
    case ErrorCode::check_failed: return kExitFailed;
    default: return kExitInput;
  }
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear algebra over quantales", "residuate"};
  app.require_subcommand(1);
  Invocation inv;
  const Verb* chosen = nullptr;
  for (const auto& v : verbs()) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    for (std::size_t i = 0; i < v.inputs.size(); ++i) {
      // Positionals fill left to right; optional trailing ones may be absent.
      auto* opt = sub->add_option_function<std::string>(
          v.inputs[i], [&inv](const std::string& s) { inv.files.push_back(s); }, "input");
      if (i + v.optional < v.inputs.size()) opt->required();
    }
    sub->add_flag("--check", inv.check, "re-verify the result before printing it");
    sub->add_flag("--float", inv.style.decimal, "print decimals instead of exact rationals (lossy)");
    sub->callback([&chosen, &v] { chosen = &v; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, ErrorCode::usage_error, e.what());
  }

  try {
    inv.guard = detail::guard_from_env();
    Outcome o = chosen->run(inv);
    out << io::dump(o.doc);
    return o.failed ? kExitFailed : kExitOk;
  } catch (const Error& e) {
    return fail(err, e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(err, ErrorCode::parse_error, e.what());
  }
}

}  // namespace residuate::cli
