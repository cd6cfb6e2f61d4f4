#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gcurv/bakry_emery.hpp"
#include "gcurv/classification.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/ollivier.hpp"
#include "gcurv/rational.hpp"
#include "gcurv/spectral.hpp"

namespace gcurv {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Curvature notions and their parameters

enum class Notion { ollivier, ollivier_idleness, lly, bakry_emery, bakry_emery_dimension, bakry_emery_sign };

inline std::string_view notion_name(Notion n) {
  switch (n) {
    case Notion::ollivier: return "ollivier";
    case Notion::ollivier_idleness: return "ollivier_idleness";
    case Notion::lly: return "lly";
    case Notion::bakry_emery: return "bakry_emery";
    case Notion::bakry_emery_dimension: return "bakry_emery_dimension";
    case Notion::bakry_emery_sign: return "bakry_emery_sign";
  }
  return "?";
}

inline std::optional<Notion> parse_notion(std::string_view s) {
  for (Notion n : {Notion::ollivier, Notion::ollivier_idleness, Notion::lly, Notion::bakry_emery,
                   Notion::bakry_emery_dimension, Notion::bakry_emery_sign})
    if (notion_name(n) == s) return n;
  return std::nullopt;
}

inline bool is_edge_notion(Notion n) {
  return n == Notion::ollivier || n == Notion::ollivier_idleness || n == Notion::lly;
}

/// Raised when notion and parameters do not fit together.
class IncompatibleParams : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CurvatureRequest {
  Graph graph;
  Notion notion = Notion::ollivier;
  std::optional<Rational> idleness;
  std::optional<Dimension> dimension;
};

/// Checks notion/parameter compatibility and range.
inline void validate(const CurvatureRequest& req) {
  if (req.idleness && req.notion != Notion::ollivier_idleness)
    throw IncompatibleParams("idleness is only accepted with notion ollivier_idleness");
  if (req.dimension && req.notion != Notion::bakry_emery_dimension)
    throw IncompatibleParams("dimension is only accepted with notion bakry_emery_dimension");
  if (req.notion == Notion::ollivier_idleness && !req.idleness)
    throw IncompatibleParams("notion ollivier_idleness requires an idleness");
  if (req.notion == Notion::bakry_emery_dimension && !req.dimension)
    throw IncompatibleParams("notion bakry_emery_dimension requires a dimension");
  if (req.idleness && (*req.idleness < Rational(0) || *req.idleness > Rational(1)))
    throw DomainError("idleness " + to_string(*req.idleness) + " outside [0,1]");
}

// ---------------------------------------------------------------------------
// Value encodings

inline Json exact_value(const Rational& r) {
  return Json{{"fraction", to_string(r)}, {"decimal", round3(r)}};
}

/// Full-precision value rounded to 12 places so output is stable across platforms.
inline double stable(double v) {
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

inline Json real_value(double v) {
  return Json{{"decimal", round3(v)}, {"value", stable(v)}, {"sign", sign_name(sign_of(v))}};
}

// ---------------------------------------------------------------------------
// Documents

inline Json curvature_document(const CurvatureRequest& req) {
  validate(req);
  const Graph& g = req.graph;
  Json doc;
  doc["notion"] = notion_name(req.notion);
  Json params = Json::object();
  if (req.idleness) params["idleness"] = to_string(*req.idleness);
  if (req.dimension) params["dimension"] = req.dimension->str();
  doc["params"] = params;
  doc["vertex_count"] = g.order();
  if (is_edge_notion(req.notion)) {
    Json edges = Json::object();
    for (const Edge& e : g.edges()) {
      Rational k;
      if (req.notion == Notion::lly)
        k = kappa_lly(g, e.u, e.v);
      else
        k = kappa(g, e.u, e.v, req.idleness.value_or(Rational(0))).kappa;
      edges[e.key()] = exact_value(k);
    }
    doc["edges"] = edges;
  } else {
    const Dimension n = req.dimension.value_or(Dimension::infinite());
    Json vertices = Json::object();
    for (Vertex x = 0; x < g.order(); ++x) {
      const double k = be_curvature(g, x, n).curvature;
      if (req.notion == Notion::bakry_emery_sign)
        vertices[std::to_string(x)] = Json{{"sign", sign_name(sign_of(k))}};
      else
        vertices[std::to_string(x)] = real_value(k);
    }
    doc["vertices"] = vertices;
  }
  return doc;
}

inline Json verdict_document(const ClassificationVerdict& v) {
  Json doc;
  switch (v.kind) {
    case LadderKind::prism: doc["verdict"] = "Prism"; break;
    case LadderKind::mobius: doc["verdict"] = "Mobius"; break;
    case LadderKind::none: doc["verdict"] = "NotNonNegativelyCurved"; break;
  }
  if (v.kind != LadderKind::none) {
    doc["n"] = v.n;
    doc["name"] = v.name();
    return doc;
  }
  if (v.witness_edge) {
    doc["witness_edge"] = v.witness_edge->key();
    doc["witness_kappa0"] = exact_value(*v.witness_kappa);
  }
  if (v.witness_vertex) {
    doc["witness_vertex"] = *v.witness_vertex;
    doc["witness_curvature"] = real_value(*v.witness_curvature);
  }
  return doc;
}

inline Json spectrum_document(const SpectrumResult& s) {
  Json ev = Json::array();
  for (double v : s.eigenvalues) ev.push_back(std::round(v * 1e10) / 1e10 + 0.0);
  return Json{{"eigenvalues", ev},
              {"lambda1", std::round(s.lambda1 * 1e10) / 1e10},
              {"zero_multiplicity", s.zero_multiplicity}};
}

inline Json census_document(const std::vector<TwoBallClass>& census) {
  Json rows = Json::array();
  for (const auto& c : census)
    rows.push_back(Json{{"label", c.label},
                        {"triangles", c.triangles},
                        {"s2_size", c.structure.order() - 4},
                        {"adjacency", to_adjacency_text(c.structure)},
                        {"curvature", real_value(c.centre_curvature)},
                        {"complete_cubic", c.complete_cubic}});
  std::size_t negative = 0;
  for (const auto& c : census) negative += c.sign == Sign::negative;
  return Json{{"classes", census.size()}, {"negative", negative}, {"rows", rows}};
}

inline Json equivalence_document(const EquivalenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"order", row.order},
                        {"adjacency", to_adjacency_text(row.graph)},
                        {"cd_nonnegative", row.cd_nonnegative},
                        {"ollivier_nonnegative", row.ollivier_nonnegative},
                        {"recognised", row.recognised ? row.verdict.name() : "none"},
                        {"min_curvature", stable(row.min_curvature)},
                        {"min_kappa0", to_string(row.min_kappa0)},
                        {"agree", row.agree()}});
  return Json{{"max_order", r.max_order},
              {"classes", r.rows.size()},
              {"exceptions", r.exceptions()},
              {"holds", r.holds()},
              {"positive_set", r.positive_set},
              {"max_method_gap", r.max_method_gap()},
              {"rows", rows}};
}

}  // namespace gcurv
