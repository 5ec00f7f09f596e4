#include "defectctl/report.hpp"

namespace defectctl {

using namespace crysdef;

Json vec_json(const Vec2& v) { return Json::array({v[0], v[1]}); }

std::string vec_text(const Vec2& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}

std::string set_text(const std::vector<Vec2>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? ", " : "") + vec_text(vs[i]);
  return s + "}";
}

Json cardinality_json(const Cardinality& c) {
  Json j;
  switch (c.kind) {
  case Cardinality::Kind::Finite:
    j["kind"] = "finite";
    j["value"] = c.value;
    break;
  case Cardinality::Kind::CountablyInfinite:
    j["kind"] = "countably_infinite";
    break;
  case Cardinality::Kind::ParametrizedFamily:
    j["kind"] = "parametrized_family";
    j["family"] = c.family;
    break;
  }
  j["text"] = c.to_string();
  return j;
}

Json class_set_json(const ClassSet& cs, Int window) {
  Json j;
  if (cs.is_finite()) {
    j["kind"] = "finite";
    j["count"] = cs.size();
    Json reps = Json::array();
    for (const Vec2& v : cs.representatives()) reps.push_back(vec_json(v));
    j["representatives"] = std::move(reps);
    j["set"] = set_text(cs.representatives());
    return j;
  }
  j["kind"] = "fundamental_domain";
  j["domain"] = std::string(domain_kind_name(cs.domain()));
  j["predicate"] = cs.predicate();
  j["window"] = window;
  Json ex = Json::array();
  for (Int a = -window; a <= window; ++a)
    for (Int b = -window; b <= window; ++b)
      if (cs.contains({a, b})) ex.push_back(vec_json({a, b}));
  j["examples"] = std::move(ex);
  return j;
}

Json planar_families_json(const PointGroup2D& pg, Int window) {
  Json arr = Json::array();
  const Int n = pg.order();
  for (Int r = 0; r < n; ++r) {
    Json e;
    e["n3"] = std::to_string(r) + " mod " + std::to_string(n);
    e["residue"] = r;
    e["modulus"] = n;
    e["classes"] = class_set_json(f_classes(pg, r), window);
    arr.push_back(std::move(e));
  }
  return arr;
}

Json binary_group_json(const BinaryKind& kind) {
  const BinaryGroup g = build_group(kind);
  const auto classes = conjugacy_classes(g);
  Json j;
  j["group"] = kind.to_string();
  j["family"] = std::string(family_name(kind.family));
  if (kind.has_parameter()) j["n"] = kind.n;
  j["ade"] = kind.ade_label();
  j["axes"] = kind.axis_triple();
  j["field"] = g.field_d() == 1 ? "Q" : "Q(sqrt" + std::to_string(g.field_d()) + ")";
  j["order"] = g.order();
  j["expected_order"] = kind.expected_order();
  j["computed_class_count"] = classes.size();
  j["published_class_count"] = kind.published_class_count();
  j["agreement"] = classes.size() == kind.published_class_count() ? "AGREE" : "DIFFER";
  Json eq = Json::array();
  for (std::size_t s : class_equation(g)) eq.push_back(s);
  j["class_equation"] = std::move(eq);
  Json cl = Json::array();
  for (const auto& c : classes) {
    const AngleDescriptor a = rotation_angle(c.front());
    Json e;
    e["size"] = c.size();
    e["rotation_angle"] = a.rotation_label();
    e["spin_angle"] = a.spin_label();
    e["cos_rotation"] = a.cos_rotation.to_string();
    e["representative"] = c.front().to_string();
    cl.push_back(std::move(e));
  }
  j["classes"] = std::move(cl);
  Json angles = Json::array();
  for (const auto& s : rotation_angle_labels(g)) angles.push_back(s);
  j["rotation_angles"] = std::move(angles);
  return j;
}

Json factor_json(const ClassFactor& f, Int window) {
  Json j;
  switch (f.kind) {
  case ClassFactor::Kind::FiniteSet: {
    j["kind"] = "finite_set";
    j["count"] = f.count;
    Json labels = Json::array();
    for (const auto& l : f.labels) labels.push_back(l);
    j["labels"] = std::move(labels);
    break;
  }
  case ClassFactor::Kind::FreeAbelian:
    j["kind"] = "free_abelian";
    j["rank"] = f.rank;
    if (f.action) j["modulo_action"] = *f.action;
    break;
  case ClassFactor::Kind::PlanarConjClasses:
    j["kind"] = "planar_conjugacy_classes";
    j["lattice"] = std::string(f.planar->name());
    j["generator"] = f.planar->generator().to_string();
    j["by_n3"] = planar_families_json(*f.planar, window);
    break;
  case ClassFactor::Kind::BinaryConjClasses:
    j["kind"] = "binary_conjugacy_classes";
    j["group"] = f.binary->to_string();
    j["class_count"] = f.class_count;
    break;
  }
  j["sphere_dim"] = f.sphere_dim;
  j["exponent"] = f.exponent;
  j["size"] = cardinality_json(f.size());
  j["text"] = f.to_string();
  return j;
}

Json defect_report_json(const DefectReport& r, Int window) {
  Json j;
  j["space"] = {{"manifold", r.space.manifold.to_string()},
                {"defect", r.space.defect.to_string()}};
  j["order_parameter"] = r.target.to_string();
  Json comps = Json::array();
  for (std::size_t i = 0; i < r.per_component.size(); ++i) {
    const ComponentReport& c = r.per_component[i];
    Json e;
    e["index"] = i;
    e["homotopy_type"] = c.component.to_string();
    e["h1_rank"] = h1(c.component);
    Json factors = Json::array();
    for (const auto& f : c.classes.factors) factors.push_back(factor_json(f, window));
    e["classes"] = {{"text", c.classes.to_string()}, {"factors", std::move(factors)}};
    e["cardinality"] = cardinality_json(c.cardinality);
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  Json cosets = Json::array();
  for (const auto& s : r.chirality.coset_labels) cosets.push_back(s);
  j["chirality"] = {{"group", r.chirality.group},
                    {"size", r.chirality.size},
                    {"cosets", std::move(cosets)}};
  j["vacua"] = r.vacua_count;
  j["compactified"] = r.compactified;
  j["cardinality"] = cardinality_json(r.cardinality);
  return j;
}

Json provenance_json(std::vector<std::string> cross_refs) {
  Json refs = Json::array();
  for (auto& s : cross_refs) refs.push_back(std::move(s));
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"schema", std::to_string(kSchemaMajor) + ".x"},
          {"cross_refs", std::move(refs)}};
}

Json envelope(const std::string& command, Json input, Json result,
              std::vector<std::string> cross_refs) {
  Json j;
  j["tool"] = kToolName;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["provenance"] = provenance_json(std::move(cross_refs));
  return j;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

} // namespace defectctl
