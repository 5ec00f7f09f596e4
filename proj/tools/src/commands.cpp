#include "defectctl/commands.hpp"

#include <sstream>

#include "crysdef/checked.hpp"

namespace defectctl {

using namespace crysdef;

namespace {

std::vector<std::string> classify_refs(const OrderParamDescriptor& t) {
  std::vector<std::string> refs{"classification: product over components, coproduct over vacua"};
  switch (t.kind) {
  case TargetKind::PlanarCrystal:
    refs.push_back("fixture: planar conjugacy classes by n3 residue");
    break;
  case TargetKind::SpatialCrystal:
    refs.push_back("fixture: spatial crystal textures");
    break;
  case TargetKind::SphereCrystal:
    refs.push_back("fixture: binary polyhedral groups");
    break;
  case TargetKind::Torus:
    refs.push_back("fixture: punctured torus-family surfaces");
    break;
  }
  return refs;
}

Json n3_entry(const PointGroup2D& pg, Int n3, bool explicit_n3,
              std::optional<Int> oracle_window, Int window) {
  const Int n = pg.order();
  const Int r = checked::mod(n3, n);
  Json e;
  e["n3"] = explicit_n3 ? std::to_string(n3) : std::to_string(r) + " mod " + std::to_string(n);
  e["residue"] = r;
  e["modulus"] = n;
  const ClassSet cs = f_classes(pg, n3);
  e["classes"] = class_set_json(cs, window);
  if (oracle_window) {
    const Partition brute = brute_force_classes(pg, n3, *oracle_window);
    const Partition closed = restrict_to_window(cs, *oracle_window);
    e["oracle"] = {{"window", *oracle_window},
                   {"conjugator_bound", 3 * *oracle_window},
                   {"oracle_classes", brute.size()},
                   {"closed_form_classes", closed.size()},
                   {"verdict", brute == closed ? "AGREE" : "DISAGREE"}};
  }
  return e;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string class_set_text(const Json& cs) {
  if (cs["kind"] == "finite") return cs["set"].get<std::string>();
  return cs["predicate"].get<std::string>();
}

void render_classify(std::ostringstream& o, const Json& r) {
  const Json& res = r["result"];
  o << "space:           " << res["space"]["manifold"].get<std::string>() << " minus "
    << res["space"]["defect"].get<std::string>() << "\n";
  o << "order parameter: " << res["order_parameter"].get<std::string>() << "\n";
  if (res["compactified"].get<bool>()) o << "compactified:    yes\n";
  for (const Json& c : res["components"]) {
    o << "component " << c["index"].get<std::size_t>() << ":     "
      << c["homotopy_type"].get<std::string>() << "  (H^1 rank " << c["h1_rank"].get<unsigned>()
      << ")\n";
    o << "  classes:       " << c["classes"]["text"].get<std::string>() << "\n";
    for (const Json& f : c["classes"]["factors"]) {
      if (f["kind"] == "planar_conjugacy_classes") {
        for (const Json& e : f["by_n3"])
          o << "    n3 = " << pad(e["n3"].get<std::string>() + ":", 10)
            << class_set_text(e["classes"]) << "\n";
      }
    }
    o << "  cardinality:   " << c["cardinality"]["text"].get<std::string>() << "\n";
  }
  const Json& ch = res["chirality"];
  o << "chirality:       " << ch["size"].get<std::size_t>() << " coset(s) of p(Gv) in "
    << ch["group"].get<std::string>() << ":";
  for (const Json& s : ch["cosets"]) o << " " << s.get<std::string>();
  o << "\n";
  o << "vacua:           " << res["vacua"].get<unsigned>() << "\n";
  o << "cardinality:     " << res["cardinality"]["text"].get<std::string>() << "\n";
}

void render_conjugacy(std::ostringstream& o, const Json& r) {
  const Json& res = r["result"];
  o << "conjugacy classes of Z^2 x|_M Z: lattice " << res["lattice"].get<std::string>()
    << ", M = " << res["generator"].get<std::string>() << ", N = " << res["order"].get<Int>()
    << "\n";
  for (const Json& e : res["by_n3"]) {
    o << "  n3 = " << pad(e["n3"].get<std::string>() + ":", 10) << class_set_text(e["classes"]);
    if (e["classes"]["kind"] == "fundamental_domain")
      o << "  [" << e["classes"]["domain"].get<std::string>() << "]";
    o << "\n";
    if (e.contains("oracle"))
      o << "  " << pad("", 15) << "oracle B=" << e["oracle"]["window"].get<Int>() << ": "
        << e["oracle"]["oracle_classes"].get<std::size_t>() << " classes in window, "
        << e["oracle"]["verdict"].get<std::string>() << "\n";
  }
}

void render_spherical(std::ostringstream& o, const Json& r) {
  const Json& g = r["result"];
  o << g["group"].get<std::string>() << "  (" << g["ade"].get<std::string>() << ", axes "
    << g["axes"].get<std::string>() << ", over " << g["field"].get<std::string>() << ")\n";
  o << "order:           " << g["order"].get<std::size_t>() << "\n";
  o << "classes:         computed " << g["computed_class_count"].get<std::size_t>()
    << ", published " << g["published_class_count"].get<unsigned>() << " -> "
    << g["agreement"].get<std::string>() << "\n";
  o << "class equation:  ";
  bool first = true;
  for (const Json& s : g["class_equation"]) {
    o << (first ? "" : " + ") << s.get<std::size_t>();
    first = false;
  }
  o << " = " << g["order"].get<std::size_t>() << "\n";
  o << "  " << pad("size", 6) << pad("rotation", 10) << pad("spin", 10) << "representative\n";
  for (const Json& c : g["classes"])
    o << "  " << pad(std::to_string(c["size"].get<std::size_t>()), 6)
      << pad(c["rotation_angle"].get<std::string>(), 10)
      << pad(c["spin_angle"].get<std::string>(), 10) << c["representative"].get<std::string>()
      << "\n";
}

void render_retract(std::ostringstream& o, const Json& r) {
  const Json& res = r["result"];
  o << res["manifold"].get<std::string>() << " minus " << res["defect"].get<std::string>()
    << ": " << res["components"].size() << " component(s)\n";
  for (const Json& c : res["components"])
    o << "  [" << c["index"].get<std::size_t>() << "] "
      << pad(c["homotopy_type"].get<std::string>(), 24) << "H^1 rank "
      << c["h1_rank"].get<unsigned>() << "\n";
}

void render_selftest(std::ostringstream& o, const Json& r) {
  const Json& res = r["result"];
  for (const Json& c : res["cells"]) {
    o << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["cell"].get<std::string>();
    if (!c["pass"].get<bool>()) o << "  -- " << c["detail"].get<std::string>();
    o << "\n";
  }
  o << res["passed"].get<std::size_t>() << "/" << res["total"].get<std::size_t>()
    << " cells passed\n";
}

} // namespace

Json classify_report(const ParsedSpec& spec, Int window) {
  const SystemSpec& sys = spec.system;
  const DefectReport r = spec.options.compactify ? textures(sys, true) : classify(sys);
  return envelope("classify", spec.echo, defect_report_json(r, window), classify_refs(r.target));
}

Json conjugacy_report(const PointGroup2D& pg, const std::string& lattice_arg,
                      std::optional<Int> n3, std::optional<Int> oracle_window, Int window) {
  Json input;
  input["lattice"] = lattice_arg;
  input["n3"] = n3 ? Json(*n3) : Json(nullptr);
  input["window"] = window;
  input["oracle_window"] = oracle_window ? Json(*oracle_window) : Json(nullptr);
  input["has_reflection"] = pg.has_reflection();

  Json res;
  res["lattice"] = std::string(pg.name());
  res["generator"] = pg.generator().to_string();
  res["order"] = pg.order();
  res["has_reflection"] = pg.has_reflection();
  Json entries = Json::array();
  if (n3) {
    entries.push_back(n3_entry(pg, *n3, true, oracle_window, window));
  } else {
    for (Int r = 0; r < static_cast<Int>(pg.order()); ++r)
      entries.push_back(n3_entry(pg, r, false, oracle_window, window));
  }
  res["by_n3"] = std::move(entries);
  return envelope("conjugacy", std::move(input), std::move(res),
                  {"fixture: planar conjugacy classes by n3 residue"});
}

Json spherical_report(const BinaryKind& kind) {
  Json input;
  input["family"] = std::string(family_name(kind.family));
  input["n"] = kind.has_parameter() ? Json(kind.n) : Json(nullptr);
  return envelope("spherical", std::move(input), binary_group_json(kind),
                  {"fixture: binary polyhedral groups"});
}

Json retract_report(const SpaceSpec& space, Json input) {
  Json res;
  res["manifold"] = space.manifold.to_string();
  res["defect"] = space.defect.to_string();
  Json comps = Json::array();
  const auto parts = retract(space);
  for (std::size_t i = 0; i < parts.size(); ++i)
    comps.push_back({{"index", i},
                     {"homotopy_type", parts[i].to_string()},
                     {"h1_rank", h1(parts[i])}});
  res["components"] = std::move(comps);
  return envelope("retract", std::move(input), std::move(res),
                  {"fixture: punctured torus-family surfaces"});
}

std::string render_text(const Json& report) {
  std::ostringstream o;
  const std::string cmd = report["command"].get<std::string>();
  o << cmd << "  (" << kToolName << " " << kToolVersion << ")\n";
  if (cmd == "classify") render_classify(o, report);
  else if (cmd == "conjugacy") render_conjugacy(o, report);
  else if (cmd == "spherical") render_spherical(o, report);
  else if (cmd == "retract") render_retract(o, report);
  else if (cmd == "selftest") render_selftest(o, report);
  return o.str();
}

} // namespace defectctl
