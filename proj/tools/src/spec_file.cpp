#include "defectctl/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "crysdef/errors.hpp"

namespace defectctl {

using namespace crysdef;

namespace {

std::string where_of(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the offending character.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Schema view of one JSON object: unknown keys are rejected up front.
class Obj {
public:
  Obj(const Json& j, std::string path, std::initializer_list<std::string_view> keys)
      : j_(j), path_(std::move(path)) {
    if (!j.is_object())
      throw ParseError(path_, "expected an object");
    for (const auto& [k, v] : j.items()) {
      (void)v;
      if (std::find(keys.begin(), keys.end(), k) == keys.end())
        throw ParseError(path_ + "." + k, "unknown key");
    }
  }

  bool has(std::string_view k) const { return j_.contains(k); }
  std::string at_path(std::string_view k) const { return path_ + "." + std::string(k); }

  const Json& required(std::string_view k) const {
    if (!has(k))
      throw ParseError(at_path(k), "missing required key");
    return j_.at(std::string(k));
  }

  std::string str(std::string_view k) const {
    const Json& v = required(k);
    if (!v.is_string())
      throw ParseError(at_path(k), "expected a string");
    return v.get<std::string>();
  }

  Int integer(std::string_view k) const {
    const Json& v = required(k);
    if (!v.is_number_integer())
      throw ParseError(at_path(k), "expected an integer");
    return v.get<Int>();
  }

  unsigned natural(std::string_view k) const {
    const Int v = integer(k);
    if (v < 0 || v > 1000000)
      throw ParseError(at_path(k), "expected a non-negative integer");
    return static_cast<unsigned>(v);
  }

  bool boolean(std::string_view k) const {
    const Json& v = required(k);
    if (!v.is_boolean())
      throw ParseError(at_path(k), "expected true or false");
    return v.get<bool>();
  }

  const Json& raw() const noexcept { return j_; }

private:
  const Json& j_;
  std::string path_;
};

IntMat matrix_from(const Json& v, const std::string& path) {
  if (!v.is_array() || v.empty())
    throw ParseError(path, "expected a non-empty array of integer rows");
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].empty())
      throw ParseError(rp, "expected a non-empty array of integers");
    std::vector<Int> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      if (!v[i][j].is_number_integer())
        throw ParseError(rp + "[" + std::to_string(j) + "]", "expected an integer");
      row.push_back(v[i][j].get<Int>());
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(rp, "rows differ in length");
    rows.push_back(std::move(row));
  }
  return IntMat::from_rows(rows);
}

std::vector<unsigned> naturals_from(const Json& v, const std::string& path) {
  if (!v.is_array())
    throw ParseError(path, "expected an array of non-negative integers");
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<Int>() < 0)
      throw ParseError(path + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    out.push_back(static_cast<unsigned>(v[i].get<Int>()));
  }
  return out;
}

// Known keys that make no sense for the chosen variant.
void forbid(const Obj& o, std::string_view field_prefix, std::string_view variant,
            std::initializer_list<std::string_view> keys) {
  for (std::string_view k : keys)
    if (o.has(k))
      throw InconsistentSpec(std::string(field_prefix) + "." + std::string(k),
                             "not used by " + std::string(variant));
}

Manifold parse_manifold(const Json& j) {
  const Obj o(j, "$.system.manifold", {"type", "dim"});
  const std::string type = o.str("type");
  auto dim_or_two = [&] {
    if (o.has("dim") && o.natural("dim") != 2)
      throw InconsistentSpec("manifold.dim", type + " is two-dimensional");
  };
  if (type == "euclidean") return Manifold::euclidean(o.natural("dim"));
  if (type == "sphere") return Manifold::sphere(o.natural("dim"));
  if (type == "flat_torus") return Manifold::flat_torus(o.natural("dim"));
  if (type == "cylinder") return dim_or_two(), Manifold::cylinder();
  if (type == "torus2d") return dim_or_two(), Manifold::torus2d();
  if (type == "annulus") return dim_or_two(), Manifold::annulus();
  throw ParseError(o.at_path("type"), "unknown manifold '" + type +
                                          "' (euclidean, sphere, cylinder, torus2d, "
                                          "flat_torus, annulus)");
}

DefectSet parse_defect(const Json& j) {
  const Obj o(j, "$.system.defect", {"type", "count", "hyperplanes", "k"});
  const std::string type = o.str("type");
  if (type == "empty") {
    forbid(o, "defect", "an empty defect set", {"count", "hyperplanes", "k"});
    return DefectSet::empty();
  }
  if (type == "points") {
    forbid(o, "defect", "point defects", {"hyperplanes", "k"});
    return DefectSet::point_set(o.natural("count"));
  }
  if (type == "circle") {
    forbid(o, "defect", "a circle", {"count", "hyperplanes", "k"});
    return DefectSet::circle();
  }
  if (type == "arrangement") {
    forbid(o, "defect", "an arrangement", {"count"});
    const unsigned h = o.natural("hyperplanes");
    const Json& k = o.required("k");
    if (!k.is_array())
      throw ParseError(o.at_path("k"), "expected an array of slab rows");
    std::vector<std::vector<unsigned>> rows;
    for (std::size_t i = 0; i < k.size(); ++i)
      rows.push_back(naturals_from(k[i], o.at_path("k") + "[" + std::to_string(i) + "]"));
    return DefectSet::arrangement(h, std::move(rows));
  }
  throw ParseError(o.at_path("type"),
                   "unknown defect type '" + type + "' (empty, points, arrangement, circle)");
}

SymmetrySpec parse_symmetry(const Json& j) {
  const Obj o(j, "$.system.symmetry",
              {"type", "lattice", "matrix", "has_reflection", "group", "n", "torus_dim",
               "aut_lattice", "p_gv"});
  const std::string type = o.str("type");

  if (type == "planar_crystal") {
    forbid(o, "symmetry", type, {"group", "n", "torus_dim", "aut_lattice", "p_gv"});
    const std::string lattice = o.has("lattice") ? o.str("lattice") : "custom";
    if (lattice != "custom") {
      if (o.has("matrix"))
        throw InconsistentSpec("symmetry.matrix", "give either a named lattice or a matrix");
      Lattice l;
      try {
        l = lattice_from_name(lattice);
      } catch (const Error&) {
        throw ParseError(o.at_path("lattice"),
                         "unknown lattice '" + lattice +
                             "' (parallelogram, rectangle, square, hexagonal, custom)");
      }
      const PointGroup2D pg = PointGroup2D::named(l);
      if (o.has("has_reflection") && o.boolean("has_reflection") != pg.has_reflection())
        throw InconsistentSpec("symmetry.has_reflection",
                               lattice + " lattices " +
                                   (pg.has_reflection() ? "have" : "do not have") +
                                   " a reflection symmetry");
      return SymmetrySpec::planar_crystal(pg);
    }
    if (!o.has("matrix"))
      throw InconsistentSpec("symmetry.matrix", "a custom planar crystal needs a 2x2 matrix");
    const IntMat m = matrix_from(o.required("matrix"), o.at_path("matrix"));
    const bool refl = o.has("has_reflection") && o.boolean("has_reflection");
    return SymmetrySpec::planar_crystal(PointGroup2D::custom(m, refl));
  }

  if (type == "spatial_crystal") {
    forbid(o, "symmetry", type,
           {"lattice", "matrix", "group", "n", "torus_dim", "aut_lattice", "p_gv"});
    return SymmetrySpec::spatial_crystal(o.has("has_reflection") && o.boolean("has_reflection"));
  }

  if (type == "sphere_crystal") {
    forbid(o, "symmetry", type, {"lattice", "matrix", "torus_dim", "aut_lattice", "p_gv"});
    const std::string g = o.str("group");
    BinaryFamily f;
    try {
      f = family_from_name(g);
    } catch (const Error&) {
      throw ParseError(o.at_path("group"), "unknown binary polyhedral family '" + g +
                                               "' (cyclic, dihedral, tetrahedral, "
                                               "octahedral, icosahedral)");
    }
    BinaryKind kind{f, 0};
    if (kind.has_parameter())
      kind.n = o.natural("n");
    else
      forbid(o, "symmetry", g + " groups", {"n"});
    return SymmetrySpec::sphere_crystal(kind,
                                        o.has("has_reflection") && o.boolean("has_reflection"));
  }

  if (type == "torus_target") {
    forbid(o, "symmetry", type, {"lattice", "matrix", "has_reflection", "group", "n"});
    SymmetrySpec s = SymmetrySpec::torus_target();
    if (o.has("torus_dim")) s.torus_dim = o.natural("torus_dim");
    if (o.has("aut_lattice")) {
      const Json& a = o.required("aut_lattice");
      if (!a.is_array() || a.empty())
        throw ParseError(o.at_path("aut_lattice"), "expected a non-empty array of matrices");
      for (std::size_t i = 0; i < a.size(); ++i)
        s.aut_lattice.push_back(
            matrix_from(a[i], o.at_path("aut_lattice") + "[" + std::to_string(i) + "]"));
    }
    if (o.has("p_gv")) {
      const auto idx = naturals_from(o.required("p_gv"), o.at_path("p_gv"));
      s.p_gv = std::vector<std::size_t>(idx.begin(), idx.end());
    }
    return s;
  }

  throw ParseError(o.at_path("type"), "unknown symmetry type '" + type +
                                          "' (planar_crystal, spatial_crystal, "
                                          "sphere_crystal, torus_target)");
}

Options parse_options(const Json& j) {
  const Obj o(j, "$.options", {"window", "output", "compactify"});
  Options opts;
  if (o.has("window")) {
    opts.window = o.integer("window");
    if (opts.window < 1 || opts.window > 50)
      throw ParseError(o.at_path("window"), "window must lie in 1..50");
  }
  if (o.has("output")) {
    try {
      opts.output = output_from_name(o.str("output"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(o.at_path("output"), e.what());
    }
  }
  if (o.has("compactify")) opts.compactify = o.boolean("compactify");
  return opts;
}

void check_version(const Obj& root) {
  const std::string v = root.str("version");
  const std::string major = v.substr(0, v.find('.'));
  if (major != std::to_string(kSchemaMajor))
    throw ParseError(root.at_path("version"), "unsupported schema version '" + v +
                                                  "' (this tool reads " +
                                                  std::to_string(kSchemaMajor) + ".x)");
}

} // namespace

OutputFormat output_from_name(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("output must be \"json\" or \"text\"");
}

ParsedSpec parse_spec(std::string_view text) {
  ParsedSpec out;
  try {
    out.echo = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    throw ParseError(where_of(text, e.byte),
                     pos == std::string::npos ? msg : msg.substr(pos));
  }
  const Obj root(out.echo, "$", {"version", "system", "options"});
  check_version(root);
  const Obj sys(root.required("system"), "$.system", {"manifold", "defect", "symmetry", "vacua"});
  out.system.space.manifold = parse_manifold(sys.required("manifold"));
  out.system.space.defect =
      sys.has("defect") ? parse_defect(sys.required("defect")) : DefectSet::empty();
  out.system.symmetry = parse_symmetry(sys.required("symmetry"));
  if (sys.has("vacua")) out.system.vacua_count = sys.natural("vacua");
  if (root.has("options")) out.options = parse_options(root.required("options"));
  return out;
}

ParsedSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

} // namespace defectctl
