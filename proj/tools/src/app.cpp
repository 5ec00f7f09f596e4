#include "defectctl/app.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "crysdef/errors.hpp"
#include "defectctl/commands.hpp"
#include "defectctl/selftest.hpp"

namespace defectctl {

using namespace crysdef;

namespace {

PointGroup2D point_group_from_arg(const std::string& arg, bool reflection) {
  if (!arg.empty() && arg.front() == '[') {
    Json j;
    try {
      j = Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw ParseError("lattice", "matrix is not valid JSON");
    }
    std::vector<std::vector<Int>> rows;
    try {
      rows = j.get<std::vector<std::vector<Int>>>();
    } catch (const Json::exception&) {
      throw ParseError("lattice", "expected a matrix such as [[0,1],[-1,0]]");
    }
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
      throw InvalidPointGroup("point-group generator must be a 2x2 integer matrix");
    return PointGroup2D::custom(IntMat::from_rows(rows), reflection);
  }
  Lattice l;
  try {
    l = lattice_from_name(arg);
  } catch (const Error&) {
    throw ParseError("lattice", "unknown lattice '" + arg +
                                    "' (parallelogram, rectangle, square, hexagonal, or a "
                                    "matrix like [[0,1],[-1,0]])");
  }
  if (l == Lattice::Custom)
    throw ParseError("lattice", "give the custom generator as a matrix, e.g. [[0,1],[-1,0]]");
  return PointGroup2D::named(l);
}

std::vector<std::vector<unsigned>> slabs_from_arg(const std::string& arg) {
  try {
    return Json::parse(arg).get<std::vector<std::vector<unsigned>>>();
  } catch (const Json::exception&) {
    throw ParseError("--k", "expected rows of non-negative integers, e.g. [[1,0],[2,1]]");
  }
}

Manifold manifold_from_arg(const std::string& name, std::optional<unsigned> dim) {
  auto need_dim = [&] {
    if (!dim) throw ParseError("--dim", name + " needs --dim");
    return *dim;
  };
  if (name == "euclidean") return Manifold::euclidean(need_dim());
  if (name == "sphere") return Manifold::sphere(need_dim());
  if (name == "flat_torus") return Manifold::flat_torus(need_dim());
  Manifold m;
  if (name == "cylinder") m = Manifold::cylinder();
  else if (name == "torus2d") m = Manifold::torus2d();
  else if (name == "annulus") m = Manifold::annulus();
  else
    throw ParseError("manifold", "unknown manifold '" + name +
                                     "' (euclidean, sphere, cylinder, torus2d, flat_torus, "
                                     "annulus)");
  if (dim && *dim != 2) throw UnsupportedSpace("manifold.dim", name + " is two-dimensional");
  return m;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify topological defects in crystals and run the underlying calculators."};
  app.name("defectctl");
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string output = "json";
  Int window = 5;
  auto* output_opt = app.add_option("--output", output, "Report format")
                         ->check(CLI::IsMember({"json", "text"}));
  auto* window_opt =
      app.add_option("--window", window, "Window half-width for examples and the oracle")
          ->check(CLI::Range(Int{1}, Int{50}));

  auto* classify = app.add_subcommand("classify", "Classify defects for a spec file");
  std::string spec_path;
  classify->add_option("spec", spec_path, "System specification (JSON)")->required();

  auto* conjugacy =
      app.add_subcommand("conjugacy", "Conjugacy classes of Z^2 x|_M Z at fixed n3");
  std::string lattice_arg;
  std::optional<Int> n3;
  bool reflection = false;
  conjugacy->add_option("lattice", lattice_arg, "Lattice name or generator matrix")->required();
  conjugacy->add_option("n3", n3, "Disclination index (all residues if omitted)");
  conjugacy->add_flag("--reflection", reflection, "Custom generator: a reflection is a symmetry");

  auto* spherical = app.add_subcommand("spherical", "Binary polyhedral group structure");
  std::string family;
  std::optional<unsigned> group_n;
  spherical->add_option("kind", family, "cyclic, dihedral, tetrahedral, octahedral, icosahedral")
      ->required();
  spherical->add_option("n", group_n, "Parameter of the cyclic and dihedral families");

  auto* retract_cmd = app.add_subcommand("retract", "Homotopy type of a punctured manifold");
  std::string manifold_name;
  std::optional<unsigned> dim;
  std::optional<unsigned> points, hyperplanes;
  std::string k_arg;
  bool circle = false;
  retract_cmd->add_option("manifold", manifold_name, "Manifold kind")->required();
  retract_cmd->add_option("--dim", dim, "Dimension");
  retract_cmd->add_option("--points", points, "Number of removed points");
  retract_cmd->add_option("--hyperplanes", hyperplanes, "Number of parallel hyperplanes");
  retract_cmd->add_option("--k", k_arg, "Slab contents k[i][j], JSON rows");
  retract_cmd->add_flag("--circle", circle, "Remove a circle (R^3 only)");

  auto* selftest = app.add_subcommand("selftest", "Run the regression fixtures");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << "\n";
      return kExitOk;
    }
    err << "defectctl: error: " << e.what() << "\n";
    return kExitParse;
  }

  const bool window_given = window_opt->count() > 0;
  const bool output_given = output_opt->count() > 0;
  OutputFormat format = output_from_name(output);
  std::string field_prefix;

  try {
    Json report;
    int code = kExitOk;
    if (classify->parsed()) {
      field_prefix = "system.";
      const ParsedSpec spec = load_spec(spec_path);
      if (!output_given) format = spec.options.output;
      report = classify_report(spec, window_given ? window : spec.options.window);
    } else if (conjugacy->parsed()) {
      const PointGroup2D pg = point_group_from_arg(lattice_arg, reflection);
      report = conjugacy_report(pg, lattice_arg, n3,
                                window_given ? std::optional<Int>(window) : std::nullopt, window);
    } else if (spherical->parsed()) {
      BinaryFamily f;
      try {
        f = family_from_name(family);
      } catch (const Error&) {
        throw ParseError("kind", "unknown binary polyhedral family '" + family + "'");
      }
      BinaryKind kind{f, 0};
      if (kind.has_parameter()) {
        if (!group_n) throw ParseError("n", family + " needs a parameter n");
        kind.n = *group_n;
      } else if (group_n) {
        throw ParseError("n", family + " takes no parameter");
      }
      report = spherical_report(kind);
    } else if (retract_cmd->parsed()) {
      Json input;
      input["manifold"] = manifold_name;
      input["dim"] = dim ? Json(*dim) : Json(nullptr);
      SpaceSpec space{manifold_from_arg(manifold_name, dim), DefectSet::empty()};
      const int chosen = (points ? 1 : 0) + (hyperplanes || !k_arg.empty() ? 1 : 0) + (circle ? 1 : 0);
      if (chosen > 1)
        throw ParseError("defect", "choose one of --points, --hyperplanes/--k, --circle");
      if (points) {
        space.defect = DefectSet::point_set(*points);
        input["points"] = *points;
      } else if (hyperplanes || !k_arg.empty()) {
        const unsigned h = hyperplanes.value_or(0);
        auto k = k_arg.empty() ? std::vector<std::vector<unsigned>>(
                                     h + 1, std::vector<unsigned>(
                                                space.manifold.dim >= 2 ? space.manifold.dim - 1 : 0, 0))
                               : slabs_from_arg(k_arg);
        input["hyperplanes"] = h;
        input["k"] = k;
        space.defect = DefectSet::arrangement(h, std::move(k));
      } else if (circle) {
        space.defect = DefectSet::circle();
        input["circle"] = true;
      }
      report = retract_report(space, std::move(input));
    } else if (selftest->parsed()) {
      const auto cells = run_selftest(default_fixtures(), window);
      report = selftest_report(cells, window);
      for (const auto& c : cells)
        if (!c.pass) {
          err << "defectctl: selftest: FAIL " << c.cell << ": " << c.detail << "\n";
          code = kExitSelftestFailed;
        }
    }
    out << (format == OutputFormat::Json ? dump(report) : render_text(report));
    return code;
  } catch (const ParseError& e) {
    err << "defectctl: error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SpecError& e) {
    err << "defectctl: error [" << field_prefix << e.field() << "]: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "defectctl: error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    err << "defectctl: internal error: " << e.what() << "\n";
    return kExitUnsupported;
  }
}

} // namespace defectctl
