#include "defectctl/selftest.hpp"

#include "crysdef/errors.hpp"

namespace defectctl {

using namespace crysdef;

namespace {

const Lattice kNamed[] = {Lattice::Parallelogram, Lattice::Rectangle, Lattice::Square,
                          Lattice::Hexagonal};

std::vector<std::vector<unsigned>> empty_slabs(unsigned hyperplanes) {
  return std::vector<std::vector<unsigned>>(hyperplanes + 1, std::vector<unsigned>{0});
}

SystemSpec planar_system(Lattice l, DefectSet x) {
  return {{Manifold::euclidean(2), std::move(x)},
          SymmetrySpec::planar_crystal(PointGroup2D::named(l)), 1};
}

SystemSpec sphere_system(BinaryKind k, unsigned m, bool refl) {
  return {{Manifold::sphere(2), DefectSet::point_set(m)}, SymmetrySpec::sphere_crystal(k, refl), 1};
}

std::string card_text(const Cardinality& c) { return c.to_string(); }

CellResult check_planar(const PlanarFixture& f) {
  const PointGroup2D pg = PointGroup2D::named(f.lattice);
  CellResult r{planar_cell_name(f.lattice, f.residue, pg.order()), true, ""};
  const ClassSet cs = f_classes(pg, f.residue);
  if (cs.is_finite() != f.finite) {
    r.pass = false;
    r.detail = std::string("expected ") + (f.finite ? "a finite set" : "a fundamental domain");
  } else if (f.finite && cs.representatives() != f.representatives) {
    r.pass = false;
    r.detail = "expected " + set_text(f.representatives) + ", got " +
               set_text(cs.representatives());
  } else if (!f.finite && cs.domain() != f.domain) {
    r.pass = false;
    r.detail = "expected domain " + std::string(domain_kind_name(f.domain)) + ", got " +
               std::string(domain_kind_name(cs.domain()));
  }
  return r;
}

CellResult check_oracle(const OracleFixture& f, Int window) {
  const PointGroup2D pg = PointGroup2D::named(f.lattice);
  CellResult r{"oracle / " + std::string(lattice_name(f.lattice)) + " / n3 in [" +
                   std::to_string(f.n3_lo) + "," + std::to_string(f.n3_hi) + "] / B=" +
                   std::to_string(window),
               true, ""};
  for (Int n3 = f.n3_lo; n3 <= f.n3_hi; ++n3) {
    if (brute_force_classes(pg, n3, window) != restrict_to_window(f_classes(pg, n3), window)) {
      r.pass = false;
      r.detail = "partitions differ at n3=" + std::to_string(n3);
      break;
    }
  }
  return r;
}

CellResult check_binary(const BinaryFixture& f) {
  CellResult r{"binary / " + f.kind.to_string(), true, ""};
  const BinaryGroup g = build_group(f.kind);
  const auto classes = conjugacy_classes(g);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  if (g.order() != f.order) {
    r.pass = false;
    r.detail = "expected order " + std::to_string(f.order) + ", got " + std::to_string(g.order());
  } else if (classes.size() != f.class_count) {
    r.pass = false;
    r.detail = "expected " + std::to_string(f.class_count) + " classes, got " +
               std::to_string(classes.size());
  } else if (total != g.order()) {
    r.pass = false;
    r.detail = "class equation does not sum to the order";
  }
  return r;
}

CellResult check_punctured(const PuncturedFixture& f) {
  CellResult r{"punctured / " + f.manifold.to_string() + " / m=" + std::to_string(f.points), true,
               ""};
  const auto comps = retract({f.manifold, DefectSet::point_set(f.points)});
  const unsigned got = comps.size() == 1 ? h1(comps.front()) : ~0u;
  if (got != f.h1) {
    r.pass = false;
    r.detail = "expected H^1 rank " + std::to_string(f.h1) + ", got " + std::to_string(got);
  }
  return r;
}

CellResult check_composite(const CompositeFixture& f) {
  CellResult r{"composite / " + f.name, true, ""};
  const DefectReport rep = f.textures ? textures(f.system, f.compactify) : classify(f.system);
  if (!(rep.cardinality == f.expected)) {
    r.pass = false;
    r.detail = "expected " + card_text(f.expected) + ", got " + card_text(rep.cardinality);
  }
  return r;
}

template <class F>
CellResult guarded(const std::string& fallback_name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {fallback_name, false, std::string("threw: ") + e.what()};
  }
}

} // namespace

std::string planar_cell_name(Lattice l, Int residue, Int modulus) {
  return "planar / " + std::string(lattice_name(l)) + " / n3=" + std::to_string(residue) +
         " mod " + std::to_string(modulus);
}

Fixtures default_fixtures() {
  Fixtures fx;
  using V = std::vector<Vec2>;
  const auto fin = [](Lattice l, Int r, V reps) {
    return PlanarFixture{l, r, true, std::move(reps), DomainKind::AllOfZ2};
  };
  const auto dom = [](Lattice l, Int r, DomainKind d) {
    return PlanarFixture{l, r, false, {}, d};
  };
  fx.planar = {
      dom(Lattice::Parallelogram, 0, DomainKind::AllOfZ2),
      dom(Lattice::Rectangle, 0, DomainKind::HalfPlane),
      fin(Lattice::Rectangle, 1, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}),
      dom(Lattice::Square, 0, DomainKind::Cone),
      fin(Lattice::Square, 1, {{0, 0}, {0, 1}}),
      fin(Lattice::Square, 2, {{0, 0}, {0, 1}, {1, 1}}),
      fin(Lattice::Square, 3, {{0, 0}, {0, 1}}),
      dom(Lattice::Hexagonal, 0, DomainKind::Cone),
      fin(Lattice::Hexagonal, 1, {{0, 0}}),
      fin(Lattice::Hexagonal, 2, {{0, 0}, {0, 1}}),
      fin(Lattice::Hexagonal, 3, {{0, 0}, {0, 1}}),
      fin(Lattice::Hexagonal, 4, {{0, 0}, {0, 1}}),
      fin(Lattice::Hexagonal, 5, {{0, 0}}),
  };
  for (Lattice l : kNamed) fx.oracle.push_back({l, -8, 8});

  for (unsigned n = 1; n <= 6; ++n) fx.binary.push_back({BinaryKind::cyclic(n), 2 * n, 2 * n});
  for (unsigned n = 2; n <= 6; ++n) fx.binary.push_back({BinaryKind::dihedral(n), 4 * n, n + 3});
  fx.binary.push_back({BinaryKind::tetrahedral(), 24, 7});
  fx.binary.push_back({BinaryKind::octahedral(), 48, 8});
  fx.binary.push_back({BinaryKind::icosahedral(), 120, 9});

  for (unsigned m = 0; m <= 3; ++m) {
    fx.punctured.push_back({Manifold::cylinder(), m, m + 1});
    fx.punctured.push_back({Manifold::torus2d(), m, m == 0 ? 2u : m + 1});
    for (unsigned n = 2; n <= 4; ++n)
      fx.punctured.push_back({Manifold::flat_torus(n), m, m == 0 ? n : (n == 2 ? m + 1 : 0u)});
    fx.punctured.push_back({Manifold::annulus(), m, m + 1});
  }

  const auto f = Cardinality::finite;
  fx.composite = {
      {"domain walls / parallelogram / 2 parallel lines",
       planar_system(Lattice::Parallelogram, DefectSet::arrangement(2, empty_slabs(2))), false,
       false, f(8)},
      {"domain walls / square / 2 parallel lines",
       planar_system(Lattice::Square, DefectSet::arrangement(2, empty_slabs(2))), false, false,
       f(1)},
      {"sphere / tetrahedral / m=0", sphere_system(BinaryKind::tetrahedral(), 0, false), false,
       false, f(2)},
      {"sphere / tetrahedral with reflection / m=0",
       sphere_system(BinaryKind::tetrahedral(), 0, true), false, false, f(1)},
      {"sphere / tetrahedral / m=2", sphere_system(BinaryKind::tetrahedral(), 2, false), false,
       false, f(14)},
      {"sphere / tetrahedral / m=3", sphere_system(BinaryKind::tetrahedral(), 3, false), false,
       false, f(98)},
      {"textures / parallelogram / compactified",
       planar_system(Lattice::Parallelogram, DefectSet::empty()), true, true, f(2)},
      {"textures / square / compactified", planar_system(Lattice::Square, DefectSet::empty()),
       true, true, f(1)},
  };
  return fx;
}

std::vector<CellResult> run_selftest(const Fixtures& fx, Int window) {
  std::vector<CellResult> out;
  for (const auto& f : fx.planar)
    out.push_back(guarded("planar / " + std::string(lattice_name(f.lattice)),
                          [&] { return check_planar(f); }));
  for (const auto& f : fx.oracle)
    out.push_back(guarded("oracle / " + std::string(lattice_name(f.lattice)),
                          [&] { return check_oracle(f, window); }));
  for (const auto& f : fx.binary)
    out.push_back(guarded("binary / " + f.kind.to_string(), [&] { return check_binary(f); }));
  for (const auto& f : fx.punctured)
    out.push_back(guarded("punctured / " + f.manifold.to_string(),
                          [&] { return check_punctured(f); }));
  for (const auto& f : fx.composite)
    out.push_back(guarded("composite / " + f.name, [&] { return check_composite(f); }));
  return out;
}

Json selftest_report(const std::vector<CellResult>& cells, Int window) {
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& c : cells) {
    Json e;
    e["cell"] = c.cell;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
    if (c.pass) ++passed;
  }
  Json res;
  res["window"] = window;
  res["total"] = cells.size();
  res["passed"] = passed;
  res["failed"] = cells.size() - passed;
  res["cells"] = std::move(arr);
  return envelope("selftest", Json{{"window", window}}, std::move(res),
                  {"fixture: planar conjugacy classes by n3 residue",
                   "fixture: binary polyhedral groups", "fixture: punctured torus-family surfaces",
                   "classification: product over components, coproduct over vacua"});
}

} // namespace defectctl
