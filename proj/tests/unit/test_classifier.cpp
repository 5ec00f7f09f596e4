#include <gtest/gtest.h>

#include "crysdef/classifier.hpp"
#include "crysdef/errors.hpp"

using namespace crysdef;

namespace {

SystemSpec planar(Lattice l, DefectSet x, unsigned vacua = 1) {
  return {{Manifold::euclidean(2), std::move(x)},
          SymmetrySpec::planar_crystal(PointGroup2D::named(l)), vacua};
}

SystemSpec sphere_points(BinaryKind k, unsigned m, bool refl = false) {
  return {{Manifold::sphere(2), DefectSet::point_set(m)}, SymmetrySpec::sphere_crystal(k, refl), 1};
}

SystemSpec torus_points(Manifold mf, unsigned m) {
  return {{mf, DefectSet::point_set(m)}, SymmetrySpec::torus_target(), 1};
}

std::vector<IntMat> square_aut_3d() {
  // The 48 signed permutation matrices.
  std::vector<IntMat> out;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    for (int s = 0; s < 8; ++s) {
      IntMat m(3, 3);
      for (int r = 0; r < 3; ++r) m(r, p[r]) = (s >> r) & 1 ? -1 : 1;
      out.push_back(m);
    }
  return out;
}

std::vector<std::vector<unsigned>> empty_slabs(unsigned h) {
  return std::vector<std::vector<unsigned>>(h + 1, std::vector<unsigned>{0});
}

} // namespace

TEST(OrderParamSpace, Examples) {
  const auto sq = order_param_space(planar(Lattice::Square, DefectSet::point_set(1)));
  EXPECT_EQ(sq.kind, TargetKind::PlanarCrystal);
  EXPECT_EQ(sq.planar->lattice(), Lattice::Square);
  const auto cyl = order_param_space(torus_points(Manifold::cylinder(), 1));
  EXPECT_EQ(cyl.kind, TargetKind::Torus);
  EXPECT_EQ(cyl.torus_dim, 2u);
  EXPECT_EQ(cyl.pi0.size(), 4u);
  const auto ico = order_param_space(sphere_points(BinaryKind::icosahedral(), 2));
  EXPECT_EQ(ico.kind, TargetKind::SphereCrystal);
  EXPECT_EQ(order_param_space(torus_points(Manifold::annulus(), 0)).pi0.size(), 2u);
}

TEST(OrderParamSpace, InconsistentSpecs) {
  SystemSpec bad = sphere_points(BinaryKind::tetrahedral(), 1);
  bad.space.manifold = Manifold::euclidean(2);
  try {
    order_param_space(bad);
    FAIL();
  } catch (const InconsistentSpec& e) {
    EXPECT_EQ(e.field(), "symmetry.type");
  }
  EXPECT_THROW(order_param_space(torus_points(Manifold::flat_torus(3), 0)), InconsistentSpec);
  SystemSpec cyl = planar(Lattice::Square, DefectSet::point_set(1));
  cyl.space.manifold = Manifold::cylinder();
  EXPECT_THROW(order_param_space(cyl), InconsistentSpec);
  SystemSpec flat = torus_points(Manifold::flat_torus(2), 0);
  flat.symmetry.aut_lattice = {IntMat{{1, 0}, {0, 1}}, IntMat{{2, 0}, {0, 1}}};
  EXPECT_THROW(order_param_space(flat), InconsistentSpec);
}

TEST(Chirality, Examples) {
  EXPECT_EQ(chirality_factor(planar(Lattice::Square, DefectSet::point_set(1))).size, 1u);
  EXPECT_EQ(chirality_factor(planar(Lattice::Parallelogram, DefectSet::point_set(1))).size, 2u);
  const auto cyl = chirality_factor(torus_points(Manifold::cylinder(), 1));
  EXPECT_EQ(cyl.size, 4u);
  EXPECT_EQ(cyl.coset_labels.front(), "{(+,+)}");
  SystemSpec half = torus_points(Manifold::cylinder(), 1);
  half.symmetry.p_gv = std::vector<std::size_t>{0, 1};
  EXPECT_EQ(chirality_factor(half).size, 2u);
  half.symmetry.p_gv = std::vector<std::size_t>{1};
  EXPECT_THROW(chirality_factor(half), SubgroupNotContained);
}

TEST(Classify, HexagonalPointDefect) {
  const DefectReport r = classify(planar(Lattice::Hexagonal, DefectSet::point_set(1)));
  ASSERT_EQ(r.per_component.size(), 1u);
  EXPECT_EQ(r.chirality.size, 1u);
  ASSERT_EQ(r.per_component[0].classes.factors.size(), 1u);
  EXPECT_EQ(r.per_component[0].classes.factors[0].kind, ClassFactor::Kind::PlanarConjClasses);
  EXPECT_EQ(r.cardinality.kind, Cardinality::Kind::ParametrizedFamily);
}

TEST(Classify, DomainWalls) {
  const DefectReport r =
      classify(planar(Lattice::Parallelogram, DefectSet::arrangement(2, empty_slabs(2))));
  EXPECT_EQ(r.per_component.size(), 3u);
  EXPECT_EQ(r.cardinality, Cardinality::finite(8));
  const DefectReport s =
      classify(planar(Lattice::Square, DefectSet::arrangement(2, empty_slabs(2))));
  EXPECT_EQ(s.cardinality, Cardinality::finite(1));
}

TEST(Classify, DomainWallsWithVacua) {
  for (unsigned v = 1; v <= 4; ++v)
    for (unsigned h = 0; h <= 3; ++h) {
      const DefectReport r =
          classify(planar(Lattice::Parallelogram, DefectSet::arrangement(h, empty_slabs(h)), v));
      Int expected = 1;
      for (unsigned c = 0; c <= h; ++c) expected *= 2 * v;
      EXPECT_EQ(r.cardinality, Cardinality::finite(expected)) << v << " " << h;
    }
}

TEST(Classify, VacuaDoubleSingleComponentCounts) {
  SystemSpec s = sphere_points(BinaryKind::tetrahedral(), 2);
  const Int base = classify(s).cardinality.value;
  s.vacua_count = 2;
  EXPECT_EQ(classify(s).cardinality.value, 2 * base);
  s.vacua_count = 0;
  EXPECT_THROW(classify(s), InconsistentSpec);
}

TEST(Classify, SphereTetrahedralTwoPoints) {
  EXPECT_EQ(classify(sphere_points(BinaryKind::tetrahedral(), 2)).cardinality,
            Cardinality::finite(14));
  EXPECT_EQ(classify(sphere_points(BinaryKind::tetrahedral(), 2, true)).cardinality,
            Cardinality::finite(7));
}

TEST(Classify, SphereRecurrence) {
  const std::vector<BinaryKind> kinds = {BinaryKind::cyclic(3), BinaryKind::dihedral(4),
                                         BinaryKind::tetrahedral(), BinaryKind::octahedral(),
                                         BinaryKind::icosahedral()};
  for (const BinaryKind& k : kinds) {
    const Int classes = static_cast<Int>(conjugacy_classes(build_group(k)).size());
    for (bool refl : {false, true}) {
      EXPECT_EQ(classify(sphere_points(k, 0, refl)).cardinality.value, refl ? 1 : 2);
      for (unsigned m = 1; m <= 4; ++m) {
        const Int a = classify(sphere_points(k, m, refl)).cardinality.value;
        const Int b = classify(sphere_points(k, m + 1, refl)).cardinality.value;
        EXPECT_EQ(b, a * classes) << k.to_string() << " m=" << m;
      }
    }
  }
}

TEST(Classify, TorusFamily) {
  SystemSpec t = torus_points(Manifold::torus2d(), 1);
  DefectReport r = classify(t);
  EXPECT_EQ(r.per_component[0].classes.factors[0].rank, 2u);
  EXPECT_EQ(r.chirality.size, 4u);
  t.symmetry.torus_dim = 2;
  r = classify(t);
  EXPECT_EQ(r.per_component[0].classes.factors[0].rank, 4u);
  EXPECT_EQ(r.chirality.size, 4u);
  EXPECT_EQ(r.cardinality, Cardinality::countable());

  SystemSpec cyl = torus_points(Manifold::cylinder(), 2);
  EXPECT_EQ(classify(cyl).per_component[0].classes.factors[0].rank, 6u);
}

TEST(Classify, ComponentCountMatchesRetract) {
  const std::vector<SystemSpec> specs = {
      planar(Lattice::Square, DefectSet::point_set(3)),
      planar(Lattice::Rectangle, DefectSet::arrangement(3, empty_slabs(3))),
      sphere_points(BinaryKind::dihedral(3), 3),
      torus_points(Manifold::annulus(), 2),
  };
  for (const SystemSpec& s : specs)
    EXPECT_EQ(classify(s).per_component.size(), retract(s.space).size());
}

TEST(Textures, PlanarCompactified) {
  EXPECT_EQ(textures(planar(Lattice::Parallelogram, DefectSet::empty()), true).cardinality,
            Cardinality::finite(2));
  EXPECT_EQ(textures(planar(Lattice::Square, DefectSet::empty()), true).cardinality,
            Cardinality::finite(1));
  EXPECT_EQ(textures(planar(Lattice::Hexagonal, DefectSet::empty()), false).cardinality,
            Cardinality::finite(1));
  EXPECT_EQ(textures(planar(Lattice::Parallelogram, DefectSet::empty()), false).cardinality,
            Cardinality::finite(2));
}

TEST(Textures, SpatialCompactifiedCarriesMarker) {
  const SystemSpec s{{Manifold::euclidean(3), DefectSet::empty()},
                     SymmetrySpec::spatial_crystal(false), 1};
  const DefectReport r = textures(s, true);
  ASSERT_EQ(r.per_component.size(), 1u);
  const auto& f = r.per_component[0].classes.factors;
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].rank, 1u);
  EXPECT_TRUE(f[0].action.has_value());
  EXPECT_EQ(r.chirality.size, 2u);
}

TEST(Textures, FlatThreeTorus) {
  SystemSpec s = torus_points(Manifold::flat_torus(3), 0);
  s.symmetry.aut_lattice = square_aut_3d();
  const DefectReport r = textures(s, false);
  EXPECT_EQ(r.per_component[0].classes.factors[0].rank, 9u);
  EXPECT_EQ(r.chirality.size, 48u);
}

TEST(Textures, AgreeWithClassifyOnCompactSpaces) {
  const std::vector<SystemSpec> specs = {
      sphere_points(BinaryKind::octahedral(), 0),
      torus_points(Manifold::torus2d(), 0),
      torus_points(Manifold::annulus(), 0),
  };
  for (const SystemSpec& s : specs) {
    const DefectReport a = classify(s), b = textures(s, false);
    EXPECT_EQ(a.cardinality, b.cardinality);
    EXPECT_EQ(a.per_component.size(), b.per_component.size());
  }
}

TEST(Textures, RejectNonEmptyDefects) {
  EXPECT_THROW(textures(planar(Lattice::Square, DefectSet::point_set(1)), true),
               NonEmptyDefectSet);
}
