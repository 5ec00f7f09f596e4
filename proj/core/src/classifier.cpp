#include "crysdef/classifier.hpp"

namespace crysdef {

SymmetrySpec SymmetrySpec::planar_crystal(const PointGroup2D& pg) {
  SymmetrySpec s;
  s.kind = Kind::PlanarCrystal;
  s.planar = pg;
  s.has_reflection = pg.has_reflection();
  return s;
}

SymmetrySpec SymmetrySpec::spatial_crystal(bool has_reflection) {
  SymmetrySpec s;
  s.kind = Kind::SpatialCrystal;
  s.has_reflection = has_reflection;
  return s;
}

SymmetrySpec SymmetrySpec::sphere_crystal(BinaryKind kind, bool has_reflection) {
  SymmetrySpec s;
  s.kind = Kind::SphereCrystal;
  s.binary = kind;
  s.has_reflection = has_reflection;
  return s;
}

SymmetrySpec SymmetrySpec::torus_target(std::optional<std::vector<std::size_t>> p_gv) {
  SymmetrySpec s;
  s.kind = Kind::TorusTarget;
  s.p_gv = std::move(p_gv);
  return s;
}

unsigned default_torus_dim(const Manifold& m) {
  switch (m.kind) {
  case ManifoldKind::Cylinder: return 2;  // G0 = R x S^1
  case ManifoldKind::Torus2D: return 1;   // G0 = S^1
  case ManifoldKind::Annulus: return 1;   // G0 = S^1
  case ManifoldKind::FlatTorus: return m.dim;
  default:
    throw InconsistentSpec("manifold", m.to_string() + " has no torus order parameter space");
  }
}

namespace {

MatrixGroup pi0_for(const SystemSpec& spec) {
  const Manifold& m = spec.space.manifold;
  switch (m.kind) {
  case ManifoldKind::Cylinder:
  case ManifoldKind::Torus2D:
    if (!spec.symmetry.aut_lattice.empty())
      throw InconsistentSpec("symmetry.aut_lattice", "only flat tori take a lattice automorphism group");
    return MatrixGroup::klein_four();
  case ManifoldKind::Annulus:
    if (!spec.symmetry.aut_lattice.empty())
      throw InconsistentSpec("symmetry.aut_lattice", "only flat tori take a lattice automorphism group");
    return MatrixGroup::z2();
  case ManifoldKind::FlatTorus: {
    const auto& aut = spec.symmetry.aut_lattice;
    if (aut.empty())
      throw InconsistentSpec("symmetry.aut_lattice",
                             "a flat torus needs Aut(Lambda) as a list of integer matrices");
    for (const IntMat& g : aut)
      if (g.rows() != m.dim || g.cols() != m.dim)
        throw InconsistentSpec("symmetry.aut_lattice",
                               "automorphism " + g.to_string() + " is not " +
                                   std::to_string(m.dim) + "x" + std::to_string(m.dim));
    try {
      return MatrixGroup::lattice_automorphisms(aut);
    } catch (const InconsistentSpec& e) {
      throw InconsistentSpec("symmetry.aut_lattice", e.what());
    }
  }
  default:
    break;
  }
  throw InconsistentSpec("manifold", m.to_string() + " has no torus order parameter space");
}

} // namespace

OrderParamDescriptor order_param_space(const SystemSpec& spec) {
  const Manifold& m = spec.space.manifold;
  const SymmetrySpec& sym = spec.symmetry;
  using K = SymmetrySpec::Kind;

  if (m.is_torus_family()) {
    if (sym.kind != K::TorusTarget)
      throw InconsistentSpec("symmetry.type", m.to_string() + " requires a torus_target symmetry");
    MatrixGroup pi0 = pi0_for(spec);
    std::vector<std::size_t> p_gv = sym.p_gv.value_or(std::vector<std::size_t>{pi0.identity_index()});
    unsigned dim = sym.torus_dim.value_or(default_torus_dim(m));
    return OrderParamDescriptor::torus(dim, std::move(pi0), std::move(p_gv));
  }

  switch (sym.kind) {
  case K::PlanarCrystal:
    if (m.kind != ManifoldKind::Euclidean || m.dim != 2)
      throw InconsistentSpec("symmetry.type", "a planar lattice needs the manifold R^2, not " +
                                                  m.to_string());
    if (!sym.planar)
      throw InconsistentSpec("symmetry.lattice", "planar crystal without a point group");
    return OrderParamDescriptor::planar_crystal(*sym.planar);
  case K::SpatialCrystal:
    if (m.kind != ManifoldKind::Euclidean || m.dim != 3)
      throw InconsistentSpec("symmetry.type", "a spatial crystal needs the manifold R^3, not " +
                                                  m.to_string());
    return OrderParamDescriptor::spatial_crystal(sym.has_reflection);
  case K::SphereCrystal:
    if (m.kind != ManifoldKind::Sphere || m.dim != 2)
      throw InconsistentSpec("symmetry.type", "binary polyhedral symmetry needs the manifold S^2, not " +
                                                  m.to_string());
    if (!sym.binary)
      throw InconsistentSpec("symmetry.group", "sphere crystal without a group");
    return OrderParamDescriptor::sphere_crystal(*sym.binary, sym.has_reflection);
  case K::TorusTarget:
    throw InconsistentSpec("symmetry.type", "torus_target symmetry needs a cylinder, torus, "
                                            "flat torus or annulus, not " + m.to_string());
  }
  throw InconsistentSpec("symmetry.type", "unknown symmetry");
}

namespace {

ChiralityFactor chirality_of(const OrderParamDescriptor& target) {
  ChiralityFactor c;
  c.group = target.pi0.name();
  const auto cosets = target.pi0.cosets(target.p_gv);
  c.size = cosets.size();
  for (const auto& coset : cosets) {
    std::string label;
    for (std::size_t i : coset)
      label += (label.empty() ? "" : ",") + target.pi0.labels()[i];
    c.coset_labels.push_back("{" + label + "}");
  }
  return c;
}

DefectReport assemble(const SystemSpec& spec, const OrderParamDescriptor& target,
                      const std::vector<HomotopyType>& components, bool compactified) {
  if (spec.vacua_count < 1)
    throw InconsistentSpec("vacua", "at least one vacuum is required");
  DefectReport r;
  r.space = spec.space;
  r.target = target;
  r.chirality = chirality_of(target);
  r.vacua_count = spec.vacua_count;
  r.compactified = compactified;
  r.cardinality = Cardinality::finite(1);
  const Cardinality per_vacuum_choice =
      Cardinality::finite(static_cast<Int>(spec.vacua_count)) *
      Cardinality::finite(static_cast<Int>(r.chirality.size));
  for (const HomotopyType& a : components) {
    ComponentReport c{a, maps_into(a, target), {}};
    c.cardinality = c.classes.size() * per_vacuum_choice;
    r.cardinality = r.cardinality * c.cardinality;
    r.per_component.push_back(std::move(c));
  }
  return r;
}

} // namespace

ChiralityFactor chirality_factor(const SystemSpec& spec) {
  return chirality_of(order_param_space(spec));
}

DefectReport classify(const SystemSpec& spec) {
  const OrderParamDescriptor target = order_param_space(spec);
  return assemble(spec, target, retract(spec.space), false);
}

DefectReport textures(const SystemSpec& spec, bool compactify) {
  if (!spec.space.defect.is_empty())
    throw NonEmptyDefectSet("defect", "textures need an empty defective set, got " +
                                          spec.space.defect.to_string());
  const OrderParamDescriptor target = order_param_space(spec);
  const Manifold& m = spec.space.manifold;
  if (compactify && m.kind == ManifoldKind::Euclidean) {
    // Fields that relax at infinity extend to the one-point compactification.
    return assemble(spec, target, {HomotopyType::wedge({m.dim})}, true);
  }
  return assemble(spec, target, retract(spec.space), false);
}

} // namespace crysdef
