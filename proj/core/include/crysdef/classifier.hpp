#ifndef CRYSDEF_CLASSIFIER_HPP_
#define CRYSDEF_CLASSIFIER_HPP_

// Def_M(X): the set of topologically distinct defect configurations of a
// crystal on M that are singular on X,
//
//   prod over components A of M \ X of
//     coprod over vacua of  hTop[A, G0/(G0 n Gv)] x pi0(G)/p(Gv).

#include <optional>
#include <string>
#include <vector>

#include "crysdef/homotopy.hpp"
#include "crysdef/order_parameter.hpp"

namespace crysdef {

// The symmetry data a user supplies; order_param_space() turns it into an
// OrderParamDescriptor once it has been checked against the space.
struct SymmetrySpec {
  enum class Kind { PlanarCrystal, SpatialCrystal, SphereCrystal, TorusTarget };
  Kind kind = Kind::PlanarCrystal;

  std::optional<PointGroup2D> planar;  // PlanarCrystal
  std::optional<BinaryKind> binary;    // SphereCrystal
  bool has_reflection = false;         // SpatialCrystal, SphereCrystal

  // TorusTarget. torus_dim overrides the dimension of G0; aut_lattice is
  // pi0(G) for flat tori; p_gv indexes pi0(G) and defaults to {identity}.
  std::optional<unsigned> torus_dim;
  std::vector<IntMat> aut_lattice;
  std::optional<std::vector<std::size_t>> p_gv;

  static SymmetrySpec planar_crystal(const PointGroup2D& pg);
  static SymmetrySpec spatial_crystal(bool has_reflection);
  static SymmetrySpec sphere_crystal(BinaryKind kind, bool has_reflection);
  static SymmetrySpec torus_target(std::optional<std::vector<std::size_t>> p_gv = std::nullopt);
};

struct SystemSpec {
  SpaceSpec space;
  SymmetrySpec symmetry;
  unsigned vacua_count = 1;
};

// Throws InconsistentSpec when symmetry and space do not fit together.
OrderParamDescriptor order_param_space(const SystemSpec& spec);

// Dimension of G0 / (G0 n Gv) for the torus-family manifolds when the
// user does not override it: cylinder 2, torus 1, annulus 1, flat n-torus n.
unsigned default_torus_dim(const Manifold& m);

struct ChiralityFactor {
  std::size_t size = 1;
  std::vector<std::string> coset_labels;
  std::string group; // name of pi0(G)
};

ChiralityFactor chirality_factor(const SystemSpec& spec);

struct ComponentReport {
  HomotopyType component;
  ClassDescriptor classes;
  Cardinality cardinality; // vacua x |classes| x chirality
};

struct DefectReport {
  SpaceSpec space;
  OrderParamDescriptor target;
  std::vector<ComponentReport> per_component;
  ChiralityFactor chirality;
  unsigned vacua_count = 1;
  bool compactified = false;
  Cardinality cardinality;
};

DefectReport classify(const SystemSpec& spec);

// Textures (empty defective set). With compactify on R^n, maps out of the
// one-point compactification S^n are classified instead.
// Throws NonEmptyDefectSet unless the defective set is empty.
DefectReport textures(const SystemSpec& spec, bool compactify);

} // namespace crysdef

#endif
