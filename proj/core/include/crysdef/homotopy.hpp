#ifndef CRYSDEF_HOMOTOPY_HPP_
#define CRYSDEF_HOMOTOPY_HPP_

// Symbolic homotopy types of punctured manifolds, first cohomology, and the
// homotopy classes of maps from such spaces into order parameter spaces.

#include <optional>
#include <string>
#include <vector>

#include "crysdef/order_parameter.hpp"

namespace crysdef {

// Point, a wedge of spheres, an n-torus, or a disjoint union of those.
class HomotopyType {
public:
  enum class Kind { Point, Wedge, Torus, Disjoint };

  static HomotopyType point();
  // Empty wedge normalizes to a point. Dimensions must be >= 1.
  static HomotopyType wedge(std::vector<unsigned> sphere_dims);
  static HomotopyType wedge_of(unsigned count, unsigned dim);
  static HomotopyType torus(unsigned n); // T^0 is a point
  // A single part normalizes to that part.
  static HomotopyType disjoint(std::vector<HomotopyType> parts);

  Kind kind() const noexcept { return kind_; }
  // Sorted ascending. Wedge only.
  const std::vector<unsigned>& spheres() const noexcept { return spheres_; }
  unsigned torus_dim() const noexcept { return torus_dim_; }
  const std::vector<HomotopyType>& parts() const noexcept { return parts_; }

  unsigned count_spheres(unsigned dim) const;
  std::string to_string() const;

  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;

private:
  Kind kind_ = Kind::Point;
  std::vector<unsigned> spheres_;
  unsigned torus_dim_ = 0;
  std::vector<HomotopyType> parts_;
};

enum class ManifoldKind { Euclidean, Sphere, Cylinder, Torus2D, FlatTorus, Annulus };

struct Manifold {
  ManifoldKind kind = ManifoldKind::Euclidean;
  unsigned dim = 2;

  static Manifold euclidean(unsigned n) { return {ManifoldKind::Euclidean, n}; }
  static Manifold sphere(unsigned n) { return {ManifoldKind::Sphere, n}; }
  static Manifold cylinder() { return {ManifoldKind::Cylinder, 2}; }
  static Manifold torus2d() { return {ManifoldKind::Torus2D, 2}; }
  static Manifold flat_torus(unsigned n) { return {ManifoldKind::FlatTorus, n}; }
  static Manifold annulus() { return {ManifoldKind::Annulus, 2}; }

  bool is_torus_family() const noexcept {
    return kind == ManifoldKind::Cylinder || kind == ManifoldKind::Torus2D ||
           kind == ManifoldKind::FlatTorus || kind == ManifoldKind::Annulus;
  }
  std::string to_string() const;
};

std::string manifold_kind_name(ManifoldKind k);

enum class DefectKind { Empty, Points, Arrangement, Circle };

// The defective set X. An arrangement in R^n is given combinatorially:
// `hyperplanes` parallel (n-1)-planes cut R^n into hyperplanes + 1 slabs,
// and k[i][j] counts the j-dimensional subspaces inside slab i
// (j = 0 .. n-2).
struct DefectSet {
  DefectKind kind = DefectKind::Empty;
  unsigned points = 0;
  unsigned hyperplanes = 0;
  std::vector<std::vector<unsigned>> k;

  static DefectSet empty() { return {}; }
  static DefectSet point_set(unsigned m) { return {DefectKind::Points, m, 0, {}}; }
  static DefectSet arrangement(unsigned hyperplanes, std::vector<std::vector<unsigned>> k) {
    return {DefectKind::Arrangement, 0, hyperplanes, std::move(k)};
  }
  static DefectSet circle() { return {DefectKind::Circle, 0, 0, {}}; }

  // Empty sets and zero points are the same defective set.
  bool is_empty() const noexcept {
    return kind == DefectKind::Empty || (kind == DefectKind::Points && points == 0);
  }
  std::string to_string() const;
};

struct SpaceSpec {
  Manifold manifold;
  DefectSet defect;
};

// One homotopy type per connected component of M \ X.
// Throws UnsupportedSpace for pairs outside the catalog.
std::vector<HomotopyType> retract(const SpaceSpec& s);

// Rank of H^1(t; Z).
unsigned h1(const HomotopyType& t);

// Set sizes: a finite count, a countable set, or a countable family that is
// reported by a symbolic description.
struct Cardinality {
  enum class Kind { Finite, CountablyInfinite, ParametrizedFamily };
  Kind kind = Kind::Finite;
  Int value = 1;          // Finite only
  std::string family;     // ParametrizedFamily only

  static Cardinality finite(Int n) { return {Kind::Finite, n, {}}; }
  static Cardinality countable() { return {Kind::CountablyInfinite, 0, {}}; }
  static Cardinality parametrized(std::string f) {
    return {Kind::ParametrizedFamily, 0, std::move(f)};
  }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  std::string to_string() const;

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

// Product of sets; zero annihilates, families dominate plain countable sets.
Cardinality operator*(const Cardinality& a, const Cardinality& b);
// Power a^e.
Cardinality pow(const Cardinality& a, unsigned e);

// One factor of hTop[A, V]: a set raised to `exponent` (one copy per sphere
// of the relevant dimension).
struct ClassFactor {
  enum class Kind { FiniteSet, FreeAbelian, PlanarConjClasses, BinaryConjClasses };
  Kind kind = Kind::FiniteSet;
  unsigned exponent = 1;
  unsigned sphere_dim = 1;

  Int count = 1;                     // FiniteSet
  std::vector<std::string> labels;   // FiniteSet
  unsigned rank = 0;                 // FreeAbelian
  // FreeAbelian: the group is reported before quotienting by an action that
  // is not computed; `action` names it.
  std::optional<std::string> action;
  std::optional<PointGroup2D> planar; // PlanarConjClasses
  std::optional<BinaryKind> binary;   // BinaryConjClasses
  Int class_count = 0;                // BinaryConjClasses

  Cardinality size() const;
  std::string to_string() const;
};

// hTop[A, V] as a product of factors; no factors means a single class.
struct ClassDescriptor {
  std::vector<ClassFactor> factors;

  bool is_trivial() const;
  Cardinality size() const;
  std::string to_string() const;
};

// Throws UnsupportedPair when no rule covers (t, target).
ClassDescriptor maps_into(const HomotopyType& t, const OrderParamDescriptor& target);

} // namespace crysdef

#endif
