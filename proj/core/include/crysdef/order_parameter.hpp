#ifndef CRYSDEF_ORDER_PARAMETER_HPP_
#define CRYSDEF_ORDER_PARAMETER_HPP_

// Descriptors of order parameter spaces G0 / (G0 n Gv) and of the
// component group pi0(G), shared by the homotopy and classifier modules.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crysdef/intlin.hpp"
#include "crysdef/semidirect.hpp"
#include "crysdef/spherical.hpp"

namespace crysdef {

// A finite group given by faithful integer matrices, with display labels.
class MatrixGroup {
public:
  MatrixGroup() = default;
  // Validates identity, closure and invertibility over Z.
  MatrixGroup(std::string name, std::vector<IntMat> elements,
              std::vector<std::string> labels);

  static MatrixGroup trivial();
  static MatrixGroup z2();          // {+1, -1}
  static MatrixGroup klein_four();  // diag(+-1, +-1)
  // Automorphisms of a lattice given in lattice coordinates; labels are the
  // matrices themselves.
  static MatrixGroup lattice_automorphisms(std::vector<IntMat> elements);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<IntMat>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::size_t index_of(const IntMat& m) const; // throws if absent
  std::size_t identity_index() const;
  bool is_subgroup(const std::vector<std::size_t>& indices) const;
  // Left cosets g H, each as a sorted index list; ordered by least index.
  std::vector<std::vector<std::size_t>> cosets(const std::vector<std::size_t>& subgroup) const;

private:
  std::string name_;
  std::vector<IntMat> elements_;
  std::vector<std::string> labels_;
};

enum class TargetKind { PlanarCrystal, SpatialCrystal, SphereCrystal, Torus };

struct OrderParamDescriptor {
  TargetKind kind = TargetKind::PlanarCrystal;
  std::optional<PointGroup2D> planar;  // PlanarCrystal
  std::optional<BinaryKind> binary;    // SphereCrystal
  bool has_reflection = false;         // crystals: a reflection is a symmetry
  unsigned torus_dim = 0;              // Torus
  MatrixGroup pi0;                     // pi0(G)
  std::vector<std::size_t> p_gv;       // p(G_v) as indices into pi0

  static OrderParamDescriptor planar_crystal(const PointGroup2D& pg);
  static OrderParamDescriptor spatial_crystal(bool has_reflection);
  static OrderParamDescriptor sphere_crystal(BinaryKind kind, bool has_reflection);
  // Throws SubgroupNotContained when p_gv is not a subgroup of pi0.
  static OrderParamDescriptor torus(unsigned dim, MatrixGroup pi0,
                                    std::vector<std::size_t> p_gv);

  std::string to_string() const;
};

} // namespace crysdef

#endif
