#ifndef CRYSDEF_SPHERICAL_HPP_
#define CRYSDEF_SPHERICAL_HPP_

// Binary polyhedral groups: the finite subgroups of SU(2) = Spin(3), built
// exactly as unit quaternions over a single real quadratic field.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crysdef/quadratic.hpp"

namespace crysdef {

enum class BinaryFamily { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

std::string_view family_name(BinaryFamily f);
BinaryFamily family_from_name(std::string_view name);

struct BinaryKind {
  BinaryFamily family = BinaryFamily::Cyclic;
  unsigned n = 0; // only meaningful for the cyclic and dihedral families

  static BinaryKind cyclic(unsigned n) { return {BinaryFamily::Cyclic, n}; }
  static BinaryKind dihedral(unsigned n) { return {BinaryFamily::Dihedral, n}; }
  static BinaryKind tetrahedral() { return {BinaryFamily::Tetrahedral, 0}; }
  static BinaryKind octahedral() { return {BinaryFamily::Octahedral, 0}; }
  static BinaryKind icosahedral() { return {BinaryFamily::Icosahedral, 0}; }

  bool has_parameter() const noexcept {
    return family == BinaryFamily::Cyclic || family == BinaryFamily::Dihedral;
  }
  unsigned expected_order() const;
  // ADE label (metadata only): "A", "D", "E6", "E7", "E8".
  std::string ade_label() const;
  // Orders of the rotation axes of the image in SO(3), e.g. "(2,3,5)".
  std::string axis_triple() const;
  // Class count as printed in the published classification table
  // (n, n+3, 7, 9, 11). Reported next to the computed count, never trusted.
  unsigned published_class_count() const;
  std::string to_string() const;

  friend bool operator==(const BinaryKind&, const BinaryKind&) = default;
};

class BinaryGroup {
public:
  // Builds from an explicit element list, checking closure, inverses and
  // the expected order. The given order of elements is preserved.
  static BinaryGroup from_elements(BinaryKind kind, std::vector<QQuat> elements);

  BinaryKind kind() const noexcept { return kind_; }
  Int field_d() const noexcept { return d_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<QQuat>& elements() const noexcept { return elements_; }
  bool contains(const QQuat& q) const;

private:
  BinaryGroup(BinaryKind kind, Int d, std::vector<QQuat> elements);

  BinaryKind kind_;
  Int d_;
  std::vector<QQuat> elements_;
};

// Throws UnsupportedOrder when cos(pi/n) does not live in one quadratic
// field (supported n: 1..6 for both families).
BinaryGroup build_group(BinaryKind kind);

// Generators used by build_group, exposed for tests.
std::vector<QQuat> generators(BinaryKind kind);

// SO(3) rotation angle of the image of a unit quaternion, kept exactly as
// cos(theta) = 2 w^2 - 1. w itself is kept to tell q from -q.
struct AngleDescriptor {
  QuadExt cos_rotation;
  QuadExt w;

  // "2pi/3"-style label of the rotation angle theta in [0, pi].
  std::string rotation_label() const;
  // Label of the spin angle 2 arccos(w) in [0, 2pi].
  std::string spin_label() const;

  friend bool operator==(const AngleDescriptor&, const AngleDescriptor&) = default;
};

AngleDescriptor rotation_angle(const QQuat& q);

using ConjugacyClass = std::vector<QQuat>;

// Exact partition into classes x ~ h x h^{-1}. Members are sorted by real
// value; classes by size, then rotation angle, then spin angle, then least
// member.
std::vector<ConjugacyClass> conjugacy_classes(const BinaryGroup& g);
std::vector<std::size_t> class_equation(const BinaryGroup& g);
std::vector<QQuat> center(const BinaryGroup& g);
// Distinct nonzero rotation angles, ascending.
std::vector<std::string> rotation_angle_labels(const BinaryGroup& g);

} // namespace crysdef

#endif
