#include "crysdef/order_parameter.hpp"

#include <algorithm>
#include <set>

namespace crysdef {

MatrixGroup::MatrixGroup(std::string name, std::vector<IntMat> elements,
                         std::vector<std::string> labels)
    : name_(std::move(name)), elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty())
    throw InconsistentSpec("pi0", name_ + ": a group needs at least one element");
  if (labels_.size() != elements_.size())
    throw InconsistentSpec("pi0", name_ + ": one label per element required");
  const std::size_t n = elements_.front().rows();
  for (const IntMat& m : elements_) {
    if (!m.is_square() || m.rows() != n)
      throw InconsistentSpec("pi0", name_ + ": elements must be square of equal size");
    Int d = det(m);
    if (d != 1 && d != -1)
      throw InconsistentSpec("pi0", name_ + ": element " + m.to_string() +
                                        " is not invertible over Z");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (elements_[i] == elements_[j])
        throw InconsistentSpec("pi0", name_ + ": duplicate element " + elements_[i].to_string());
  (void)identity_index();
  for (const IntMat& a : elements_)
    for (const IntMat& b : elements_)
      if (std::find(elements_.begin(), elements_.end(), a * b) == elements_.end())
        throw InconsistentSpec("pi0", name_ + ": not closed under multiplication (" +
                                          a.to_string() + " * " + b.to_string() + ")");
}

MatrixGroup MatrixGroup::trivial() { return {"1", {IntMat::identity(1)}, {"e"}}; }

MatrixGroup MatrixGroup::z2() {
  return {"Z/2", {IntMat{{1}}, IntMat{{-1}}}, {"+", "-"}};
}

MatrixGroup MatrixGroup::klein_four() {
  return {"V4",
          {IntMat{{1, 0}, {0, 1}}, IntMat{{1, 0}, {0, -1}}, IntMat{{-1, 0}, {0, 1}},
           IntMat{{-1, 0}, {0, -1}}},
          {"(+,+)", "(+,-)", "(-,+)", "(-,-)"}};
}

MatrixGroup MatrixGroup::lattice_automorphisms(std::vector<IntMat> elements) {
  std::vector<std::string> labels;
  for (const IntMat& m : elements)
    labels.push_back(m.to_string());
  return {"Aut(Lambda)", std::move(elements), std::move(labels)};
}

std::size_t MatrixGroup::index_of(const IntMat& m) const {
  auto it = std::find(elements_.begin(), elements_.end(), m);
  if (it == elements_.end())
    throw Error(name_ + ": " + m.to_string() + " is not an element");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t MatrixGroup::identity_index() const {
  auto it = std::find(elements_.begin(), elements_.end(),
                      IntMat::identity(elements_.front().rows()));
  if (it == elements_.end())
    throw InconsistentSpec("pi0", name_ + ": identity element missing");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool MatrixGroup::is_subgroup(const std::vector<std::size_t>& indices) const {
  std::set<std::size_t> h(indices.begin(), indices.end());
  if (h.empty() || h.size() != indices.size())
    return false;
  for (std::size_t i : h)
    if (i >= elements_.size())
      return false;
  if (!h.count(identity_index()))
    return false;
  // A nonempty finite subset closed under products is a subgroup.
  for (std::size_t a : h)
    for (std::size_t b : h)
      if (!h.count(index_of(elements_[a] * elements_[b])))
        return false;
  return true;
}

std::vector<std::vector<std::size_t>>
MatrixGroup::cosets(const std::vector<std::size_t>& subgroup) const {
  if (!is_subgroup(subgroup))
    throw SubgroupNotContained("p_gv", "selected elements do not form a subgroup of " + name_);
  std::vector<bool> used(elements_.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    if (used[g])
      continue;
    std::vector<std::size_t> coset;
    for (std::size_t h : subgroup)
      coset.push_back(index_of(elements_[g] * elements_[h]));
    std::sort(coset.begin(), coset.end());
    for (std::size_t i : coset)
      used[i] = true;
    out.push_back(std::move(coset));
  }
  return out;
}

OrderParamDescriptor OrderParamDescriptor::planar_crystal(const PointGroup2D& pg) {
  OrderParamDescriptor d;
  d.kind = TargetKind::PlanarCrystal;
  d.planar = pg;
  d.has_reflection = pg.has_reflection();
  d.pi0 = MatrixGroup::z2();
  d.p_gv = pg.has_reflection() ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0};
  return d;
}

OrderParamDescriptor OrderParamDescriptor::spatial_crystal(bool has_reflection) {
  OrderParamDescriptor d;
  d.kind = TargetKind::SpatialCrystal;
  d.has_reflection = has_reflection;
  d.pi0 = MatrixGroup::z2();
  d.p_gv = has_reflection ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0};
  return d;
}

OrderParamDescriptor OrderParamDescriptor::sphere_crystal(BinaryKind kind, bool has_reflection) {
  OrderParamDescriptor d;
  d.kind = TargetKind::SphereCrystal;
  d.binary = kind;
  d.has_reflection = has_reflection;
  d.pi0 = MatrixGroup::z2();
  d.p_gv = has_reflection ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{0};
  return d;
}

OrderParamDescriptor OrderParamDescriptor::torus(unsigned dim, MatrixGroup pi0,
                                                 std::vector<std::size_t> p_gv) {
  if (!pi0.is_subgroup(p_gv))
    throw SubgroupNotContained("p_gv", "p(G_v) is not a subgroup of pi0(G) = " + pi0.name());
  OrderParamDescriptor d;
  d.kind = TargetKind::Torus;
  d.torus_dim = dim;
  d.pi0 = std::move(pi0);
  d.p_gv = std::move(p_gv);
  return d;
}

std::string OrderParamDescriptor::to_string() const {
  switch (kind) {
  case TargetKind::PlanarCrystal:
    return "planar crystal (" + std::string(planar->name()) + ", N=" +
           std::to_string(planar->order()) + ")";
  case TargetKind::SpatialCrystal:
    return std::string("spatial crystal (") + (has_reflection ? "achiral" : "chiral") + ")";
  case TargetKind::SphereCrystal:
    return "SO(3)/Gamma, Gamma lifting to " + binary->to_string();
  case TargetKind::Torus:
    return "T^" + std::to_string(torus_dim) + ", pi0(G) = " + pi0.name();
  }
  return "";
}

} // namespace crysdef
