#include "crysdef/homotopy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crysdef {

HomotopyType HomotopyType::point() { return {}; }

HomotopyType HomotopyType::wedge(std::vector<unsigned> sphere_dims) {
  if (sphere_dims.empty())
    return point();
  for (unsigned d : sphere_dims)
    if (d == 0)
      throw Error("wedge summands must be spheres of dimension >= 1");
  std::sort(sphere_dims.begin(), sphere_dims.end());
  HomotopyType t;
  t.kind_ = Kind::Wedge;
  t.spheres_ = std::move(sphere_dims);
  return t;
}

HomotopyType HomotopyType::wedge_of(unsigned count, unsigned dim) {
  return wedge(std::vector<unsigned>(count, dim));
}

HomotopyType HomotopyType::torus(unsigned n) {
  if (n == 0)
    return point();
  HomotopyType t;
  t.kind_ = Kind::Torus;
  t.torus_dim_ = n;
  return t;
}

HomotopyType HomotopyType::disjoint(std::vector<HomotopyType> parts) {
  if (parts.empty())
    throw Error("disjoint union of no spaces");
  if (parts.size() == 1)
    return std::move(parts.front());
  HomotopyType t;
  t.kind_ = Kind::Disjoint;
  t.parts_ = std::move(parts);
  return t;
}

unsigned HomotopyType::count_spheres(unsigned dim) const {
  return static_cast<unsigned>(std::count(spheres_.begin(), spheres_.end(), dim));
}

std::string HomotopyType::to_string() const {
  switch (kind_) {
  case Kind::Point:
    return "pt";
  case Kind::Torus:
    return "T^" + std::to_string(torus_dim_);
  case Kind::Wedge: {
    std::string s;
    for (unsigned d : spheres_)
      s += (s.empty() ? "S^" : " v S^") + std::to_string(d);
    return s;
  }
  case Kind::Disjoint: {
    std::string s;
    for (const auto& p : parts_)
      s += (s.empty() ? "" : " | ") + p.to_string();
    return s;
  }
  }
  return "";
}

std::string manifold_kind_name(ManifoldKind k) {
  switch (k) {
  case ManifoldKind::Euclidean: return "euclidean";
  case ManifoldKind::Sphere: return "sphere";
  case ManifoldKind::Cylinder: return "cylinder";
  case ManifoldKind::Torus2D: return "torus2d";
  case ManifoldKind::FlatTorus: return "flat_torus";
  case ManifoldKind::Annulus: return "annulus";
  }
  return "";
}

std::string Manifold::to_string() const {
  switch (kind) {
  case ManifoldKind::Euclidean: return "R^" + std::to_string(dim);
  case ManifoldKind::Sphere: return "S^" + std::to_string(dim);
  case ManifoldKind::Cylinder: return "cylinder R x S^1";
  case ManifoldKind::Torus2D: return "torus T^2 in R^3";
  case ManifoldKind::FlatTorus: return "flat torus R^" + std::to_string(dim) + "/Lambda";
  case ManifoldKind::Annulus: return "annulus S^1 x (0,inf)";
  }
  return "";
}

std::string DefectSet::to_string() const {
  switch (kind) {
  case DefectKind::Empty: return "empty";
  case DefectKind::Points: return std::to_string(points) + " point(s)";
  case DefectKind::Circle: return "circle";
  case DefectKind::Arrangement: return std::to_string(hyperplanes) + " hyperplane(s) arrangement";
  }
  return "";
}

namespace {

std::vector<HomotopyType> retract_euclidean(unsigned n, const DefectSet& x) {
  switch (x.kind) {
  case DefectKind::Empty:
    return {HomotopyType::point()};
  case DefectKind::Points:
    // In R^1 points are hyperplanes: m + 1 contractible pieces.
    if (n == 1)
      return std::vector<HomotopyType>(x.points + 1, HomotopyType::point());
    return {HomotopyType::wedge_of(x.points, n - 1)};
  case DefectKind::Circle:
    if (n != 3)
      throw UnsupportedSpace("defect", "a removed circle is only catalogued in R^3");
    return {HomotopyType::wedge({1, 2})};
  case DefectKind::Arrangement: {
    if (x.k.size() != x.hyperplanes + 1)
      throw UnsupportedSpace("defect.k", "expected " + std::to_string(x.hyperplanes + 1) +
                                             " slab rows, got " + std::to_string(x.k.size()));
    std::vector<HomotopyType> out;
    for (std::size_t i = 0; i < x.k.size(); ++i) {
      const auto& row = x.k[i];
      if (row.size() != n - 1)
        throw UnsupportedSpace("defect.k", "slab " + std::to_string(i) + " needs " +
                                               std::to_string(n - 1) +
                                               " entries (subspace dimensions 0.." +
                                               std::to_string(n - 2) + ")");
      std::vector<unsigned> dims;
      for (unsigned j = 0; j < row.size(); ++j)
        dims.insert(dims.end(), row[j], n - j - 1);
      out.push_back(HomotopyType::wedge(std::move(dims)));
    }
    return out;
  }
  }
  return {};
}

unsigned point_count(const SpaceSpec& s) {
  switch (s.defect.kind) {
  case DefectKind::Empty: return 0;
  case DefectKind::Points: return s.defect.points;
  default:
    throw UnsupportedSpace("defect", "only point defects are catalogued on " +
                                         s.manifold.to_string());
  }
}

} // namespace

std::vector<HomotopyType> retract(const SpaceSpec& s) {
  const unsigned n = s.manifold.dim;
  switch (s.manifold.kind) {
  case ManifoldKind::Euclidean:
    if (n == 0)
      throw UnsupportedSpace("manifold.dim", "R^0 is not supported");
    return retract_euclidean(n, s.defect);
  case ManifoldKind::Sphere: {
    if (n == 0)
      throw UnsupportedSpace("manifold.dim", "S^0 is not supported");
    unsigned m = point_count(s);
    if (m == 0)
      return {HomotopyType::wedge({n})};
    if (n == 1)
      return std::vector<HomotopyType>(m, HomotopyType::point());
    return {HomotopyType::wedge_of(m - 1, n - 1)};
  }
  case ManifoldKind::Cylinder:
  case ManifoldKind::Annulus:
    return {HomotopyType::wedge_of(point_count(s) + 1, 1)};
  case ManifoldKind::Torus2D: {
    unsigned m = point_count(s);
    return {m == 0 ? HomotopyType::torus(2) : HomotopyType::wedge_of(m + 1, 1)};
  }
  case ManifoldKind::FlatTorus: {
    if (n < 2)
      throw UnsupportedSpace("manifold.dim", "flat tori need dimension >= 2");
    unsigned m = point_count(s);
    return {m == 0 ? HomotopyType::torus(n) : HomotopyType::wedge_of(m + 1, n - 1)};
  }
  }
  throw UnsupportedSpace("manifold", "unknown manifold");
}

unsigned h1(const HomotopyType& t) {
  switch (t.kind()) {
  case HomotopyType::Kind::Point: return 0;
  case HomotopyType::Kind::Wedge: return t.count_spheres(1);
  case HomotopyType::Kind::Torus: return t.torus_dim();
  case HomotopyType::Kind::Disjoint: {
    unsigned r = 0;
    for (const auto& p : t.parts())
      r += h1(p);
    return r;
  }
  }
  return 0;
}

std::string Cardinality::to_string() const {
  switch (kind) {
  case Kind::Finite: return std::to_string(value);
  case Kind::CountablyInfinite: return "countably infinite";
  case Kind::ParametrizedFamily: return family;
  }
  return "";
}

Cardinality operator*(const Cardinality& a, const Cardinality& b) {
  if ((a.is_finite() && a.value == 0) || (b.is_finite() && b.value == 0))
    return Cardinality::finite(0);
  if (a.is_finite() && b.is_finite())
    return Cardinality::finite(checked::mul(a.value, b.value));
  auto describe = [](const Cardinality& c) {
    return c.kind == Cardinality::Kind::ParametrizedFamily ? c.family
           : c.is_finite()                                 ? std::to_string(c.value)
                                                           : std::string("countable");
  };
  if (a.kind == Cardinality::Kind::ParametrizedFamily ||
      b.kind == Cardinality::Kind::ParametrizedFamily) {
    if (a.is_finite() && a.value == 1)
      return b;
    if (b.is_finite() && b.value == 1)
      return a;
    return Cardinality::parametrized(describe(a) + " x " + describe(b));
  }
  return Cardinality::countable();
}

Cardinality pow(const Cardinality& a, unsigned e) {
  if (e == 0)
    return Cardinality::finite(1);
  if (a.kind == Cardinality::Kind::ParametrizedFamily)
    return e == 1 ? a : Cardinality::parametrized("(" + a.family + ")^" + std::to_string(e));
  Cardinality r = Cardinality::finite(1);
  for (unsigned i = 0; i < e; ++i)
    r = r * a;
  return r;
}

Cardinality ClassFactor::size() const {
  Cardinality base;
  switch (kind) {
  case Kind::FiniteSet:
    base = Cardinality::finite(count);
    break;
  case Kind::FreeAbelian:
    base = rank == 0 ? Cardinality::finite(1) : Cardinality::countable();
    break;
  case Kind::BinaryConjClasses:
    base = Cardinality::finite(class_count);
    break;
  case Kind::PlanarConjClasses:
    base = Cardinality::parametrized("disjoint union over n3 in Z of F_n3(" +
                                     std::string(planar->name()) + ")");
    break;
  }
  return pow(base, exponent);
}

std::string ClassFactor::to_string() const {
  std::string s;
  switch (kind) {
  case Kind::FiniteSet:
    s = "finite set of " + std::to_string(count);
    break;
  case Kind::FreeAbelian:
    s = "Z^" + std::to_string(rank);
    if (action)
      s += " modulo " + *action;
    break;
  case Kind::BinaryConjClasses:
    s = "conjugacy classes of " + binary->to_string() + " (" + std::to_string(class_count) + ")";
    break;
  case Kind::PlanarConjClasses:
    s = "conjugacy classes of Z^2 x|_M Z (" + std::string(planar->name()) + ")";
    break;
  }
  return exponent == 1 ? s : "(" + s + ")^" + std::to_string(exponent);
}

bool ClassDescriptor::is_trivial() const { return size() == Cardinality::finite(1); }

Cardinality ClassDescriptor::size() const {
  Cardinality c = Cardinality::finite(1);
  for (const auto& f : factors)
    c = c * f.size();
  return c;
}

std::string ClassDescriptor::to_string() const {
  if (factors.empty())
    return "trivial";
  std::string s;
  for (const auto& f : factors)
    s += (s.empty() ? "" : " x ") + f.to_string();
  return s;
}

namespace {

ClassFactor free_abelian(unsigned rank, unsigned exponent, unsigned sphere_dim,
                         std::optional<std::string> action = std::nullopt) {
  ClassFactor f;
  f.kind = ClassFactor::Kind::FreeAbelian;
  f.rank = rank;
  f.exponent = exponent;
  f.sphere_dim = sphere_dim;
  f.action = std::move(action);
  return f;
}

[[noreturn]] void unsupported(const HomotopyType& t, const OrderParamDescriptor& target,
                              const std::string& why) {
  throw UnsupportedPair("symmetry", "no rule for maps " + t.to_string() + " -> " +
                                        target.to_string() + ": " + why);
}

} // namespace

ClassDescriptor maps_into(const HomotopyType& t, const OrderParamDescriptor& target) {
  using K = HomotopyType::Kind;
  if (t.kind() == K::Point)
    return {};
  if (t.kind() == K::Disjoint)
    unsupported(t, target, "classify each component separately");

  if (target.kind == TargetKind::Torus) {
    // [A, T^k] = H^1(A; Z)^k
    return {{free_abelian(h1(t) * target.torus_dim, 1, 1)}};
  }
  if (t.kind() == K::Torus)
    unsupported(t, target, "torus domains are only catalogued for torus targets");

  std::map<unsigned, unsigned> by_dim;
  for (unsigned d : t.spheres())
    ++by_dim[d];

  ClassDescriptor out;
  for (const auto& [dim, count] : by_dim) {
    if (dim == 2)
      continue; // pi_2 of a Lie group vanishes
    switch (target.kind) {
    case TargetKind::PlanarCrystal: {
      if (dim >= 2)
        continue; // universal cover R^2 x| R is contractible
      ClassFactor f;
      f.kind = ClassFactor::Kind::PlanarConjClasses;
      f.exponent = count;
      f.sphere_dim = 1;
      f.planar = target.planar;
      out.factors.push_back(std::move(f));
      break;
    }
    case TargetKind::SpatialCrystal:
      if (dim == 1)
        unsupported(t, target, "pi_1 of a spatial crystal needs its space group");
      if (dim == 3) {
        out.factors.push_back(free_abelian(1, count, 3, "the q_3^{-1}(C)-action on pi_3(Spin(3))"));
        break;
      }
      unsupported(t, target, "pi_" + std::to_string(dim) + " is not catalogued");
    case TargetKind::SphereCrystal:
      if (dim == 1) {
        ClassFactor f;
        f.kind = ClassFactor::Kind::BinaryConjClasses;
        f.exponent = count;
        f.sphere_dim = 1;
        f.binary = target.binary;
        f.class_count = static_cast<Int>(conjugacy_classes(build_group(*target.binary)).size());
        out.factors.push_back(std::move(f));
        break;
      }
      if (dim == 3) {
        out.factors.push_back(free_abelian(1, count, 3, "the q_3^{-1}(Gamma)-action on pi_3(Spin(3))"));
        break;
      }
      unsupported(t, target, "pi_" + std::to_string(dim) + " is not catalogued");
    case TargetKind::Torus:
      break;
    }
  }
  return out;
}

} // namespace crysdef
