#include "crysdef/semidirect.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace crysdef {

using namespace checked;

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

bool is_zero(const IntMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (Int v : m.row(i))
      if (v != 0)
        return false;
  return true;
}

Vec2 add2(const Vec2& a, const Vec2& b) { return {add(a[0], b[0]), add(a[1], b[1])}; }

Vec2 to_vec2(const std::vector<Int>& v) { return {v.at(0), v.at(1)}; }

bool in_half_plane(const Vec2& n) {
  return n[1] > 0 || (n[1] == 0 && n[0] >= 0);
}

bool in_cone(const Vec2& n) {
  return (n[0] >= 0 && n[1] > 0) || (n[0] == 0 && n[1] == 0);
}

} // namespace

std::string_view lattice_name(Lattice l) {
  switch (l) {
  case Lattice::Parallelogram: return "parallelogram";
  case Lattice::Rectangle: return "rectangle";
  case Lattice::Square: return "square";
  case Lattice::Hexagonal: return "hexagonal";
  case Lattice::Custom: return "custom";
  }
  return "custom";
}

Lattice lattice_from_name(std::string_view name) {
  for (Lattice l : {Lattice::Parallelogram, Lattice::Rectangle, Lattice::Square,
                    Lattice::Hexagonal, Lattice::Custom})
    if (lattice_name(l) == name)
      return l;
  throw Error("unknown lattice '" + std::string(name) + "'");
}

PointGroup2D::PointGroup2D(Lattice lattice, IntMat m, unsigned order,
                           bool has_reflection)
    : lattice_(lattice), m_(std::move(m)), order_(order),
      has_reflection_(has_reflection) {
  powers_.reserve(order_);
  powers_.push_back(IntMat::identity(2));
  for (unsigned k = 1; k < order_; ++k)
    powers_.push_back(mat_mul(powers_.back(), m_));
}

PointGroup2D PointGroup2D::named(Lattice lattice) {
  switch (lattice) {
  case Lattice::Parallelogram:
    return {lattice, IntMat::identity(2), 1, false};
  case Lattice::Rectangle:
    return {lattice, IntMat{{-1, 0}, {0, -1}}, 2, true};
  case Lattice::Square:
    return {lattice, IntMat{{0, 1}, {-1, 0}}, 4, true};
  case Lattice::Hexagonal:
    return {lattice, IntMat{{1, 1}, {-1, 0}}, 6, true};
  case Lattice::Custom:
    break;
  }
  throw Error("PointGroup2D::named: custom lattices need a matrix");
}

PointGroup2D PointGroup2D::custom(const IntMat& m, bool has_reflection) {
  if (m.rows() != 2 || m.cols() != 2)
    throw InvalidPointGroup("point-group generator must be a 2x2 integer matrix");
  // Finite-order elements of GL(2, Z) have order 1, 2, 3, 4 or 6.
  auto order = finite_order(m, 12);
  if (!order)
    throw InvalidPointGroup("point-group generator " + m.to_string() +
                            " does not have finite order");
  return {Lattice::Custom, m, *order, has_reflection};
}

const IntMat& PointGroup2D::power(Int k) const {
  return powers_[static_cast<std::size_t>(mod(k, static_cast<Int>(order_)))];
}

SdElement identity_element() { return {}; }

SdElement multiply(const SdElement& a, const SdElement& b, const PointGroup2D& pg) {
  return {add2(a.n, apply(pg.power(a.n3), b.n)), add(a.n3, b.n3)};
}

SdElement inverse(const SdElement& x, const PointGroup2D& pg) {
  Vec2 t = apply(pg.power(neg(x.n3)), x.n);
  return {{neg(t[0]), neg(t[1])}, neg(x.n3)};
}

SdElement conjugate(const SdElement& g, const SdElement& x, const PointGroup2D& pg) {
  const IntMat l = IntMat::identity(2) - pg.power(x.n3);
  return {add2(apply(l, g.n), apply(pg.power(g.n3), x.n)), x.n3};
}

std::string_view domain_kind_name(DomainKind k) {
  switch (k) {
  case DomainKind::AllOfZ2: return "all_of_z2";
  case DomainKind::HalfPlane: return "half_plane";
  case DomainKind::Cone: return "cone";
  case DomainKind::OrbitMinimum: return "orbit_minimum";
  }
  return "orbit_minimum";
}

ClassSet::ClassSet(PointGroup2D pg, Int n3)
    : pg_(std::move(pg)), n3_(n3), kind_(Kind::Finite) {
  const IntMat l = IntMat::identity(2) - pg_.power(n3_);
  quotient_ = quotient(l);

  if (quotient_.is_finite()) {
    const auto& f = quotient_.invariant_factors();
    const Int count = *quotient_.order();
    auto index = [&](const std::vector<Int>& y) {
      std::size_t i = 0;
      for (std::size_t k = 0; k < y.size(); ++k)
        i = i * static_cast<std::size_t>(f[k]) + static_cast<std::size_t>(y[k]);
      return i;
    };

    // Orbits of <M> on the finite quotient Z^2 / im(I - M^n3).
    UnionFind uf(static_cast<std::size_t>(count));
    std::vector<Int> y(f.size(), 0);
    for (bool more = true; more;) {
      uf.unite(index(y), index(act(y)));
      more = false;
      for (std::size_t k = y.size(); k-- > 0;) {
        if (++y[k] < f[k]) {
          more = true;
          break;
        }
        y[k] = 0;
      }
    }

    // Every coset meets the box [0, e)^2; the first hit in (n1, n2) order
    // represents its class.
    const Int e = *quotient_.exponent();
    std::map<std::size_t, std::size_t> root_to_class;
    for (Int a = 0; a < e; ++a)
      for (Int b = 0; b < e; ++b) {
        Vec2 x{a, b};
        std::size_t root = uf.find(index(quotient_.reduce(x)));
        if (root_to_class.emplace(root, reps_.size()).second)
          reps_.push_back(x);
      }
    coset_class_.resize(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < coset_class_.size(); ++i)
      coset_class_[i] = root_to_class.at(uf.find(i));
    return;
  }

  kind_ = Kind::FundamentalDomain;
  const bool trivial_translation_action = is_zero(l);
  if (trivial_translation_action && pg_.generator() == IntMat::identity(2)) {
    domain_ = DomainKind::AllOfZ2;
    predicate_ = "{(n1,n2) in Z^2}";
  } else if (trivial_translation_action && pg_.lattice() == Lattice::Rectangle) {
    domain_ = DomainKind::HalfPlane;
    predicate_ = "{(n1,n2) | n2 > 0} u {(n1,0) | n1 > 0} u {(0,0)}";
  } else if (trivial_translation_action && (pg_.lattice() == Lattice::Square ||
                                            pg_.lattice() == Lattice::Hexagonal)) {
    domain_ = DomainKind::Cone;
    predicate_ = "{(n1,n2) | n1 >= 0, n2 > 0} u {(0,0)}";
  } else {
    domain_ = DomainKind::OrbitMinimum;
    predicate_ = "least member, ordered by (|y|, sign), of the <M>-orbit in "
                 "Z^2 / im(I - M^n3) coordinates, lifted to Z^2";
  }
}

std::vector<Int> ClassSet::act(const std::vector<Int>& y) const {
  const std::vector<Int> x = quotient_.lift(y);
  return quotient_.reduce(apply(pg_.generator(), std::span<const Int>(x)));
}

const std::vector<Vec2>& ClassSet::representatives() const {
  if (!is_finite())
    throw Error("representatives: class set at n3 = " + std::to_string(n3_) +
                " is infinite");
  return reps_;
}

std::size_t ClassSet::size() const { return representatives().size(); }

DomainKind ClassSet::domain() const {
  if (is_finite())
    throw Error("domain: class set is finite");
  return domain_;
}

Vec2 ClassSet::canonical(const Vec2& n) const {
  return is_finite() ? finite_canonical(n) : domain_canonical(n);
}

Vec2 ClassSet::finite_canonical(const Vec2& n) const {
  const auto& f = quotient_.invariant_factors();
  const std::vector<Int> y = quotient_.reduce(n);
  std::size_t i = 0;
  for (std::size_t k = 0; k < y.size(); ++k)
    i = i * static_cast<std::size_t>(f[k]) + static_cast<std::size_t>(y[k]);
  return reps_[coset_class_[i]];
}

Vec2 ClassSet::domain_canonical(const Vec2& n) const {
  switch (domain_) {
  case DomainKind::AllOfZ2:
    return n;
  case DomainKind::HalfPlane:
  case DomainKind::Cone: {
    const auto pred = domain_ == DomainKind::HalfPlane ? in_half_plane : in_cone;
    for (unsigned k = 0; k < pg_.order(); ++k) {
      Vec2 y = apply(pg_.power(k), n);
      if (pred(y))
        return y;
    }
    throw Error("fundamental domain misses the orbit of " + std::to_string(n[0]) +
                "," + std::to_string(n[1]));
  }
  case DomainKind::OrbitMinimum:
    break;
  }
  auto key = [](const std::vector<Int>& y) {
    std::vector<std::pair<Int, bool>> k;
    for (Int v : y)
      k.emplace_back(abs(v), v < 0);
    return k;
  };
  std::vector<Int> y = quotient_.reduce(n);
  std::vector<Int> best = y;
  for (unsigned k = 1; k < pg_.order(); ++k) {
    y = act(y);
    if (key(y) < key(best))
      best = y;
  }
  return to_vec2(quotient_.lift(best));
}

ClassSet f_classes(const PointGroup2D& pg, Int n3) { return ClassSet(pg, n3); }

SdElement canonical_rep(const PointGroup2D& pg, const SdElement& x) {
  return {f_classes(pg, x.n3).canonical(x.n), x.n3};
}

namespace {

Partition normalize(std::vector<std::vector<Vec2>> classes) {
  for (auto& c : classes)
    std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

} // namespace

Partition brute_force_classes(const PointGroup2D& pg, Int n3, Int window) {
  return brute_force_classes(pg, n3, window, mul(3, window));
}

Partition brute_force_classes(const PointGroup2D& pg, Int n3, Int window,
                              Int conjugator_bound) {
  if (window < 1)
    throw Error("brute_force_classes: window must be >= 1");
  const Int side = 2 * window + 1;
  auto index = [&](const Vec2& v) {
    return static_cast<std::size_t>((v[0] + window) * side + (v[1] + window));
  };
  auto inside = [&](const Vec2& v) {
    return abs(v[0]) <= window && abs(v[1]) <= window;
  };

  // The group law (not the closed conjugation formula) drives the oracle.
  UnionFind uf(static_cast<std::size_t>(side * side));
  for (Int a = -window; a <= window; ++a)
    for (Int b = -window; b <= window; ++b) {
      const SdElement x{{a, b}, n3};
      for (Int g3 = 0; g3 < static_cast<Int>(pg.order()); ++g3)
        for (Int m1 = -conjugator_bound; m1 <= conjugator_bound; ++m1)
          for (Int m2 = -conjugator_bound; m2 <= conjugator_bound; ++m2) {
            const SdElement g{{m1, m2}, g3};
            const SdElement y = multiply(multiply(g, x, pg), inverse(g, pg), pg);
            if (inside(y.n))
              uf.unite(index(x.n), index(y.n));
          }
    }

  std::map<std::size_t, std::vector<Vec2>> groups;
  for (Int a = -window; a <= window; ++a)
    for (Int b = -window; b <= window; ++b)
      groups[uf.find(index({a, b}))].push_back({a, b});
  std::vector<std::vector<Vec2>> classes;
  for (auto& [root, members] : groups)
    classes.push_back(std::move(members));
  return normalize(std::move(classes));
}

Partition restrict_to_window(const ClassSet& classes, Int window) {
  std::map<Vec2, std::vector<Vec2>> groups;
  for (Int a = -window; a <= window; ++a)
    for (Int b = -window; b <= window; ++b)
      groups[classes.canonical({a, b})].push_back({a, b});
  std::vector<std::vector<Vec2>> out;
  for (auto& [rep, members] : groups)
    out.push_back(std::move(members));
  return normalize(std::move(out));
}

} // namespace crysdef
