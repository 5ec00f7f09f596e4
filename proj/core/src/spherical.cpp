#include "crysdef/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

namespace crysdef {

namespace {

QuadExt q(Rational a, Rational b, Int d) { return {a, b, d}; }
QuadExt r(Int num, Int den, Int d) { return QuadExt::rational(Rational(num, den), d); }

QQuat quat(QuadExt w, QuadExt x, QuadExt y, QuadExt z) { return {w, x, y, z}; }

// (1 + i + j + k) / 2 over Q(sqrt d)
QQuat hurwitz(Int d) { return quat(r(1, 2, d), r(1, 2, d), r(1, 2, d), r(1, 2, d)); }
QQuat unit_i(Int d) { return quat(r(0, 1, d), r(1, 1, d), r(0, 1, d), r(0, 1, d)); }
QQuat unit_j(Int d) { return quat(r(0, 1, d), r(0, 1, d), r(1, 1, d), r(0, 1, d)); }
QQuat unit_k(Int d) { return quat(r(0, 1, d), r(0, 1, d), r(0, 1, d), r(1, 1, d)); }

// Element of order 2n lying over a rotation by 2pi/n, plus a unit
// perpendicular to its axis. The pair generates the binary dihedral group.
struct CyclicData {
  Int d;
  QQuat gen;
  QQuat perp;
};

CyclicData cyclic_data(unsigned n) {
  switch (n) {
  case 1:
    return {1, -QQuat::one(1), unit_i(1)};
  case 2:
    return {1, unit_i(1), unit_j(1)};
  case 3:
    // cos(pi/3) = 1/2 along k. The rational choice (1 + i + j + k) / 2 has
    // no rational unit perpendicular to its axis.
    return {3, quat(r(1, 2, 3), r(0, 1, 3), r(0, 1, 3), q(0, Rational(1, 2), 3)),
            unit_i(3)};
  case 4:
    return {2, quat(q(0, Rational(1, 2), 2), q(0, Rational(1, 2), 2), r(0, 1, 2), r(0, 1, 2)),
            unit_j(2)};
  case 5:
    // (phi + phi^{-1} i + j) / 2, axis (phi^{-1}, 1, 0) is orthogonal to k.
    return {5, quat(q(Rational(1, 4), Rational(1, 4), 5), q(Rational(-1, 4), Rational(1, 4), 5),
                    r(1, 2, 5), r(0, 1, 5)),
            unit_k(5)};
  case 6:
    return {3, quat(q(0, Rational(1, 2), 3), r(1, 2, 3), r(0, 1, 3), r(0, 1, 3)), unit_j(3)};
  default:
    throw UnsupportedOrder("binary cyclic/dihedral groups need cos(pi/n) in a single "
                           "quadratic field; n = " + std::to_string(n) +
                           " is not supported (supported: 1..6)");
  }
}

Int field_for(BinaryKind kind) {
  switch (kind.family) {
  case BinaryFamily::Cyclic:
    // (1 + i + j + k) / 2 already has order 6 over the rationals
    return kind.n == 3 ? 1 : cyclic_data(kind.n).d;
  case BinaryFamily::Dihedral:
    return cyclic_data(kind.n).d;
  case BinaryFamily::Tetrahedral: return 1;
  case BinaryFamily::Octahedral: return 2;
  case BinaryFamily::Icosahedral: return 5;
  }
  return 1;
}

std::string pi_label(double theta) {
  for (int den = 1; den <= 60; ++den) {
    double p = theta * den / std::numbers::pi;
    double rp = std::round(p);
    if (std::abs(p - rp) < 1e-9) {
      long num = static_cast<long>(rp);
      if (num == 0)
        return "0";
      std::string s = num == 1 ? "pi" : std::to_string(num) + "pi";
      return den == 1 ? s : s + "/" + std::to_string(den);
    }
  }
  return std::to_string(theta);
}

double clamp_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

} // namespace

std::string_view family_name(BinaryFamily f) {
  switch (f) {
  case BinaryFamily::Cyclic: return "cyclic";
  case BinaryFamily::Dihedral: return "dihedral";
  case BinaryFamily::Tetrahedral: return "tetrahedral";
  case BinaryFamily::Octahedral: return "octahedral";
  case BinaryFamily::Icosahedral: return "icosahedral";
  }
  return "cyclic";
}

BinaryFamily family_from_name(std::string_view name) {
  for (BinaryFamily f : {BinaryFamily::Cyclic, BinaryFamily::Dihedral, BinaryFamily::Tetrahedral,
                         BinaryFamily::Octahedral, BinaryFamily::Icosahedral})
    if (family_name(f) == name)
      return f;
  throw Error("unknown binary polyhedral family '" + std::string(name) + "'");
}

unsigned BinaryKind::expected_order() const {
  switch (family) {
  case BinaryFamily::Cyclic: return 2 * n;
  case BinaryFamily::Dihedral: return 4 * n;
  case BinaryFamily::Tetrahedral: return 24;
  case BinaryFamily::Octahedral: return 48;
  case BinaryFamily::Icosahedral: return 120;
  }
  return 0;
}

std::string BinaryKind::ade_label() const {
  switch (family) {
  case BinaryFamily::Cyclic: return "A";
  case BinaryFamily::Dihedral: return "D";
  case BinaryFamily::Tetrahedral: return "E6";
  case BinaryFamily::Octahedral: return "E7";
  case BinaryFamily::Icosahedral: return "E8";
  }
  return "";
}

std::string BinaryKind::axis_triple() const {
  switch (family) {
  case BinaryFamily::Cyclic: return "(1," + std::to_string(n) + "," + std::to_string(n) + ")";
  case BinaryFamily::Dihedral: return "(2,2," + std::to_string(n) + ")";
  case BinaryFamily::Tetrahedral: return "(2,3,3)";
  case BinaryFamily::Octahedral: return "(2,3,4)";
  case BinaryFamily::Icosahedral: return "(2,3,5)";
  }
  return "";
}

unsigned BinaryKind::published_class_count() const {
  switch (family) {
  case BinaryFamily::Cyclic: return n;
  case BinaryFamily::Dihedral: return n + 3;
  case BinaryFamily::Tetrahedral: return 7;
  case BinaryFamily::Octahedral: return 9;
  case BinaryFamily::Icosahedral: return 11;
  }
  return 0;
}

std::string BinaryKind::to_string() const {
  std::string s = "binary " + std::string(family_name(family));
  return has_parameter() ? s + "(" + std::to_string(n) + ")" : s;
}

BinaryGroup::BinaryGroup(BinaryKind kind, Int d, std::vector<QQuat> elements)
    : kind_(kind), d_(d), elements_(std::move(elements)) {}

BinaryGroup BinaryGroup::from_elements(BinaryKind kind, std::vector<QQuat> elements) {
  if (elements.empty())
    throw Error("binary group with no elements");
  const Int d = elements.front().d();
  std::set<QQuat, QQuatReprLess> set(elements.begin(), elements.end());
  if (set.size() != elements.size())
    throw Error(kind.to_string() + ": duplicate elements");
  if (set.size() != kind.expected_order())
    throw Error(kind.to_string() + ": expected order " +
                std::to_string(kind.expected_order()) + ", got " +
                std::to_string(set.size()));
  const QuadExt one = QuadExt::rational(1, d);
  for (const QQuat& a : elements) {
    if (a.norm2() != one)
      throw Error(kind.to_string() + ": non-unit element " + a.to_string());
    if (!set.count(a.conj()))
      throw Error(kind.to_string() + ": not closed under inverse");
    for (const QQuat& b : elements)
      if (!set.count(a * b))
        throw Error(kind.to_string() + ": not closed under multiplication");
  }
  return {kind, d, std::move(elements)};
}

bool BinaryGroup::contains(const QQuat& q) const {
  return std::find(elements_.begin(), elements_.end(), q) != elements_.end();
}

std::vector<QQuat> generators(BinaryKind kind) {
  const Int d = field_for(kind);
  switch (kind.family) {
  case BinaryFamily::Cyclic:
    return {kind.n == 3 ? hurwitz(1) : cyclic_data(kind.n).gen};
  case BinaryFamily::Dihedral: {
    auto c = cyclic_data(kind.n);
    return {c.gen, c.perp};
  }
  case BinaryFamily::Tetrahedral:
    return {unit_i(d), unit_j(d), hurwitz(d)};
  case BinaryFamily::Octahedral:
    return {unit_i(d), unit_j(d), hurwitz(d),
            quat(q(0, Rational(1, 2), d), q(0, Rational(1, 2), d), r(0, 1, d), r(0, 1, d))};
  case BinaryFamily::Icosahedral:
    return {unit_i(d), unit_j(d), hurwitz(d), cyclic_data(5).gen};
  }
  return {};
}

BinaryGroup build_group(BinaryKind kind) {
  if (kind.has_parameter() && kind.n == 0)
    throw UnsupportedOrder(kind.to_string() + ": n must be >= 1");
  const Int d = field_for(kind);
  const std::vector<QQuat> gens = generators(kind);
  const QuadExt one = QuadExt::rational(1, d);
  for (const QQuat& g : gens)
    if (g.norm2() != one)
      throw Error(kind.to_string() + ": generator " + g.to_string() + " is not a unit");

  const std::size_t cap = 10 * static_cast<std::size_t>(kind.expected_order());
  std::set<QQuat, QQuatReprLess> seen{QQuat::one(d)};
  std::deque<QQuat> frontier{QQuat::one(d)};
  while (!frontier.empty()) {
    const QQuat e = frontier.front();
    frontier.pop_front();
    for (const QQuat& g : gens) {
      QQuat p = e * g;
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw Error(kind.to_string() + ": closure exceeded " + std::to_string(cap) +
                      " elements; generators are wrong");
        frontier.push_back(std::move(p));
      }
    }
  }
  std::vector<QQuat> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end(),
            [](const QQuat& a, const QQuat& b) { return real_less(a, b); });
  return BinaryGroup::from_elements(kind, std::move(elements));
}

std::string AngleDescriptor::rotation_label() const {
  return pi_label(clamp_acos(cos_rotation.approx()));
}

std::string AngleDescriptor::spin_label() const {
  return pi_label(2 * clamp_acos(w.approx()));
}

AngleDescriptor rotation_angle(const QQuat& q) {
  const QuadExt one = QuadExt::rational(1, q.d());
  return {q.w * q.w + q.w * q.w - one, q.w};
}

std::vector<ConjugacyClass> conjugacy_classes(const BinaryGroup& g) {
  const auto& el = g.elements();
  std::set<QQuat, QQuatReprLess> assigned;
  std::vector<ConjugacyClass> classes;
  for (const QQuat& x : el) {
    if (assigned.count(x))
      continue;
    std::set<QQuat, QQuatReprLess> cls;
    for (const QQuat& h : el)
      cls.insert(h * x * h.conj());
    ConjugacyClass members(cls.begin(), cls.end());
    std::sort(members.begin(), members.end(),
              [](const QQuat& a, const QQuat& b) { return real_less(a, b); });
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    const AngleDescriptor da = rotation_angle(a.front());
    const AngleDescriptor db = rotation_angle(b.front());
    // smaller angle first: larger cosine
    if (da.cos_rotation != db.cos_rotation)
      return real_less(db.cos_rotation, da.cos_rotation);
    if (da.w != db.w)
      return real_less(db.w, da.w);
    return real_less(a.front(), b.front());
  });
  return classes;
}

std::vector<std::size_t> class_equation(const BinaryGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g))
    sizes.push_back(c.size());
  return sizes;
}

std::vector<QQuat> center(const BinaryGroup& g) {
  std::vector<QQuat> out;
  for (const QQuat& z : g.elements())
    if (std::all_of(g.elements().begin(), g.elements().end(),
                    [&](const QQuat& h) { return z * h == h * z; }))
      out.push_back(z);
  return out;
}

std::vector<std::string> rotation_angle_labels(const BinaryGroup& g) {
  std::vector<QuadExt> cosines;
  const QuadExt one = QuadExt::rational(1, g.field_d());
  for (const QQuat& e : g.elements()) {
    QuadExt c = rotation_angle(e).cos_rotation;
    if (c != one && std::find(cosines.begin(), cosines.end(), c) == cosines.end())
      cosines.push_back(c);
  }
  std::sort(cosines.begin(), cosines.end(),
            [](const QuadExt& a, const QuadExt& b) { return real_less(b, a); });
  std::vector<std::string> labels;
  for (const QuadExt& c : cosines)
    labels.push_back(AngleDescriptor{c, one}.rotation_label());
  return labels;
}

} // namespace crysdef
