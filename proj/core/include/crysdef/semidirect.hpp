#ifndef CRYSDEF_SEMIDIRECT_HPP_
#define CRYSDEF_SEMIDIRECT_HPP_

// The group Z^2 x|_M Z: fundamental group of the order parameter space of a
// planar crystal whose rotational point group is cyclic, generated by M.
// Elements are pairs (n, n3) of a translation part n in Z^2 and a winding
// n3 in Z. Conjugation fixes n3, so conjugacy classes are enumerated one
// disclination index at a time.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "crysdef/intlin.hpp"

namespace crysdef {

enum class Lattice { Parallelogram, Rectangle, Square, Hexagonal, Custom };

std::string_view lattice_name(Lattice l);
// Accepts the lowercase names used by lattice_name(); throws on anything else.
Lattice lattice_from_name(std::string_view name);

class PointGroup2D {
public:
  static PointGroup2D named(Lattice lattice);
  // Order is computed from the matrix; throws InvalidPointGroup when the
  // matrix is not 2x2 or has infinite order.
  static PointGroup2D custom(const IntMat& m, bool has_reflection);

  Lattice lattice() const noexcept { return lattice_; }
  std::string_view name() const { return lattice_name(lattice_); }
  const IntMat& generator() const noexcept { return m_; }
  unsigned order() const noexcept { return order_; }
  bool has_reflection() const noexcept { return has_reflection_; }

  // M^k for any integer k, taken modulo the order.
  const IntMat& power(Int k) const;

private:
  PointGroup2D(Lattice lattice, IntMat m, unsigned order, bool has_reflection);

  Lattice lattice_;
  IntMat m_;
  unsigned order_;
  bool has_reflection_;
  std::vector<IntMat> powers_;
};

struct SdElement {
  Vec2 n{0, 0};
  Int n3 = 0;

  friend bool operator==(const SdElement&, const SdElement&) = default;
  friend auto operator<=>(const SdElement&, const SdElement&) = default;
};

SdElement identity_element();
SdElement multiply(const SdElement& a, const SdElement& b, const PointGroup2D& pg);
SdElement inverse(const SdElement& x, const PointGroup2D& pg);
// g x g^{-1}, evaluated by the closed form ((I - M^{n3}) g.n + M^{g3} x.n, n3).
SdElement conjugate(const SdElement& g, const SdElement& x, const PointGroup2D& pg);

// Shapes of infinite class families (det(I - M^{n3}) = 0).
enum class DomainKind {
  AllOfZ2,         // every translation is its own class
  HalfPlane,       // {n2 > 0} u {(n1, 0) | n1 > 0} u {0}
  Cone,            // {n1 >= 0, n2 > 0} u {0}
  OrbitMinimum,    // generic: lexicographically least orbit member
};

std::string_view domain_kind_name(DomainKind k);

// Conjugacy classes of Z^2 x|_M Z at one fixed disclination index.
class ClassSet {
public:
  enum class Kind { Finite, FundamentalDomain };

  Int n3() const noexcept { return n3_; }
  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  const PointGroup2D& point_group() const noexcept { return pg_; }
  const AbelianQuotient& translation_quotient() const noexcept { return quotient_; }

  // Canonical representatives, sorted by (n1, n2). Finite case only.
  const std::vector<Vec2>& representatives() const;
  std::size_t size() const; // Finite case only

  DomainKind domain() const;                // FundamentalDomain case only
  const std::string& predicate() const noexcept { return predicate_; }

  // Total canonicalization map on Z^2: two translations are conjugate at
  // this n3 iff their canonical forms coincide.
  Vec2 canonical(const Vec2& n) const;
  // True iff n is the canonical representative of its class.
  bool contains(const Vec2& n) const { return canonical(n) == n; }

private:
  friend ClassSet f_classes(const PointGroup2D& pg, Int n3);
  ClassSet(PointGroup2D pg, Int n3);

  std::vector<Int> act(const std::vector<Int>& y) const; // M on quotient coords
  Vec2 finite_canonical(const Vec2& n) const;
  Vec2 domain_canonical(const Vec2& n) const;

  PointGroup2D pg_;
  Int n3_;
  Kind kind_;
  AbelianQuotient quotient_;
  std::vector<Vec2> reps_;
  // Finite case: class index per coset, coset indexed by mixed-radix y.
  std::vector<std::size_t> coset_class_;
  DomainKind domain_ = DomainKind::AllOfZ2;
  std::string predicate_;
};

ClassSet f_classes(const PointGroup2D& pg, Int n3);
SdElement canonical_rep(const PointGroup2D& pg, const SdElement& x);

// Orbit partition of the window {|n1|, |n2| <= B} under conjugation by every
// g with |g.n_i| <= 3B and g.n3 in [0, N), closed under reachability.
// Classes are sorted vectors of translations; the classes are ordered by
// their first member.
using Partition = std::vector<std::vector<Vec2>>;
Partition brute_force_classes(const PointGroup2D& pg, Int n3, Int window);
Partition brute_force_classes(const PointGroup2D& pg, Int n3, Int window,
                              Int conjugator_bound);

// The closed form restricted to the window, as a partition in the same
// normal form as brute_force_classes.
Partition restrict_to_window(const ClassSet& classes, Int window);

} // namespace crysdef

#endif
