#ifndef CRYSDEF_QUADRATIC_HPP_
#define CRYSDEF_QUADRATIC_HPP_

// Exact arithmetic in real quadratic fields Q(sqrt d) and quaternions over
// them. Nothing here ever rounds: equality is structural.

#include <compare>
#include <string>

#include "crysdef/checked.hpp"

namespace crysdef {

using Int = std::int64_t;

// Reduced fraction with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(Int num) : num_(num) {} // NOLINT: implicit on purpose
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const noexcept { return num_ == 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

private:
  Int num_ = 0;
  Int den_ = 1;
};

// a + b sqrt(d), d squarefree and positive. d == 1 means the rationals; b is
// then folded into a so that representations stay unique.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b, Int d);
  static QuadExt rational(Rational a, Int d) { return {a, Rational{0}, d}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  Int d() const noexcept { return d_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  // Sign of the real number a + b sqrt(d), decided exactly.
  int sign() const;
  // a^2 - d b^2
  Rational norm() const;

  QuadExt operator-() const;
  QuadExt inverse() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  // Order of the underlying real numbers.
  static std::strong_ordering compare(const QuadExt& x, const QuadExt& y);
  // Arbitrary but total order on representations; cheap, for containers.
  static bool repr_less(const QuadExt& x, const QuadExt& y);

  double approx() const;
  std::string to_string() const;

private:
  Rational a_;
  Rational b_;
  Int d_ = 1;
};

inline bool real_less(const QuadExt& x, const QuadExt& y) {
  return QuadExt::compare(x, y) == std::strong_ordering::less;
}

// Quaternion w + x i + y j + z k with coordinates in one Q(sqrt d).
struct QQuat {
  QuadExt w, x, y, z;

  static QQuat one(Int d);
  static QQuat scalar(const QuadExt& s);

  Int d() const noexcept { return w.d(); }
  QuadExt norm2() const { return w * w + x * x + y * y + z * z; }
  QQuat conj() const { return {w, -x, -y, -z}; }
  QQuat operator-() const { return {-w, -x, -y, -z}; }
  // Inverse of a unit quaternion is its conjugate; general case divides.
  QQuat inverse() const;

  friend QQuat operator*(const QQuat& p, const QQuat& q);
  friend bool operator==(const QQuat&, const QQuat&) = default;

  std::string to_string() const;
};

// Total order on representations, for std::set/std::map.
struct QQuatReprLess {
  bool operator()(const QQuat& p, const QQuat& q) const;
};

// Lexicographic order of (w, x, y, z) as real numbers.
bool real_less(const QQuat& p, const QQuat& q);

} // namespace crysdef

#endif
