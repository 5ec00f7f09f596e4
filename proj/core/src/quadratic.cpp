#include "crysdef/quadratic.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

namespace crysdef {

using namespace checked;

Rational::Rational(Int num, Int den) {
  if (den == 0)
    throw Error("rational with zero denominator");
  if (den < 0) {
    num = neg(num);
    den = neg(den);
  }
  Int g = gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Rational Rational::operator-() const { return {neg(num_), den_}; }

Rational operator+(const Rational& a, const Rational& b) {
  Int g = gcd(a.den_, b.den_);
  Int l = mul(a.den_ / g, b.den_);
  return {add(mul(a.num_, l / a.den_), mul(b.num_, l / b.den_)), l};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // cross-reduce first to keep intermediates small
  Int g1 = gcd(a.num_, b.den_);
  Int g2 = gcd(b.num_, a.den_);
  g1 = g1 ? g1 : 1;
  g2 = g2 ? g2 : 1;
  return {mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0)
    throw Error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_)
                   : std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

bool squarefree(Int d) {
  for (Int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0)
      return false;
  return true;
}

void require_same_field(const QuadExt& x, const QuadExt& y) {
  if (x.d() != y.d())
    throw Error("mixing Q(sqrt " + std::to_string(x.d()) + ") and Q(sqrt " +
                std::to_string(y.d()) + ")");
}

} // namespace

QuadExt::QuadExt(Rational a, Rational b, Int d) : a_(a), b_(b), d_(d) {
  if (d < 1 || !squarefree(d))
    throw Error("QuadExt: d = " + std::to_string(d) + " is not a positive squarefree integer");
  if (d_ == 1) {
    a_ = a_ + b_;
    b_ = Rational{0};
  }
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0)
    return sa;
  if (sa == 0 || sa == sb)
    return sb;
  // Opposite signs: the larger magnitude wins; equality is impossible for
  // squarefree d > 1.
  return (a_ * a_ > b_ * b_ * Rational{d_}) ? sa : sb;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational{d_}; }

QuadExt QuadExt::operator-() const { return {-a_, -b_, d_}; }

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero())
    throw Error("QuadExt: inverse of zero");
  return {a_ / n, -b_ / n, d_};
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  require_same_field(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * Rational{x.d_}, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

std::strong_ordering QuadExt::compare(const QuadExt& x, const QuadExt& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool QuadExt::repr_less(const QuadExt& x, const QuadExt& y) {
  return std::tuple(x.a_.num(), x.a_.den(), x.b_.num(), x.b_.den(), x.d_) <
         std::tuple(y.a_.num(), y.a_.den(), y.b_.num(), y.b_.den(), y.d_);
}

double QuadExt::approx() const {
  auto r = [](const Rational& q) {
    return static_cast<double>(q.num()) / static_cast<double>(q.den());
  };
  return r(a_) + r(b_) * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::to_string() const {
  if (b_.is_zero())
    return a_.to_string();
  std::string rad = "sqrt" + std::to_string(d_);
  std::string bpart;
  if (b_ == Rational{1})
    bpart = rad;
  else if (b_ == Rational{-1})
    bpart = "-" + rad;
  else
    bpart = b_.to_string() + "*" + rad;
  if (a_.is_zero())
    return bpart;
  return a_.to_string() + (b_.sign() > 0 ? "+" : "") + bpart;
}

QQuat QQuat::one(Int d) {
  const QuadExt zero = QuadExt::rational(0, d);
  return {QuadExt::rational(1, d), zero, zero, zero};
}

QQuat QQuat::scalar(const QuadExt& s) {
  const QuadExt zero = QuadExt::rational(0, s.d());
  return {s, zero, zero, zero};
}

QQuat QQuat::inverse() const {
  const QuadExt inv = norm2().inverse();
  const QQuat c = conj();
  return {c.w * inv, c.x * inv, c.y * inv, c.z * inv};
}

QQuat operator*(const QQuat& p, const QQuat& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

std::string QQuat::to_string() const {
  std::ostringstream os;
  os << '(' << w.to_string() << ", " << x.to_string() << ", " << y.to_string()
     << ", " << z.to_string() << ')';
  return os.str();
}

bool QQuatReprLess::operator()(const QQuat& p, const QQuat& q) const {
  const QuadExt* ps[] = {&p.w, &p.x, &p.y, &p.z};
  const QuadExt* qs[] = {&q.w, &q.x, &q.y, &q.z};
  for (int i = 0; i < 4; ++i) {
    if (QuadExt::repr_less(*ps[i], *qs[i]))
      return true;
    if (QuadExt::repr_less(*qs[i], *ps[i]))
      return false;
  }
  return false;
}

bool real_less(const QQuat& p, const QQuat& q) {
  const QuadExt* ps[] = {&p.w, &p.x, &p.y, &p.z};
  const QuadExt* qs[] = {&q.w, &q.x, &q.y, &q.z};
  for (int i = 0; i < 4; ++i) {
    auto c = QuadExt::compare(*ps[i], *qs[i]);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::less;
  }
  return false;
}

} // namespace crysdef
