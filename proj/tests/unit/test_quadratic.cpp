#include <gtest/gtest.h>

#include <cmath>

#include "crysdef/errors.hpp"
#include "crysdef/quadratic.hpp"
#include "gen.hpp"

using namespace crysdef;

TEST(Rational, Normalization) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)), Rational(1, 2));
  EXPECT_EQ((Rational(2, 3) / Rational(4, 9)), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_EQ(Rational(-3, 4).to_string(), "-3/4");
}

TEST(QuadExt, FieldOperations) {
  const QuadExt s2(0, 1, 2);
  EXPECT_EQ(s2 * s2, QuadExt::rational(2, 2));
  const QuadExt x(1, 1, 5);
  EXPECT_EQ(x * x.inverse(), QuadExt::rational(1, 5));
  EXPECT_EQ(x.norm(), Rational(-4));
  EXPECT_THROW(QuadExt(0, 1, 4), Error);
  EXPECT_THROW(QuadExt(0, 0, 3).inverse(), Error);
}

TEST(QuadExt, ExactSign) {
  EXPECT_EQ(QuadExt(Rational(-3, 2), 1, 2).sign(), -1);  // sqrt2 - 1.5
  EXPECT_EQ(QuadExt(Rational(-7, 5), 1, 2).sign(), 1);   // sqrt2 - 1.4
  EXPECT_EQ(QuadExt(0, 0, 3).sign(), 0);
  EXPECT_EQ(QuadExt(3, -1, 5).sign(), 1);
}

TEST(QuadExt, Formatting) {
  EXPECT_EQ(QuadExt(Rational(1, 4), Rational(1, 4), 5).to_string(), "1/4+1/4*sqrt5");
  EXPECT_EQ(QuadExt(0, Rational(-1, 2), 3).to_string(), "-1/2*sqrt3");
}

TEST(QuadExtProperty, SignAgreesWithApproximation) {
  for (int t = 0; t < 2000; ++t) {
    const Int d = std::vector<Int>{2, 3, 5}[t % 3];
    const QuadExt x(Rational(gen::int_in(-50, 50), gen::int_in(1, 9)),
                    Rational(gen::int_in(-50, 50), gen::int_in(1, 9)), d);
    const double v = x.approx();
    if (std::abs(v) > 1e-9) EXPECT_EQ(x.sign(), v > 0 ? 1 : -1) << x.to_string();
  }
}

TEST(QuadExtProperty, RingAxioms) {
  for (int t = 0; t < 500; ++t) {
    auto r = [] { return QuadExt(gen::int_in(-9, 9), gen::int_in(-9, 9), 5); };
    const QuadExt a = r(), b = r(), c = r();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a / a, QuadExt::rational(1, 5));
  }
}

TEST(QQuat, HamiltonRules) {
  const QuadExt o = QuadExt::rational(1, 1), z = QuadExt::rational(0, 1);
  const QQuat i{z, o, z, z}, j{z, z, o, z}, k{z, z, z, o};
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, -QQuat::one(1));
  EXPECT_EQ(i * j * k, -QQuat::one(1));
  EXPECT_EQ(i.inverse(), -i);
}
