#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "crysdef/errors.hpp"
#include "crysdef/intlin.hpp"
#include "gen.hpp"

using namespace crysdef;

namespace {

bool is_unimodular(const IntMat& m) {
  const Int d = det(m);
  return d == 1 || d == -1;
}

void expect_valid_snf(const IntMat& a) {
  const SnfDecomposition s = snf(a);
  ASSERT_EQ(s.u * a * s.v, s.d) << a.to_string();
  EXPECT_TRUE(is_unimodular(s.u));
  EXPECT_TRUE(is_unimodular(s.v));
  EXPECT_EQ(s.u * s.u_inv, IntMat::identity(a.rows()));
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) EXPECT_EQ(s.d(i, j), 0);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(diag[i], 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) EXPECT_EQ(diag[i + 1], 0);
      else EXPECT_EQ(diag[i + 1] % diag[i], 0);
    }
  }
}

// x ~ y mod L Z^2 for nonsingular 2x2 L, via the adjugate.
bool adj_equivalent(const IntMat& l, const Vec2& x, const Vec2& y) {
  const Int d = det(l);
  const Int a = x[0] - y[0], b = x[1] - y[1];
  const Int p = l(1, 1) * a - l(0, 1) * b;
  const Int q = -l(1, 0) * a + l(0, 0) * b;
  return p % d == 0 && q % d == 0;
}

} // namespace

TEST(IntMat, ConstructionAndFormatting) {
  IntMat m{{1, 2}, {3, 4}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 0), 3);
  EXPECT_EQ(m.to_string(), "[[1,2],[3,4]]");
  EXPECT_EQ(IntMat::from_rows(m.to_rows()), m);
  EXPECT_THROW(m.at(2, 0), DimensionError);
}

TEST(IntMat, ProductsAndPowers) {
  IntMat r{{0, 1}, {-1, 0}};
  EXPECT_EQ(mat_pow(r, 4), IntMat::identity(2));
  EXPECT_EQ(mat_pow(r, 2), (IntMat{{-1, 0}, {0, -1}}));
  const Vec2 x{1, 2};
  const Vec2 y = crysdef::apply(r, x);
  EXPECT_EQ(y, (Vec2{2, -1}));
  EXPECT_THROW(IntMat(2, 3) * IntMat(2, 3), DimensionError);
}

TEST(IntMat, Determinant) {
  EXPECT_EQ(det(IntMat{{2, 1}, {1, 3}}), 5);
  EXPECT_EQ(det(IntMat{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), -144);
  EXPECT_EQ(det(IntMat{{1, 2}, {2, 4}}), 0);
}

TEST(IntMat, FiniteOrder) {
  EXPECT_EQ(finite_order(IntMat{{1, 1}, {-1, 0}}), 6u);
  EXPECT_EQ(finite_order(IntMat{{0, 1}, {-1, 0}}), 4u);
  EXPECT_FALSE(finite_order(IntMat{{1, 1}, {0, 1}}).has_value());
}

TEST(Checked, OverflowIsDetected) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked::add(big, 1), OverflowError);
  EXPECT_THROW(checked::mul(big, 2), OverflowError);
  EXPECT_THROW(checked::neg(std::numeric_limits<Int>::min()), OverflowError);
  EXPECT_EQ(checked::floor_div(-7, 2), -4);
  EXPECT_EQ(checked::mod(-7, 3), 2);
  IntMat m{{big / 2 + 1, 0}, {0, 1}};
  EXPECT_THROW(m + m, OverflowError);
}

TEST(Snf, KnownDiagonals) {
  EXPECT_EQ(snf(IntMat{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal(),
            (std::vector<Int>{2, 6, 12}));
  EXPECT_EQ(snf(IntMat{{2, 0}, {0, 3}}).diagonal(), (std::vector<Int>{1, 6}));
  EXPECT_EQ(snf(IntMat{{1, -1}, {1, 2}}).diagonal(), (std::vector<Int>{1, 3}));
  EXPECT_EQ(snf(IntMat{{0, 0}, {0, 0}}).diagonal(), (std::vector<Int>{0, 0}));
  EXPECT_EQ(snf(IntMat{{2, 2}, {2, 2}}).diagonal(), (std::vector<Int>{2, 0}));
}

TEST(Snf, RectangularShapes) {
  expect_valid_snf(IntMat{{1, 2, 3}, {4, 5, 6}});
  expect_valid_snf(IntMat{{3}, {6}, {9}});
  EXPECT_EQ(snf(IntMat{{3}, {6}, {9}}).diagonal(), (std::vector<Int>{3}));
}

TEST(SnfProperty, Random2x2) {
  for (int trial = 0; trial < 2000; ++trial) expect_valid_snf(gen::mat(2, 2, 10));
}

TEST(SnfProperty, Random3x3AndRectangular) {
  for (int trial = 0; trial < 500; ++trial) {
    expect_valid_snf(gen::mat(3, 3, 6));
    expect_valid_snf(gen::mat(2, 3, 6));
    expect_valid_snf(gen::mat(3, 2, 6));
  }
}

TEST(SnfProperty, DeterminantIsProductOfDiagonal) {
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMat a = gen::mat(2, 2, 10);
    const auto d = snf(a).diagonal();
    const Int ad = det(a);
    EXPECT_EQ(ad < 0 ? -ad : ad, d[0] * d[1]);
  }
}

TEST(SnfProperty, Deterministic) {
  for (int trial = 0; trial < 100; ++trial) {
    const IntMat a = gen::mat(2, 2, 10);
    const SnfDecomposition s1 = snf(a), s2 = snf(a);
    EXPECT_EQ(s1.u, s2.u);
    EXPECT_EQ(s1.v, s2.v);
  }
}

TEST(Quotient, FiniteCyclic) {
  const AbelianQuotient q = quotient(IntMat{{2, 0}, {0, 3}});
  EXPECT_EQ(q.invariant_factors(), (std::vector<Int>{6}));
  EXPECT_TRUE(q.is_finite());
  EXPECT_EQ(q.order(), 6);
  EXPECT_EQ(q.exponent(), 6);
  EXPECT_EQ(q.cosets().size(), 6u);
}

TEST(Quotient, FreeParts) {
  const AbelianQuotient z2 = quotient(IntMat{{0, 0}, {0, 0}});
  EXPECT_EQ(z2.free_rank(), 2u);
  EXPECT_FALSE(z2.order().has_value());
  const AbelianQuotient mixed = quotient(IntMat{{2, 0}, {0, 0}});
  EXPECT_EQ(mixed.invariant_factors(), (std::vector<Int>{2, 0}));
  EXPECT_EQ(mixed.free_rank(), 1u);
  const AbelianQuotient trivial = quotient(IntMat::identity(2));
  EXPECT_TRUE(trivial.invariant_factors().empty());
  EXPECT_EQ(trivial.order(), 1);
}

TEST(Quotient, ReduceLiftRoundTrip) {
  const AbelianQuotient q = quotient(IntMat{{2, 1}, {0, 4}});
  for (Int a = -5; a <= 5; ++a)
    for (Int b = -5; b <= 5; ++b) {
      const std::vector<Int> x{a, b};
      const auto y = q.reduce(x);
      EXPECT_TRUE(q.equivalent(q.lift(y), x));
    }
}

TEST(QuotientProperty, CosetCountMatchesAdjugateOracle) {
  int checked_cases = 0;
  while (checked_cases < 300) {
    const IntMat l = gen::mat(2, 2, 8);
    const Int d = det(l);
    if (d == 0 || d > 64 || d < -64) continue;
    ++checked_cases;
    const AbelianQuotient q = quotient(l);
    const auto reps = q.cosets();
    ASSERT_EQ(static_cast<Int>(reps.size()), d < 0 ? -d : d) << l.to_string();
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(adj_equivalent(l, {reps[i][0], reps[i][1]}, {reps[j][0], reps[j][1]}));
    for (int t = 0; t < 20; ++t) {
      const Vec2 x = gen::vec2(30), y = gen::vec2(30);
      EXPECT_EQ(q.equivalent(std::span<const Int>(x), std::span<const Int>(y)),
                adj_equivalent(l, x, y));
    }
  }
}

TEST(QuotientProperty, LatticeVectorsReduceToZero) {
  for (int trial = 0; trial < 300; ++trial) {
    const IntMat l = gen::mat(2, 2, 6);
    const AbelianQuotient q = quotient(l);
    const Vec2 c = gen::vec2(5);
    const Vec2 v = crysdef::apply(l, c);
    const auto y = q.reduce(std::span<const Int>(v));
    for (Int e : y) EXPECT_EQ(e, 0) << l.to_string();
  }
}

TEST(MatProperty, Associativity) {
  for (int trial = 0; trial < 300; ++trial) {
    const IntMat a = gen::mat(2, 2, 10), b = gen::mat(2, 2, 10), c = gen::mat(2, 2, 10);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}
