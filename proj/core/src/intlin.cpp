#include "crysdef/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace crysdef {

using namespace checked;

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Int IntMat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw DimensionError("matrix index out of range");
  return (*this)(r, c);
}

std::vector<std::vector<Int>> IntMat::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i].assign(row(i).begin(), row(i).end());
  return out;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = add(c(i, j), mul(aik, b(k, j)));
    }
  return c;
}

IntMat mat_add(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("mat_add: shape mismatch");
  IntMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = add(a(i, j), b(i, j));
  return c;
}

IntMat mat_sub(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("mat_sub: shape mismatch");
  IntMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = sub(a(i, j), b(i, j));
  return c;
}

IntMat mat_pow(const IntMat& a, unsigned k) {
  if (!a.is_square())
    throw DimensionError("mat_pow: matrix is not square");
  IntMat result = IntMat::identity(a.rows());
  IntMat base = a;
  while (k) {
    if (k & 1u)
      result = mat_mul(result, base);
    k >>= 1u;
    if (k)
      base = mat_mul(base, base);
  }
  return result;
}

std::vector<Int> apply(const IntMat& a, std::span<const Int> x) {
  if (a.cols() != x.size())
    throw DimensionError("apply: vector length does not match matrix");
  std::vector<Int> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] = add(y[i], mul(a(i, j), x[j]));
  return y;
}

Vec2 apply(const IntMat& a, const Vec2& x) {
  if (a.rows() != 2 || a.cols() != 2)
    throw DimensionError("apply: expected a 2x2 matrix");
  return {add(mul(a(0, 0), x[0]), mul(a(0, 1), x[1])),
          add(mul(a(1, 0), x[0]), mul(a(1, 1), x[1]))};
}

Int det(const IntMat& a) {
  if (!a.is_square())
    throw DimensionError("det: matrix is not square");
  std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMat m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = sub(mul(m(i, j), m(k, k)), mul(m(i, k), m(k, j))) / prev;
    prev = m(k, k);
  }
  return mul(sign, m(n - 1, n - 1));
}

std::optional<unsigned> finite_order(const IntMat& a, unsigned max_order) {
  if (!a.is_square())
    throw DimensionError("finite_order: matrix is not square");
  const IntMat id = IntMat::identity(a.rows());
  IntMat p = a;
  for (unsigned k = 1; k <= max_order; ++k) {
    if (p == id)
      return k;
    p = mat_mul(p, a);
  }
  return std::nullopt;
}

std::vector<Int> SnfDecomposition::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    out.push_back(d(i, i));
  return out;
}

namespace {

// Elementary operations applied simultaneously to the working matrix and
// to the accumulated transforms, so that U * A0 * V == A holds throughout.
struct SnfState {
  IntMat a, u, u_inv, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t c = 0; c < a.cols(); ++c)
      std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c)
      std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r)
      std::swap(u_inv(r, i), u_inv(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t r = 0; r < a.rows(); ++r)
      std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r)
      std::swap(v(r, i), v(r, j));
  }

  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, Int q) {
    if (q == 0)
      return;
    for (std::size_t c = 0; c < a.cols(); ++c)
      a(dst, c) = add(a(dst, c), mul(q, a(src, c)));
    for (std::size_t c = 0; c < u.cols(); ++c)
      u(dst, c) = add(u(dst, c), mul(q, u(src, c)));
    for (std::size_t r = 0; r < u_inv.rows(); ++r)
      u_inv(r, src) = sub(u_inv(r, src), mul(q, u_inv(r, dst)));
  }

  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, Int q) {
    if (q == 0)
      return;
    for (std::size_t r = 0; r < a.rows(); ++r)
      a(r, dst) = add(a(r, dst), mul(q, a(r, src)));
    for (std::size_t r = 0; r < v.rows(); ++r)
      v(r, dst) = add(v(r, dst), mul(q, v(r, src)));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      a(i, c) = neg(a(i, c));
    for (std::size_t c = 0; c < u.cols(); ++c)
      u(i, c) = neg(u(i, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r)
      u_inv(r, i) = neg(u_inv(r, i));
  }
};

} // namespace

SnfDecomposition snf(const IntMat& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SnfState s{input, IntMat::identity(m), IntMat::identity(m), IntMat::identity(n)};

  bool exhausted = false;
  for (std::size_t t = 0; t < std::min(m, n) && !exhausted; ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          Int v = s.a(i, j);
          if (v != 0 && (best == 0 || abs(v) < best)) {
            best = abs(v);
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        exhausted = true; // remaining block is zero
        break;
      }

      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      const Int p = s.a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        s.add_row(i, t, neg(floor_div(s.a(i, t), p)));
        if (s.a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        s.add_col(j, t, neg(floor_div(s.a(t, j), p)));
        if (s.a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Enforce d_t | every entry of the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.a(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == m)
        break;
      s.add_row(t, bad, 1);
    }
    if (s.a(t, t) < 0)
      s.negate_row(t);
  }
  return {std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.u_inv)};
}

AbelianQuotient::AbelianQuotient(std::vector<Int> factors, IntMat coords,
                                 IntMat lift_basis)
    : factors_(std::move(factors)), coords_(std::move(coords)),
      lift_(std::move(lift_basis)) {}

std::size_t AbelianQuotient::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), 0));
}

std::optional<Int> AbelianQuotient::order() const {
  Int o = 1;
  for (Int d : factors_) {
    if (d == 0)
      return std::nullopt;
    o = mul(o, d);
  }
  return o;
}

std::optional<Int> AbelianQuotient::exponent() const {
  if (!is_finite())
    return std::nullopt;
  return factors_.empty() ? Int{1} : factors_.back();
}

std::vector<Int> AbelianQuotient::reduce(std::span<const Int> x) const {
  std::vector<Int> y = apply(coords_, x);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (factors_[k] != 0)
      y[k] = mod(y[k], factors_[k]);
  return y;
}

std::vector<Int> AbelianQuotient::lift(std::span<const Int> y) const {
  return apply(lift_, y);
}

bool AbelianQuotient::equivalent(std::span<const Int> x, std::span<const Int> y) const {
  return reduce(x) == reduce(y);
}

std::vector<std::vector<Int>> AbelianQuotient::cosets() const {
  if (!is_finite())
    throw Error("cosets: quotient is infinite");
  std::vector<std::vector<Int>> out;
  std::vector<Int> y(factors_.size(), 0);
  for (bool more = true; more;) {
    out.push_back(lift(y));
    more = false;
    for (std::size_t k = y.size(); k-- > 0;) {
      if (++y[k] < factors_[k]) {
        more = true;
        break;
      }
      y[k] = 0;
    }
  }
  return out;
}

AbelianQuotient quotient(const IntMat& l) {
  const SnfDecomposition s = snf(l);
  const std::size_t m = l.rows();
  const std::size_t r = std::min(l.rows(), l.cols());
  std::vector<std::size_t> kept;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < m; ++i) {
    Int d = i < r ? s.d(i, i) : 0;
    if (d == 1)
      continue;
    kept.push_back(i);
    factors.push_back(d);
  }
  IntMat coords(kept.size(), m);
  IntMat lift(m, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) {
      coords(k, j) = s.u(kept[k], j);
      lift(j, k) = s.u_inv(j, kept[k]);
    }
  return {std::move(factors), std::move(coords), std::move(lift)};
}

} // namespace crysdef
