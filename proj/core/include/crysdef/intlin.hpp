#ifndef CRYSDEF_INTLIN_HPP_
#define CRYSDEF_INTLIN_HPP_

// Exact integer linear algebra: dense integer matrices, determinants,
// Smith normal form and presentations of finitely generated abelian
// quotients Z^n / L Z^k.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crysdef/checked.hpp"

namespace crysdef {

using Int = std::int64_t;
using Vec2 = std::array<Int, 2>;

// Dense row-major integer matrix. All arithmetic is overflow-checked.
class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int at(std::size_t r, std::size_t c) const;

  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<std::vector<Int>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const IntMat&, const IntMat&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_add(const IntMat& a, const IntMat& b);
IntMat mat_sub(const IntMat& a, const IntMat& b);
IntMat mat_pow(const IntMat& a, unsigned k);

inline IntMat operator*(const IntMat& a, const IntMat& b) { return mat_mul(a, b); }
inline IntMat operator+(const IntMat& a, const IntMat& b) { return mat_add(a, b); }
inline IntMat operator-(const IntMat& a, const IntMat& b) { return mat_sub(a, b); }

std::vector<Int> apply(const IntMat& a, std::span<const Int> x);
Vec2 apply(const IntMat& a, const Vec2& x);

// Fraction-free (Bareiss) elimination; exact for any square matrix.
Int det(const IntMat& a);

// Smallest k in [1, max_order] with a^k = I, if any.
std::optional<unsigned> finite_order(const IntMat& a, unsigned max_order = 12);

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
// u_inv is U^{-1}, kept alongside because quotient lifts need it.
struct SnfDecomposition {
  IntMat u;
  IntMat d;
  IntMat v;
  IntMat u_inv;

  std::vector<Int> diagonal() const;
};

// Pivot rule: smallest nonzero |entry| of the active block, first in
// row-major order. Deterministic for a fixed input.
SnfDecomposition snf(const IntMat& a);

// Z^m / im(L) for an m x n matrix L, written as a product of cyclic groups.
// A factor of 0 stands for a free Z summand; factors equal to 1 are dropped.
class AbelianQuotient {
public:
  AbelianQuotient() = default;
  AbelianQuotient(std::vector<Int> factors, IntMat coords, IntMat lift_basis);

  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  // m x r: column k is the lift of the k-th quotient generator.
  const IntMat& lift_basis() const noexcept { return lift_; }
  // r x m: rows of U belonging to the kept factors.
  const IntMat& coords() const noexcept { return coords_; }

  std::size_t ambient_dim() const noexcept { return lift_.rows(); }
  std::size_t free_rank() const;
  bool is_finite() const { return free_rank() == 0; }
  // Number of cosets; nullopt if the quotient is infinite.
  std::optional<Int> order() const;
  // Largest invariant factor (exponent of the group); nullopt if infinite.
  std::optional<Int> exponent() const;

  // Quotient coordinates, torsion coordinates reduced into [0, d).
  std::vector<Int> reduce(std::span<const Int> x) const;
  std::vector<Int> lift(std::span<const Int> y) const;
  bool equivalent(std::span<const Int> x, std::span<const Int> y) const;

  // Coset representatives lift(y) for y in the box prod [0, d_k), in
  // lexicographic order of y. Only valid for finite quotients.
  std::vector<std::vector<Int>> cosets() const;

private:
  std::vector<Int> factors_;
  IntMat coords_;
  IntMat lift_;
};

AbelianQuotient quotient(const IntMat& l);

} // namespace crysdef

#endif
