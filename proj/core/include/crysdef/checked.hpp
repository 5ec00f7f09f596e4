#ifndef CRYSDEF_CHECKED_HPP_
#define CRYSDEF_CHECKED_HPP_

// Overflow-checked 64-bit integer arithmetic. Every exact computation in the
// library goes through these helpers; overflow throws instead of wrapping.

#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "crysdef/errors.hpp"

namespace crysdef::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

// Floor division and the matching nonnegative remainder (b != 0).
inline Int floor_div(Int a, Int b) {
  if (b == -1)
    return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline Int mod(Int a, Int b) {
  if (b == -1)
    return 0;
  Int m = a % b;
  if (m != 0 && ((m < 0) != (b < 0)))
    m += b;
  return m;
}

inline Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }

} // namespace crysdef::checked

#endif
