#ifndef CRYSDEF_TEST_GEN_HPP_
#define CRYSDEF_TEST_GEN_HPP_

// Seeded generators for property tests.

#include <cstdint>
#include <random>

#include "crysdef/intlin.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5eed5eedULL);
  return r;
}

inline crysdef::Int int_in(crysdef::Int lo, crysdef::Int hi) {
  return std::uniform_int_distribution<crysdef::Int>(lo, hi)(rng());
}

inline crysdef::IntMat mat(std::size_t r, std::size_t c, crysdef::Int bound) {
  crysdef::IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = int_in(-bound, bound);
  return m;
}

inline crysdef::Vec2 vec2(crysdef::Int bound) {
  return {int_in(-bound, bound), int_in(-bound, bound)};
}

} // namespace gen

#endif
