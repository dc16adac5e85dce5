#pragma once

// Seeded random generators for the property tests.

#include <cstdint>
#include <random>

#include "weylkit/polynomial.hpp"

namespace weylkit::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational small_rational() {
    const long num = integer(-9, 9);
    return Rational(num, integer(1, 4));
  }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    Monomial m;
    const long d = integer(0, max_degree);
    for (long k = 0; k < d; ++k) ++m[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
    return m;
  }

  Poly poly(const PolyRing& ring, unsigned max_degree, int max_terms) {
    Poly p = ring.zero();
    const int n = static_cast<int>(integer(1, max_terms));
    for (int i = 0; i < n; ++i) p += ring.term(monomial(ring.size(), max_degree), small_rational());
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace weylkit::testing
