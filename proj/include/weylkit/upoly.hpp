#pragma once

// Dense univariate polynomials over Q, complete factorization over Q, and
// the matrix helpers built on them (minimal polynomials, Smith form).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/linalg.hpp"
#include "weylkit/polynomial.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

class UPoly {
 public:
  UPoly() = default;
  /// coeffs[i] multiplies t^i; trailing zeros are dropped.
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UPoly monomial(unsigned degree, const Rational& c = Rational(1));
  static UPoly t() { return monomial(1); }

  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;

  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly pow(unsigned e) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);

/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtGcd {
  UPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Yun's algorithm: monic pairwise-coprime squarefree p_i with f = lc · ∏ p_i^i.
/// Entries are (p_i, i); trivial p_i are omitted.
std::vector<std::pair<UPoly, unsigned>> squarefree_factorization(const UPoly& f);

/// Monic irreducible factors over Q with multiplicities, sorted by degree then
/// coefficients. Zassenhaus: Berlekamp modulo a small prime, Hensel lifting,
/// and recombination of modular factors.
std::vector<std::pair<UPoly, unsigned>> factor(const UPoly& f);
bool is_irreducible(const UPoly& f);

/// p(M) by Horner's rule.
QMatrix evaluate(const UPoly& p, const QMatrix& m);
/// Monic minimal polynomial of a square matrix.
UPoly minimal_polynomial(const QMatrix& m);

/// p as a polynomial in variable `var` of `ring`, and back.
Poly to_poly(const UPoly& p, const PolyRing& ring, std::size_t var);
/// nullopt unless p involves only variable `var`.
std::optional<UPoly> from_poly(const Poly& p, std::size_t var);

/// Invariant factors d_1 | d_2 | ... (monic, nonzero) of a matrix over Q[t];
/// the count of nonzero factors is the rank over Q(t).
std::vector<UPoly> invariant_factors(std::vector<std::vector<UPoly>> m);

}  // namespace weylkit
