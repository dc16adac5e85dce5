#pragma once

#include <optional>
#include <vector>

#include "weylkit/polynomial.hpp"

namespace weylkit {

/// Reduced Gröbner basis together with the order it was computed for.
/// Elements are monic and sorted by descending leading monomial.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Poly> elements;
};

/// Ideal of a polynomial ring. May carry a cached reduced Gröbner basis,
/// which always generates the same ideal as `generators()`.
class Ideal {
 public:
  explicit Ideal(PolyRing ring) : ring_(std::move(ring)) {}
  Ideal(PolyRing ring, std::vector<Poly> generators);
  /// Ring taken from the first generator; requires a nonempty list.
  explicit Ideal(std::vector<Poly> generators);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::optional<GroebnerBasis>& cached_basis() const { return cached_; }
  /// True when every generator is zero (or there are none).
  bool is_zero() const;

 private:
  friend Ideal groebner(const Ideal&, const TermOrder&);

  PolyRing ring_;
  std::vector<Poly> generators_;
  std::optional<GroebnerBasis> cached_;
};

/// Buchberger's algorithm with the product and chain criteria. Returns a copy
/// of `ideal` whose cache holds the reduced basis for `order`.
Ideal groebner(const Ideal& ideal, const TermOrder& order);
Ideal groebner(const Ideal& ideal);

/// The cached basis when it matches `order`, otherwise a fresh computation.
GroebnerBasis basis_of(const Ideal& ideal, const TermOrder& order);
GroebnerBasis basis_of(const Ideal& ideal);

/// Remainder of f on division by a Gröbner basis (fully reduced).
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

bool ideal_member(const Poly& f, const Ideal& ideal);
/// inner ⊆ outer.
bool contains(const Ideal& outer, const Ideal& inner);
bool same_ideal(const Ideal& a, const Ideal& b);
bool is_proper(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned e);
/// Elimination of an auxiliary variable t from t·A + (1 − t)·B.
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : f). Requires f ≠ 0.
Ideal ideal_quotient(const Ideal& ideal, const Poly& f);
/// (I : J) as the intersection of (I : g) over generators g of J.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);

struct SaturationResult {
  Ideal ideal;
  int steps = 0;  // single-step quotients until stabilization
};

inline constexpr int kSaturationCap = 64;
/// (I : J^∞). Iterates I_{k+1} = (I_k : J) until I_{k+1} ⊆ I_k; throws
/// ComputationError after kSaturationCap steps.
SaturationResult saturate(const Ideal& ideal, const Ideal& by);
Ideal saturation(const Ideal& ideal, const Ideal& by);

bool is_zero_dimensional(const Ideal& ideal, const TermOrder& order);
/// Monomials outside the initial ideal, sorted ascending by `order`.
/// Throws NotZeroDimensional if some variable has no pure-power leading term.
std::vector<Monomial> standard_monomials(const Ideal& ideal, const TermOrder& order);

}  // namespace weylkit
