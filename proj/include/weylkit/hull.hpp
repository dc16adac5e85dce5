#pragma once

// Finite extensions S of R = K[x] that are free R-modules, presented as
// S = K[x,y]/(h) with h monic in y, and the injective hull E_S(S/m) seen as an
// R-module: the multiplicity c with E_S(S/m) = E_R(R/n)^c computed from the
// local factors of S/nS, and an independent oracle counting dim (0 :_E n^k)
// on the truncation (0 :_E m^B), the K-dual of S/m^B.

#include <string>
#include <vector>

#include "weylkit/artin.hpp"
#include "weylkit/groebner.hpp"
#include "weylkit/upoly.hpp"

namespace weylkit {

class CurveExtension {
 public:
  /// S = K[y] with x ↦ f(y); f must involve only the extension variable.
  static CurveExtension from_map(const Poly& f, const std::vector<Poly>& maximal);
  /// S = K[x,y]/(h); h must be monic in y of positive y-degree.
  static CurveExtension from_relation(const Poly& h, const std::vector<Poly>& maximal);

  /// Variables are (base, extension) in that order.
  const PolyRing& ring() const { return ring_; }
  const Poly& relation() const { return h_; }
  const std::vector<Poly>& maximal_generators() const { return m_; }
  unsigned rank() const { return h_.degree_in(1); }

  Ideal presentation() const { return Ideal(ring_, {h_}); }
  /// (h) + m in K[x,y].
  Ideal maximal_ideal() const;
  std::string to_string() const;

 private:
  CurveExtension(Poly h, std::vector<Poly> maximal);
  void validate() const;

  PolyRing ring_;
  Poly h_;
  std::vector<Poly> m_;
};

/// The monic generator of n = m ∩ K[x]: the minimal polynomial of x on S/m.
UPoly contraction(const CurveExtension& x);

struct MultiplicityReport {
  UPoly n;
  std::size_t residue_dim = 0;  // dim_K R/n
  std::size_t algebra_dim = 0;  // dim_K S/nS
  std::vector<std::size_t> factor_dims;
  std::size_t matched_factor = 0;
  std::size_t c = 0;  // ℓ_R(S/Q_1)
  /// Generators of Q_1 in K[x,y]: h, n(x), and a lift of 1 − e_1.
  std::vector<Poly> q1_generators;
};

/// c = dim_K(A_1) / dim_K(R/n) for the local factor A_1 of S/nS at m.
/// Throws ComputationError when no factor matches m.
MultiplicityReport hull_multiplicity(const CurveExtension& x);

/// (0 :_E m^B) as the K-dual of T = S/m^B; x and y act by transposes.
struct TruncatedHull {
  unsigned level = 0;
  ArtinAlgebra quotient;  // T
  QMatrix x_action, y_action;

  std::size_t dim() const { return quotient.dim(); }
  /// Action on E of a polynomial of K[x,y].
  QMatrix action(const Poly& p) const;
};

TruncatedHull truncated_hull(const CurveExtension& x, unsigned level);

/// An exponent e with m^e S_m ⊆ nS_m: dim_K S/nS bounds the nilpotency index.
unsigned exponent_bound(const CurveExtension& x);
/// Level that makes socle_growth_oracle valid up to k_max.
inline unsigned oracle_level(const CurveExtension& x, unsigned k_max) { return k_max * exponent_bound(x) + 1; }

/// dim_K (0 :_E n^k) for k = 1..k_max on the level-B truncation. Each k is
/// certified by m^{B−1} ⊆ n^k + m^B in T (Nakayama gives m^B ⊆ n^k locally);
/// throws ComputationError when that fails.
std::vector<long> socle_growth_oracle(const CurveExtension& x, unsigned k_max, unsigned level);

/// Associated primes over K[x] of the truncated hull. Throws if some element
/// is not killed by a power of n.
std::vector<UPoly> ass_truncated_hull(const TruncatedHull& e, const UPoly& n);

/// (0 :_E n) = (0 :_E Q_1) inside the truncation.
bool socle_matches_q1(const TruncatedHull& e, const MultiplicityReport& r);

/// dim_K S/m^k from the standard monomials of (h) + m^k.
std::size_t quotient_dim(const CurveExtension& x, unsigned k);

}  // namespace weylkit
