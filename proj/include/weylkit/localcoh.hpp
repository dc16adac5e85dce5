#pragma once

// Z^n-graded local cohomology H^i_I(R), R = K[x_1..x_n], for monomial ideals,
// through the Čech complex on the generators. Every localization R_m has
// one-dimensional pieces: x^d lies in R_m iff d_j >= 0 for each variable x_j
// not dividing m. Also: Mayer-Vietoris checks, the connecting map for two
// principal ideals, and I-torsion Γ_I.

#include <optional>
#include <string>
#include <vector>

#include "weylkit/graded.hpp"
#include "weylkit/groebner.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/polynomial.hpp"

namespace weylkit {

/// A finite cochain complex of Q-vector spaces; d[t] : C^t → C^{t+1}.
struct FiniteComplex {
  std::vector<Eigen::Index> dims;
  std::vector<QMatrix> d;

  std::size_t length() const { return dims.size(); }
  bool squares_to_zero() const;
  long cohomology_dim(std::size_t t) const;
};

/// Cycle representatives completing a basis of the boundaries to one of the
/// cycles; `coordinates` expresses a cycle in terms of `reps`.
struct CohomologyBasis {
  QMatrix boundaries;
  QMatrix reps;
  QVector coordinates(const QVector& cycle) const;
};
CohomologyBasis cohomology_basis(const FiniteComplex& c, std::size_t t);

/// Monomial generators of an ideal, as exponent vectors.
std::vector<Monomial> monomial_generators(const std::vector<Poly>& gens);
/// Minimal generators of (a) ∩ (b): minimalized pairwise lcms.
std::vector<Monomial> intersect_monomial(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// True iff x^d ∈ R_m.
bool in_localization(const Monomial& m, const ZDeg& d);

/// Čech complex on the generators, at one degree. Term t is ⊕_{|T|=t} R_{f_T},
/// subsets in lexicographic order; only nonzero pieces are kept.
struct CechPiece {
  FiniteComplex complex;
  std::vector<std::vector<std::vector<std::size_t>>> terms;  // terms[t] = subsets with a nonzero piece
};
CechPiece cech_piece(const std::vector<Monomial>& gens, const ZDeg& d);

/// dim H^i_I(R)_d; i beyond the number of generators gives 0.
long cech_cohomology_piece(const std::vector<Monomial>& gens, std::size_t i, const ZDeg& d);
/// All dims H^0..H^r at d.
std::vector<long> cech_cohomology_dims(const std::vector<Monomial>& gens, const ZDeg& d);

struct MVDegree {
  ZDeg degree;
  // H^i for I+J, I, J, I∩J
  std::vector<long> sum, i, j, meet;
  long alternating = 0;
};
struct MVReport {
  std::vector<Monomial> sum_gens, meet_gens;
  std::vector<MVDegree> degrees;
  bool all_vanish = true;
};
MVReport mv_dimension_check(const std::vector<Monomial>& i, const std::vector<Monomial>& j, const Window& w);

struct ConnectingDegree {
  ZDeg degree;
  std::vector<long> h_sum;  // H^t of the cocone, t = 0..2
  std::vector<long> h_oracle;  // Čech on (f, g)
  std::vector<long> h_pair;  // H^t(Č(f) ⊕ Č(g)), t = 0..1
  std::vector<long> h_meet;  // H^t(Č(h)), t = 0..1
  std::vector<long> delta_rank;  // rank of δ^t, t = 0..1
  bool exact = true;
  bool oracle_match = true;
};
struct ConnectingReport {
  Monomial f, g, h;
  std::vector<ConnectingDegree> degrees;
  bool exact = true;
  bool oracle_match = true;
  bool d_linear = true;
  std::size_t squares_checked = 0;
};
/// Builds Kc = cocone of Č(f) ⊕ Č(g) → Č(lcm(f,g)), (a, b) ↦ a − b, so that
/// Kc^t = A^t ⊕ Č(h)^{t−1} and d(a, b) = (d a, Φa − d b). Its long exact
/// sequence is checked node by node, H(Kc) is compared with Č(f, g), and δ is
/// checked against every ∂_k on squares whose target degree lies in the
/// window. Throws WindowTooSmall if no square fits.
ConnectingReport mv_connecting_biprincipal(const Monomial& f, const Monomial& g, const Window& w);

/// Γ_I(R/J) = (J : I^∞)/J.
struct GammaCyclic {
  Ideal saturation;
  bool zero = false;  // saturation equals J
};
GammaCyclic gamma_cyclic(const Ideal& j, const Ideal& i);

/// R_f, or R_f/R_g when g divides f.
struct LocalizationModel {
  Monomial f;
  std::optional<Monomial> g;

  bool piece(const ZDeg& d) const;
  std::string to_string(const PolyRing& ring) const;
};

/// Whether the basis element x^d of M is killed by a power of I (I given by
/// monomial generators; a constant generator means I = R, none means I = 0).
bool is_torsion(const LocalizationModel& m, const std::vector<Monomial>& i, const ZDeg& d);
/// Degrees in the window whose piece of Γ_I(M) is nonzero.
std::vector<ZDeg> gamma_localization(const LocalizationModel& m, const std::vector<Monomial>& i, const Window& w);

struct DStableReport {
  bool stable = true;
  std::size_t torsion_elements = 0;
  std::size_t checked = 0;
  std::size_t flagged = 0;  // images outside the window
};
/// ∂_k(x^d) = d_k x^{d−e_k} must stay in Γ_I(M) for every torsion x^d in the
/// window. Throws WindowTooSmall when the window has no room for a shift.
DStableReport gamma_dstable_check(const LocalizationModel& m, const std::vector<Monomial>& i, const Window& w);

}  // namespace weylkit
