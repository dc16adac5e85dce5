#pragma once

// Finite-dimensional commutative algebras K[x]/I (I zero-dimensional), their
// splitting into local factors, and injective hulls of finite modules over
// them.

#include <cstdint>
#include <vector>

#include "weylkit/groebner.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/upoly.hpp"

namespace weylkit {

/// A = R/I with K-basis the standard monomials of I. Elements are coordinate
/// vectors in that basis.
class ArtinAlgebra {
 public:
  /// Throws NotZeroDimensional.
  explicit ArtinAlgebra(const Ideal& ideal);

  const PolyRing& ring() const { return ring_; }
  const GroebnerBasis& basis_gb() const { return gb_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  QVector one() const { return coords(ring_.one()); }
  QVector coords(const Poly& p) const;
  Poly lift(const QVector& v) const;
  QVector mul(const QVector& a, const QVector& b) const;
  /// Multiplication by a (columns: images of basis elements).
  QMatrix mult_matrix(const QVector& a) const;
  QMatrix mult_matrix(const Poly& p) const { return mult_matrix(coords(p)); }
  /// Multiplication by the i-th variable.
  const QMatrix& generator(std::size_t i) const { return gens_[i]; }
  /// Multiplication by the i-th basis monomial.
  const QMatrix& basis_mult(std::size_t i) const { return basis_mult_[i]; }

  /// Nilradical, as the kernel of the trace form (characteristic zero).
  QMatrix radical() const;

 private:
  PolyRing ring_;
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::vector<QMatrix> gens_;
  std::vector<QMatrix> basis_mult_;
};

ArtinAlgebra artin_from_presentation(const Ideal& ideal);

struct LocalFactor {
  QVector idempotent;
  QMatrix basis;  // columns span e·A
  std::size_t dim = 0;
  /// Irreducible factor of the primitive element's minimal polynomial.
  UPoly residue_poly;
  std::size_t residue_dim = 0;
  /// Columns span the maximal ideal (1 − e)A + rad(eA) of A.
  QMatrix max_ideal;
};

struct LocalDecomposition {
  std::vector<LocalFactor> factors;
  QVector primitive;  // generates A/rad(A)
  UPoly primitive_minpoly;
  QMatrix radical;
};

/// Splits A along the CRT idempotents of a primitive element of A/rad(A).
LocalDecomposition decompose_local(const ArtinAlgebra& a);

/// e² = e, e_i e_j = 0, Σ e_i = 1 and Σ dim = dim A, checked exactly.
bool decomposition_is_sound(const ArtinAlgebra& a, const LocalDecomposition& d);

/// Index of the factor whose maximal ideal contains every element of `gens`
/// (that is, e·g is nilpotent), or -1.
int matching_factor(const ArtinAlgebra& a, const LocalDecomposition& d, const std::vector<QVector>& gens);

/// A finite A-module: one action matrix per variable of A's ring.
struct FiniteModule {
  std::vector<QMatrix> actions;
  std::size_t dim() const { return actions.empty() ? 0 : static_cast<std::size_t>(actions.front().rows()); }
};

/// Action of an algebra element on the module.
QMatrix module_action(const ArtinAlgebra& a, const FiniteModule& m, const QVector& element);
/// Columns span {m : rad(A)·m = 0}.
QMatrix socle(const ArtinAlgebra& a, const FiniteModule& m);

struct HullSummand {
  std::size_t factor = 0;
  std::size_t copies = 0;
};

struct InjectiveHull {
  FiniteModule hull;
  QMatrix embedding;  // hull.dim × m.dim, A-linear and injective
  std::vector<HullSummand> summands;
  bool linear = false;
  bool injective_map = false;
  /// socle(E) ⊆ image of the embedding.
  bool essential = false;
  /// Each summand (e_jA)^∨ has socle of dimension residue_dim and A_j acts
  /// faithfully on it.
  bool summands_injective = false;
};

/// E = ⊕_j ((e_jA)^∨)^{s_j} with s_j = dim soc(e_j M) / residue_dim_j, with a
/// seeded search for the embedding functionals.
InjectiveHull essential_and_hull_findim(const ArtinAlgebra& a, const LocalDecomposition& d, const FiniteModule& m,
                                        std::uint64_t seed = 1);

/// Associated primes over K[t] of a finite-dimensional module on which t acts
/// by `t_action`: the monic irreducible factors of its minimal polynomial.
std::vector<UPoly> ass_torsion(const QMatrix& t_action);

/// Associated primes over K[t] of coker(K[t]^cols → K[t]^rows) given by
/// `relations` (rows × cols). The zero polynomial stands for the prime (0).
std::vector<UPoly> ass_presented(const std::vector<std::vector<UPoly>>& relations, std::size_t rows);

}  // namespace weylkit
