#pragma once

// Koszul complexes over R = K[x_1..x_n], regular sequences, and the local
// membership tests used for prime avoidance.
//
// Convention::Right treats chains as row vectors: the degree-k map is a
// C(g,k) × C(g,k−1) matrix acting on the right of a row, with rows indexed by
// k-subsets in lexicographic order and d(e_T) = Σ_j (−1)^j a_{t_j} e_{T∖t_j}.
// Convention::Left is the transpose.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/groebner.hpp"
#include "weylkit/polynomial.hpp"

namespace weylkit {

class PolyMatrix {
 public:
  PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols);

  const PolyRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  bool is_zero() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  /// Row-major list of rows, each a list of polynomial strings.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  PolyRing ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

enum class Convention { Right, Left };

/// k-element subsets of {0..g-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t g, std::size_t k);

/// The degree-k Koszul differential, 1 ≤ k ≤ g.
PolyMatrix koszul_map(const std::vector<Poly>& a, std::size_t k, Convention conv = Convention::Right);

struct KoszulComplex {
  std::vector<Poly> elements;
  Convention convention;
  std::vector<PolyMatrix> maps;  // maps[k-1] is the degree-k differential
};
KoszulComplex koszul_complex(const std::vector<Poly>& a, Convention conv = Convention::Right);
/// Every consecutive composition is the zero matrix.
bool composes_to_zero(const KoszulComplex& k);

/// ψ_r assembled from the block recursion: rows (−a_i, 0.., a_1, 0..) for
/// i = 2..r, then [0 | ψ̃_{r−1}] for the tail a_2..a_r. The comparison with
/// koszul_map(a, 2, Right) is recorded as a row permutation with signs.
struct InductivePsi {
  PolyMatrix psi;
  std::vector<std::size_t> row_permutation;  // inductive row i = exterior row perm[i]
  std::vector<int> row_signs;                // ... times this sign
  bool matches = false;
};
InductivePsi build_psi_inductive(const std::vector<Poly>& a);

/// ψ_g · w_g with w_g = [φ(a_1), .., φ(a_g)]^tr for φ(a) = a·e, e ∈ R^m.
struct PsiWCheck {
  PolyMatrix product;
  bool zero = false;
};
PsiWCheck psi_w_check(const std::vector<Poly>& a, const std::vector<Poly>& e);

struct RegularityCertificate {
  bool regular = false;
  bool proper = true;
  /// 1-based index i where (a_1..a_{i−1}) : a_i grows; 0 if none.
  std::size_t failing_index = 0;
  /// Element of the colon ideal outside (a_1..a_{i−1}).
  std::optional<Poly> witness;
};
RegularityCertificate is_regular_sequence(const std::vector<Poly>& a, const PolyRing& ring);

/// f ∈ Q·R_P ∩ R, decided as (Q : f) ⊄ P. P is assumed prime.
bool local_member(const Poly& f, const Ideal& q, const Ideal& p);
/// f ∈ P^(2) = P²R_P ∩ R.
bool symbolic_power2_member(const Poly& f, const Ideal& p);

inline constexpr int kPrimeAvoidanceTrials = 200;

struct PrimeAvoidanceResult {
  std::vector<Poly> sequence;
  std::vector<int> trial_indices;  // global trial number at which x_i was accepted
  int trials_used = 0;
};

/// x_1..x_g in P, regular, with x_i ∉ P^(2) + (x_1..x_{i−1}) locally at P.
/// Candidates are integer combinations of P's generators with coefficients
/// in [−5, 5] drawn from a seeded mt19937_64. P prime and height(P) ≥ g are
/// the caller's responsibility. Throws ComputationError after
/// kPrimeAvoidanceTrials candidates.
PrimeAvoidanceResult prime_avoidance_sequence(const Ideal& p, std::size_t g, std::uint64_t seed);

}  // namespace weylkit
