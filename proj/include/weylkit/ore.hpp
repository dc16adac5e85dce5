#pragma once

// Weyl algebras A_n(K) and single-variable differential polynomial rings
// R[X; δ]. Both are treated uniformly: a list of pairwise commuting operator
// symbols g_1..g_m, each acting on R = K[x_1..x_n] by a derivation D_i, with
// the single commutation rule g_i·p = p·g_i + D_i(p).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/groebner.hpp"
#include "weylkit/polynomial.hpp"

namespace weylkit {

class OreRing {
 public:
  enum class Kind { Weyl, SingleOre };

  /// ∂_i = ∂/∂x_i for every base variable; symbols d1..dn.
  static OreRing weyl(PolyRing base);
  /// One symbol X with δ(x_j) = delta_on_generators[j], extended by Leibniz.
  static OreRing single_ore(PolyRing base, std::vector<Poly> delta_on_generators);

  Kind kind() const { return kind_; }
  const PolyRing& base() const { return base_; }
  std::size_t num_ops() const { return op_names_.size(); }
  const std::vector<std::string>& op_names() const { return op_names_; }
  const std::vector<Poly>& delta() const { return delta_; }

  /// D_i(p): the derivation by which operator i acts on R.
  Poly derive(std::size_t op, const Poly& p) const;
  Poly derive_power(std::size_t op, const Poly& p, unsigned times) const;

  friend bool operator==(const OreRing& a, const OreRing& b);

 private:
  OreRing(Kind kind, PolyRing base, std::vector<Poly> delta, std::vector<std::string> names)
      : kind_(kind), base_(std::move(base)), delta_(std::move(delta)), op_names_(std::move(names)) {}

  Kind kind_;
  PolyRing base_;
  std::vector<Poly> delta_;  // SingleOre only
  std::vector<std::string> op_names_;
};

/// Operator exponents reuse the monomial type: entry i is the power of g_i.
using OpExp = Monomial;

enum class NormalForm { Left, Right };

/// Σ φ_α(x)·g^α (Left) or Σ g^α·ψ_α(x) (Right). No zero coefficients are
/// stored, so each abstract element has exactly one representation per form.
class DiffOp {
 public:
  using TermMap = std::map<OpExp, Poly>;

  DiffOp(OreRing ring, NormalForm form) : ring_(std::move(ring)), form_(form) {}
  DiffOp(OreRing ring, NormalForm form, TermMap terms);

  static DiffOp from_poly(const OreRing& ring, const Poly& p, NormalForm form = NormalForm::Left);
  /// g^alpha with coefficient 1.
  static DiffOp op_monomial(const OreRing& ring, const OpExp& alpha, NormalForm form = NormalForm::Left);
  static DiffOp generator(const OreRing& ring, std::size_t op);

  const OreRing& ring() const { return ring_; }
  NormalForm form() const { return form_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coefficient(const OpExp& alpha) const;
  /// max |α| over stored terms; -1 for zero.
  int order() const;

  DiffOp operator-() const;
  /// Termwise; both operands must share ring and form.
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
  /// Same form and identical terms.
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  /// Terms sorted by α under grevlex, descending; e.g. "x1*d1 + 1" or
  /// "d1*x1 - 1" for the right form.
  std::string to_string() const;

 private:
  OreRing ring_;
  NormalForm form_;
  TermMap terms_;
};

/// Product in left normal form, by repeated use of the single commutation
/// rule (worklist over (pending operators, emitted operators)).
DiffOp op_mul(const DiffOp& s, const DiffOp& t);
DiffOp to_right_nf(const DiffOp& s);
DiffOp to_left_nf(const DiffOp& s);

/// p/f^k, stored with the smallest k (exact division by f is tried).
class LocalizedFraction {
 public:
  LocalizedFraction(Poly numerator, Poly base, unsigned power);

  const Poly& numerator() const { return num_; }
  const Poly& base() const { return base_; }
  unsigned power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Cross-multiplication, so fractions over different bases compare too.
  friend bool operator==(const LocalizedFraction& a, const LocalizedFraction& b);
  std::string to_string() const;

 private:
  Poly num_;
  Poly base_;
  unsigned k_;
};

Poly apply(const DiffOp& s, const Poly& m);
/// Weyl kind only; ∂_i acts by the quotient rule.
LocalizedFraction apply(const DiffOp& s, const LocalizedFraction& m);

/// t ∈ S·I, decided as: every right-normal-form coefficient of t lies in I.
bool in_left_ideal_SI(const DiffOp& t, const Ideal& ideal);

struct StarResult {
  int r = 0;
  int products_checked = 0;
};

/// Least r ≤ r_max with b·s ∈ S·I for every product b of r generators of I.
/// Throws ComputationError if none is found.
StarResult verify_star(const Ideal& ideal, const DiffOp& s, int r_max);

/// Parses an operator expression (base variables plus operator symbols) and
/// normalizes it to left normal form.
DiffOp parse_op(std::string_view text, const OreRing& ring);

}  // namespace weylkit
