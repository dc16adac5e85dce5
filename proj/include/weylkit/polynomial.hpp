#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/rational.hpp"

namespace weylkit {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Entries past the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> e);

  static Monomial unit(std::size_t var, unsigned power = 1);

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  std::uint16_t& operator[](std::size_t i) { return exp[i]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Monomial order: graded reverse lex (default), lex, or a two-block
/// elimination order (grevlex on the first `eliminate` variables of the
/// priority list, ties broken by grevlex on the rest).
class TermOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, Elimination };

  static TermOrder grevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);
  /// `priority[0]` is the largest variable.
  static TermOrder grevlex(std::vector<int> priority);
  static TermOrder lex(std::vector<int> priority);
  static TermOrder elimination(std::size_t nvars, std::size_t eliminate);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  Kind kind() const { return kind_; }
  const std::vector<int>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }
  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::vector<int> priority, std::size_t eliminate);
  std::strong_ordering grevlex_on(const Monomial& a, const Monomial& b, std::size_t from,
                                  std::size_t to) const;

  Kind kind_ = Kind::GradedReverseLex;
  std::vector<int> priority_;
  std::size_t eliminate_ = 0;
};

class Poly;

/// Ordered list of variable names; cheap to copy. Two rings are equal when
/// their name lists are equal.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);
  /// Variables prefix1..prefixN.
  static PolyRing numbered(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Poly zero() const;
  Poly one() const;
  Poly constant(const Rational& c) const;
  Poly var(std::size_t i) const;
  Poly term(const Monomial& m, const Rational& c = Rational(1)) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse polynomial with exact rational coefficients. Immutable in spirit:
/// arithmetic returns fresh canonical values and no zero coefficient is
/// ever stored, so equal polynomials have identical term maps.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}
  Poly(PolyRing ring, TermMap terms);

  const PolyRing& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(const Monomial& m) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Leading (monomial, coefficient) under `order`; requires nonzero.
  std::pair<Monomial, Rational> leading(const TermOrder& order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }
  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;
  /// Divides by the leading coefficient under `order`.
  Poly monic(const TermOrder& order) const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Terms sorted descending by `order`, e.g. "x1^2*x2 - 3/2*x1 + 1".
  std::string to_string(const TermOrder& order) const;
  std::string to_string() const { return to_string(TermOrder::grevlex(ring_.size())); }

 private:
  void check_same_ring(const Poly& o) const;

  PolyRing ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

enum class ArithOp { Add, Sub, Mul };
/// Checked ring arithmetic; throws VariableMismatch if the rings differ.
Poly poly_arith(const Poly& p, const Poly& q, ArithOp which);

Poly partial_derivative(const Poly& p, std::size_t var);

/// Exact quotient p / q, or nullopt if q does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

/// Moves p into `target`, sending variable i of p's ring to variable
/// var_map[i] of the target.
Poly embed(const Poly& p, const PolyRing& target, const std::vector<std::size_t>& var_map);

}  // namespace weylkit
