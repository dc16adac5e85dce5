#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/ore.hpp"

using namespace weylkit;

namespace {

const PolyRing kX1 = PolyRing::numbered(1);
const OreRing kA1 = OreRing::weyl(kX1);

DiffOp Op(const OreRing& r, const char* s) { return parse_op(s, r); }

Poly P(const PolyRing& r, const char* s) { return parse_poly(s, r); }

// Σ g^α·ψ_α evaluated by the rewriting product alone.
DiffOp right_by_rewriting(const DiffOp& r) {
  DiffOp acc(r.ring(), NormalForm::Left);
  for (const auto& [alpha, psi] : r.terms())
    acc = acc + op_mul(DiffOp::op_monomial(r.ring(), alpha), DiffOp::from_poly(r.ring(), psi));
  return acc;
}

DiffOp random_op(testing::Gen& gen, const OreRing& ring, unsigned max_order, unsigned max_deg, int terms) {
  DiffOp::TermMap t;
  const int n = static_cast<int>(gen.integer(1, terms));
  DiffOp acc(ring, NormalForm::Left);
  for (int i = 0; i < n; ++i) {
    t.clear();
    t.emplace(gen.monomial(ring.num_ops(), max_order), gen.poly(ring.base(), max_deg, 3));
    acc = acc + DiffOp(ring, NormalForm::Left, t);
  }
  return acc;
}

}  // namespace

TEST_CASE("op_mul examples") {
  CHECK(op_mul(Op(kA1, "d1"), Op(kA1, "x1")) == Op(kA1, "x1*d1 + 1"));
  CHECK(op_mul(Op(kA1, "x1*d1"), Op(kA1, "x1*d1")).to_string() == "x1^2*d1^2 + x1*d1");
  CHECK(op_mul(Op(kA1, "d1^2"), Op(kA1, "x1")).to_string() == "x1*d1^2 + 2*d1");
  CHECK(Op(kA1, "d1*x1").to_string() == "x1*d1 + 1");
  const OreRing other = OreRing::weyl(PolyRing::numbered(2));
  CHECK_THROWS_AS(op_mul(Op(kA1, "d1"), Op(other, "d1")), UsageError);
}

TEST_CASE("to_right_nf examples") {
  CHECK(to_right_nf(Op(kA1, "x1*d1")).to_string() == "d1*x1 - 1");
  const DiffOp p = Op(kA1, "x1^3 - 2");
  CHECK(to_right_nf(p).terms() == p.terms());
  CHECK(to_right_nf(Op(kA1, "x1*d1^2")).to_string() == "d1^2*x1 - 2*d1");
}

TEST_CASE("to_left_nf examples") {
  DiffOp::TermMap t;
  t.emplace(OpExp{1}, P(kX1, "x1"));
  CHECK(to_left_nf(DiffOp(kA1, NormalForm::Right, t)).to_string() == "x1*d1 + 1");
  t.clear();
  t.emplace(OpExp{2}, P(kX1, "x1^2"));
  CHECK(to_left_nf(DiffOp(kA1, NormalForm::Right, t)).to_string() == "x1^2*d1^2 + 4*x1*d1 + 2");
  const OreRing ore = OreRing::single_ore(kX1, {kX1.one()});
  t.clear();
  t.emplace(OpExp{1}, P(kX1, "x1"));
  CHECK(to_left_nf(DiffOp(ore, NormalForm::Right, t)).to_string() == "x1*X + 1");
}

TEST_CASE("apply examples") {
  CHECK(apply(Op(kA1, "d1"), P(kX1, "x1^2")) == P(kX1, "2*x1"));
  CHECK(apply(Op(kA1, "x1*d1"), P(kX1, "x1^3")) == P(kX1, "3*x1^3"));
  const LocalizedFraction inv(kX1.one(), P(kX1, "x1"), 1);
  const LocalizedFraction got = apply(Op(kA1, "d1"), inv);
  CHECK(got == LocalizedFraction(-kX1.one(), P(kX1, "x1"), 2));
  CHECK(got.power() == 2);
  CHECK(got.to_string() == "-1/x1^2");
  // Canonical form drops removable powers even for non-monomial bases.
  const LocalizedFraction c(P(kX1, "x1^2 - 1"), P(kX1, "x1 + 1"), 2);
  CHECK(c.power() == 1);
  CHECK(c.numerator() == P(kX1, "x1 - 1"));
}

TEST_CASE("SI membership examples") {
  const Ideal i(kX1, {P(kX1, "x1")});
  CHECK(in_left_ideal_SI(Op(kA1, "x1"), i));
  CHECK_FALSE(in_left_ideal_SI(Op(kA1, "x1*d1"), i));
  CHECK(in_left_ideal_SI(Op(kA1, "x1^2*d1"), i));
}

TEST_CASE("verify_star examples") {
  const Ideal i(kX1, {P(kX1, "x1")});
  CHECK(verify_star(i, Op(kA1, "x1^2 + 3"), 5).r == 1);
  CHECK(verify_star(i, Op(kA1, "d1"), 5).r == 2);
  CHECK(verify_star(i, Op(kA1, "d1^2"), 5).r == 3);
  CHECK_THROWS_AS(verify_star(i, Op(kA1, "d1^2"), 2), ComputationError);
}

TEST_CASE("round trip between normal forms") {
  testing::Gen gen(31);
  for (std::size_t n = 1; n <= 3; ++n) {
    const OreRing ring = OreRing::weyl(PolyRing::numbered(n));
    for (int t = 0; t < 20; ++t) {
      const DiffOp s = random_op(gen, ring, 4, 4, 4);
      const DiffOp r = to_right_nf(s);
      CHECK(to_left_nf(r) == s);
      CHECK(right_by_rewriting(r) == s);
      CHECK(to_right_nf(to_left_nf(r)) == r);
    }
  }
}

TEST_CASE("commutation formula for powers of a derivation") {
  testing::Gen gen(32);
  const PolyRing r2 = PolyRing::numbered(2);
  const OreRing a2 = OreRing::weyl(r2);
  for (int t = 0; t < 10; ++t) {
    const Poly a = gen.poly(r2, 5, 4);
    for (unsigned m = 1; m <= 6; ++m) {
      DiffOp lhs = DiffOp::from_poly(a2, r2.one());
      for (unsigned k = 0; k < m; ++k) lhs = op_mul(lhs, DiffOp::generator(a2, 0));
      lhs = op_mul(lhs, DiffOp::from_poly(a2, a));
      DiffOp::TermMap closed;
      mpz_class c;
      for (unsigned i = 0; i <= m; ++i) {
        mpz_bin_uiui(c.get_mpz_t(), m, i);
        Poly d = a;
        for (unsigned k = 0; k < m - i; ++k) d = partial_derivative(d, 0);
        if (!d.is_zero()) closed.emplace(OpExp::unit(0, i), Rational(c) * d);
      }
      CHECK(lhs == DiffOp(a2, NormalForm::Left, closed));
    }
  }
}

TEST_CASE("differential polynomial ring identity") {
  testing::Gen gen(33);
  const PolyRing r = PolyRing::numbered(1);
  for (const char* dx : {"1", "x1^2"}) {
    const OreRing ore = OreRing::single_ore(r, {P(r, dx)});
    for (int t = 0; t < 6; ++t) {
      const Poly a = gen.poly(r, 5, 4);
      for (unsigned n = 1; n <= 5; ++n) {
        const DiffOp lhs = op_mul(DiffOp::op_monomial(ore, OpExp::unit(0, n)), DiffOp::from_poly(ore, a));
        DiffOp::TermMap closed;
        mpz_class c;
        Poly d = a;
        for (unsigned i = 0; i <= n; ++i) {
          mpz_bin_uiui(c.get_mpz_t(), n, i);
          if (!d.is_zero()) closed.emplace(OpExp::unit(0, n - i), Rational(c) * d);
          d = partial_derivative(d, 0) * P(r, dx);
        }
        CHECK(lhs == DiffOp(ore, NormalForm::Left, closed));
      }
    }
  }
}

TEST_CASE("ring axioms and module compatibility") {
  testing::Gen gen(34);
  const PolyRing r2 = PolyRing::numbered(2);
  const OreRing a2 = OreRing::weyl(r2);
  for (int t = 0; t < 15; ++t) {
    const DiffOp a = random_op(gen, a2, 2, 2, 3), b = random_op(gen, a2, 2, 2, 3), c = random_op(gen, a2, 2, 2, 3);
    CHECK(op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c)));
    CHECK(op_mul(a, b + c) == op_mul(a, b) + op_mul(a, c));
    const Poly m = gen.poly(r2, 4, 4);
    CHECK(apply(op_mul(a, b), m) == apply(a, apply(b, m)));
    const LocalizedFraction f(m, P(r2, "x1*x2"), 2);
    CHECK(apply(op_mul(a, b), f) == apply(a, apply(b, f)));
  }
  // Restricted to R, the product is the commutative one.
  const Poly p = P(r2, "x1 + x2^2"), q = P(r2, "3*x1*x2 - 1");
  CHECK(op_mul(DiffOp::from_poly(a2, p), DiffOp::from_poly(a2, q)) == DiffOp::from_poly(a2, p * q));
}

TEST_CASE("derivations satisfy Leibniz") {
  testing::Gen gen(35);
  const PolyRing r2 = PolyRing::numbered(2);
  const OreRing ore = OreRing::single_ore(r2, {P(r2, "x2"), P(r2, "x1^2")});
  for (int t = 0; t < 20; ++t) {
    const Poly a = gen.poly(r2, 3, 3), b = gen.poly(r2, 3, 3);
    CHECK(ore.derive(0, a * b) == ore.derive(0, a) * b + a * ore.derive(0, b));
  }
}

TEST_CASE("star bound over random operators") {
  testing::Gen gen(36);
  const PolyRing r2 = PolyRing::numbered(2);
  const OreRing a2 = OreRing::weyl(r2);
  for (int t = 0; t < 6; ++t) {
    const DiffOp s = random_op(gen, a2, 3, 2, 2);
    const Ideal i(r2, {r2.term(gen.monomial(2, 2) * Monomial{1, 0}), r2.term(Monomial{0, 1})});
    const auto res = verify_star(i, s, 6);
    CHECK(res.r <= std::max(s.order(), 0) + 1);
  }
}

TEST_CASE("operator printing re-parses") {
  testing::Gen gen(37);
  const OreRing a2 = OreRing::weyl(PolyRing::numbered(2));
  for (int t = 0; t < 20; ++t) {
    const DiffOp s = random_op(gen, a2, 3, 3, 3);
    CHECK(parse_op(s.to_string(), a2) == s);
    CHECK(parse_op(to_right_nf(s).to_string(), a2) == s);
  }
}
