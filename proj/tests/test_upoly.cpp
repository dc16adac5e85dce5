#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "weylkit/upoly.hpp"

using namespace weylkit;

namespace {

UPoly U(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return UPoly(std::move(c));
}

UPoly expand(const std::vector<std::pair<UPoly, unsigned>>& fs) {
  UPoly acc(Rational(1));
  for (const auto& [f, e] : fs) acc = acc * f.pow(e);
  return acc;
}

bool is_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.numerator().get_mpz_t()) && mpz_perfect_square_p(q.denominator().get_mpz_t());
}

}  // namespace

TEST_CASE("division and gcd") {
  const UPoly a = U({-1, 0, 1});  // t^2 - 1
  const UPoly b = U({1, 1});
  CHECK(divmod(a, b).quotient == U({-1, 1}));
  CHECK(divmod(a, b).remainder.is_zero());
  CHECK(gcd(a, U({-1, 1}) * U({2, 1})) == U({-1, 1}));
  const auto e = extended_gcd(U({0, 0, 1}), U({1, 1}));
  CHECK(e.g == UPoly(Rational(1)));
  CHECK(e.s * U({0, 0, 1}) + e.t * U({1, 1}) == e.g);
  CHECK(U({3, 0, 1}).to_string("x") == "x^2 + 3");
}

TEST_CASE("squarefree decomposition") {
  const UPoly f = U({-1, 1}).pow(3) * U({2, 0, 1}) * U({0, 1}).pow(2);
  const auto sf = squarefree_factorization(f);
  REQUIRE(sf.size() == 3);
  CHECK(expand(sf) == f.monic());
  CHECK(sf[0] == std::pair<UPoly, unsigned>{U({2, 0, 1}), 1});
  CHECK(sf[1] == std::pair<UPoly, unsigned>{U({0, 1}), 2});
  CHECK(sf[2] == std::pair<UPoly, unsigned>{U({-1, 1}), 3});
}

TEST_CASE("factorization of classic cases") {
  // Irreducible over Q but reducible modulo every prime.
  CHECK(factor(U({1, 0, 0, 0, 1})).size() == 1);
  CHECK(factor(U({1, 0, -10, 0, 1})).size() == 1);
  const auto cyc = factor(U({-1, 0, 0, 0, 0, 0, 1}));
  REQUIRE(cyc.size() == 4);
  CHECK(cyc[0].first == U({-1, 1}));
  CHECK(cyc[1].first == U({1, 1}));
  CHECK(cyc[2].first == U({1, -1, 1}));
  CHECK(cyc[3].first == U({1, 1, 1}));
  const auto two = factor(U({-2, 0, 1}) * U({-3, 0, 1}));
  CHECK(two.size() == 2);
  const auto nonmonic = factor(U({-1, 0, 4}) * U({1, 3}));
  REQUIRE(nonmonic.size() == 3);
  CHECK(nonmonic[0].first == UPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)}));
  CHECK(is_irreducible(U({1, 1, 1})));
  CHECK_FALSE(is_irreducible(U({0, 0, 1})));
}

TEST_CASE("random products of known irreducibles factor back exactly") {
  testing::Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<UPoly, unsigned>> expected;
    UPoly prod(Rational(gen.integer(1, 5)));
    const int nf = static_cast<int>(gen.integer(1, 4));
    for (int i = 0; i < nf; ++i) {
      UPoly q;
      if (gen.integer(0, 1) == 0) {
        q = U({gen.integer(-6, 6), 1});
      } else {
        // Quadratic t^2 + b t + c is irreducible iff b^2 - 4c is not a square.
        long b, c;
        do {
          b = gen.integer(-5, 5);
          c = gen.integer(-6, 6);
        } while (is_square(Rational(b * b - 4 * c)));
        q = U({c, b, 1});
      }
      const unsigned e = static_cast<unsigned>(gen.integer(1, 2));
      prod = prod * q.pow(e);
      auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& p) { return p.first == q; });
      if (it == expected.end()) expected.emplace_back(q, e);
      else it->second += e;
    }
    auto got = factor(prod);
    CHECK(expand(got) == prod.monic());
    REQUIRE(got.size() == expected.size());
    for (const auto& p : expected) CHECK(std::find(got.begin(), got.end(), p) != got.end());
  }
}

TEST_CASE("minimal polynomial") {
  QMatrix d = QMatrix::Zero(3, 3);
  d(0, 0) = Rational(1);
  d(1, 1) = Rational(1);
  d(2, 2) = Rational(2);
  CHECK(minimal_polynomial(d) == U({-1, 1}) * U({-2, 1}));
  QMatrix j = QMatrix::Zero(3, 3);
  j(1, 0) = Rational(1);
  j(2, 1) = Rational(1);
  CHECK(minimal_polynomial(j) == U({0, 0, 0, 1}));
  CHECK(is_zero<Rational>(evaluate(minimal_polynomial(j), j)));
}

TEST_CASE("invariant factors over Q[t]") {
  const UPoly t = UPoly::t();
  auto f = invariant_factors({{t, UPoly()}, {UPoly(), t + UPoly(Rational(1))}});
  REQUIRE(f.size() == 2);
  CHECK(f[0] == UPoly(Rational(1)));
  CHECK(f[1] == t * (t + UPoly(Rational(1))));
  f = invariant_factors({{t, t}, {t, t}});
  REQUIRE(f.size() == 1);
  CHECK(f[0] == t);
}

TEST_CASE("conversion to and from multivariate polynomials") {
  const PolyRing r({"x", "y"});
  const UPoly p = U({1, 0, 3});
  const Poly q = to_poly(p, r, 1);
  CHECK(q.to_string() == "3*y^2 + 1");
  CHECK(*from_poly(q, 1) == p);
  CHECK_FALSE(from_poly(q, 0).has_value());
}
