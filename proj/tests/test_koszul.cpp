#include <doctest.h>

#include "support.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/graded.hpp"
#include "weylkit/koszul.hpp"

using namespace weylkit;

namespace {

const PolyRing kXY({"x", "y"});
const PolyRing kXYZ({"x", "y", "z"});

std::vector<Poly> L(const PolyRing& r, const char* s) { return parse_poly_list(s, r); }
Poly P(const PolyRing& r, const char* s) { return parse_poly(s, r); }

Poly random_form(testing::Gen& gen, const PolyRing& ring, int degree) {
  Poly p = ring.zero();
  while (p.is_zero()) {
    for (int i = 0; i < 3; ++i) {
      Monomial m;
      for (int k = 0; k < degree; ++k) ++m[static_cast<std::size_t>(gen.integer(0, static_cast<long>(ring.size()) - 1))];
      p += ring.term(m, Rational(gen.integer(-3, 3)));
    }
  }
  return p;
}

}  // namespace

TEST_CASE("koszul_map small cases") {
  const auto a1 = L(kXY, "x");
  const PolyMatrix m1 = koszul_map(a1, 1);
  CHECK(m1.rows() == 1);
  CHECK(m1.cols() == 1);
  CHECK(m1(0, 0) == a1[0]);

  const auto a = L(kXY, "x, y");
  const PolyMatrix psi2 = koszul_map(a, 2);
  REQUIRE(psi2.rows() == 1);
  REQUIRE(psi2.cols() == 2);
  CHECK(psi2(0, 0) == -a[1]);
  CHECK(psi2(0, 1) == a[0]);
  CHECK(koszul_map(a, 2, Convention::Left) == psi2.transpose());

  const auto b = L(kXYZ, "x, y, z");
  const PolyMatrix psi3 = koszul_map(b, 2);
  const PolyRing& R = kXYZ;
  PolyMatrix expect(R, 3, 3);
  expect(0, 0) = -b[1];
  expect(0, 1) = b[0];
  expect(1, 0) = -b[2];
  expect(1, 2) = b[0];
  expect(2, 1) = -b[2];
  expect(2, 2) = b[1];
  CHECK(psi3 == expect);

  CHECK_THROWS_AS(koszul_map(b, 0), UsageError);
  CHECK_THROWS_AS(koszul_map(b, 4), UsageError);
}

TEST_CASE("d squared is zero for random entries") {
  testing::Gen gen(11);
  const PolyRing R = PolyRing::numbered(3);
  for (std::size_t g = 1; g <= 5; ++g) {
    std::vector<Poly> a;
    for (std::size_t i = 0; i < g; ++i) a.push_back(gen.poly(R, 2, 3));
    for (auto conv : {Convention::Right, Convention::Left}) {
      const auto k = koszul_complex(a, conv);
      CHECK(k.maps.size() == g);
      CHECK(composes_to_zero(k));
    }
  }
}

TEST_CASE("inductive psi matches the exterior construction") {
  const auto two = build_psi_inductive(L(kXY, "x, y"));
  CHECK(two.psi == koszul_map(L(kXY, "x, y"), 2));

  const auto three = build_psi_inductive(L(kXYZ, "x, y, z"));
  CHECK(three.matches);
  CHECK(three.psi.rows() == 3);

  testing::Gen gen(5);
  const PolyRing R = PolyRing::numbered(4);
  for (std::size_t r = 2; r <= 6; ++r) {
    std::vector<Poly> a;
    for (std::size_t i = 0; i < r; ++i) a.push_back(gen.poly(R, 2, 2));
    const auto ind = build_psi_inductive(a);
    REQUIRE(ind.matches);
    const PolyMatrix ext = koszul_map(a, 2);
    CHECK(ind.psi.rows() == r * (r - 1) / 2);
    for (std::size_t i = 0; i < ind.psi.rows(); ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const Poly& e = ext(ind.row_permutation[i], j);
        CHECK(ind.psi(i, j) == (ind.row_signs[i] > 0 ? e : -e));
      }
    if (r == 4) {
      CHECK(ind.psi.cols() == 4);
      CHECK((ind.psi * koszul_map(a, 1)).is_zero());
    }
  }
  CHECK_THROWS_AS(build_psi_inductive(L(kXY, "x")), UsageError);
}

TEST_CASE("psi times w vanishes") {
  const auto a = L(kXY, "x, y");
  CHECK(psi_w_check(a, L(kXY, "x^2 + 3, y - 1")).zero);
  const auto c = psi_w_check(L(kXYZ, "x, y, z"), L(kXYZ, "1"));
  CHECK(c.zero);
  CHECK(c.product.rows() == 3);

  testing::Gen gen(17);
  const PolyRing R = PolyRing::numbered(3);
  std::vector<Poly> a5, e;
  for (int i = 0; i < 5; ++i) a5.push_back(gen.poly(R, 2, 3));
  for (int i = 0; i < 2; ++i) e.push_back(gen.poly(R, 2, 3));
  CHECK(psi_w_check(a5, e).zero);
}

TEST_CASE("regular sequences") {
  CHECK(is_regular_sequence(L(kXY, "x, y"), kXY).regular);

  const auto xx = is_regular_sequence(L(kXY, "x, x"), kXY);
  CHECK_FALSE(xx.regular);
  CHECK(xx.failing_index == 2);
  REQUIRE(xx.witness);
  CHECK(*xx.witness == kXY.one());

  const auto c = is_regular_sequence(L(kXYZ, "x*y, x*z"), kXYZ);
  CHECK_FALSE(c.regular);
  CHECK(c.failing_index == 2);
  REQUIRE(c.witness);
  CHECK(ideal_member(*c.witness * P(kXYZ, "x*z"), Ideal(kXYZ, L(kXYZ, "x*y"))));
  CHECK_FALSE(ideal_member(*c.witness, Ideal(kXYZ, L(kXYZ, "x*y"))));

  const auto improper = is_regular_sequence(L(kXY, "x, 1 + x"), kXY);
  CHECK_FALSE(improper.regular);
  CHECK_FALSE(improper.proper);
}

TEST_CASE("symbolic square membership") {
  const PolyRing X({"x"});
  const Ideal px(X, L(X, "x"));
  CHECK(symbolic_power2_member(P(X, "x^2"), px));
  CHECK_FALSE(symbolic_power2_member(P(X, "x"), px));
  const Ideal m(kXY, L(kXY, "x, y"));
  CHECK(symbolic_power2_member(P(kXY, "x*y"), m));
  CHECK_FALSE(symbolic_power2_member(P(kXY, "x + y^2"), m));
  // (x) in K[x,y]: y is a unit locally, so x*y is not in P^(2).
  const Ideal p(kXY, L(kXY, "x"));
  CHECK_FALSE(symbolic_power2_member(P(kXY, "x*y"), p));
  CHECK(symbolic_power2_member(P(kXY, "x^2*y"), p));
}

TEST_CASE("prime avoidance") {
  const PolyRing X({"x"});
  const auto r1 = prime_avoidance_sequence(Ideal(X, L(X, "x")), 1, 1);
  REQUIRE(r1.sequence.size() == 1);
  CHECK(r1.sequence[0].total_degree() == 1);

  for (const char* gens : {"x, y", "x, y, z"}) {
    const PolyRing& R = std::string(gens).size() > 4 ? kXYZ : kXY;
    const Ideal p(R, L(R, gens));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto res = prime_avoidance_sequence(p, 2, seed);
      REQUIRE(res.sequence.size() == 2);
      CHECK(is_regular_sequence(res.sequence, R).regular);
      for (const auto& x : res.sequence) CHECK(ideal_member(x, p));
      // Independent check: the linear parts are independent mod P².
      const auto st = standard_monomials(ideal_sum(ideal_power(p, 2), Ideal(R, res.sequence)), TermOrder::grevlex(R.size()));
      CHECK(st.size() == 1 + R.size() - 2);
      CHECK(res.trial_indices.size() == 2);
      CHECK(res.trials_used <= kPrimeAvoidanceTrials);
    }
  }
  CHECK_THROWS_AS(prime_avoidance_sequence(Ideal(kXY, L(kXY, "x, y")), 3, 1), ComputationError);
}

TEST_CASE("ext1 into graded models") {
  const PolyRing X({"x"});
  const auto free_r = ext1_koszul(L(X, "x"), GradedModuleModel::polynomial_ring(1), Window::cube(1, -6, 6));
  CHECK(free_r.at(-1) == 1);
  CHECK_FALSE(free_r.all_zero());

  const auto hull = ext1_koszul(L(X, "x"), GradedModuleModel::top_local_cohomology(1), Window::cube(1, -8, 0));
  CHECK(hull.all_zero());
  CHECK_FALSE(hull.degrees.empty());

  const auto h2 = ext1_koszul(L(kXY, "x, y"), GradedModuleModel::top_local_cohomology(2), Window::cube(2, -8, 0));
  CHECK(h2.all_zero());
  CHECK(h2.degrees.size() >= 3);

  const auto quad = ext1_koszul(L(kXY, "x^2 + y^2, x*y"), GradedModuleModel::top_local_cohomology(2), Window::cube(2, -9, 0));
  CHECK(quad.all_zero());

  CHECK_THROWS_AS(ext1_koszul(L(kXY, "x, y"), GradedModuleModel("-+"), Window::cube(2, -4, 4)), WindowTooSmall);
  CHECK_THROWS_AS(ext1_koszul(L(kXY, "x + 1"), GradedModuleModel::polynomial_ring(2), Window::cube(2, 0, 4)), UsageError);
}

TEST_CASE("koszul H1 agrees with the colon test") {
  const Window w = Window::cube(3, 0, 6);
  const auto model = GradedModuleModel::polynomial_ring(3);
  CHECK(koszul_h1(L(kXYZ, "x, y"), model, w).all_zero());
  CHECK_FALSE(koszul_h1(L(kXYZ, "x*y, x*z"), model, w).all_zero());
  CHECK_FALSE(koszul_h1(L(kXYZ, "x, x"), model, w).all_zero());

  testing::Gen gen(23);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t g = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Poly> a;
    for (std::size_t i = 0; i < g; ++i) a.push_back(random_form(gen, kXYZ, static_cast<int>(gen.integer(1, 2))));
    const bool regular = is_regular_sequence(a, kXYZ).regular;
    CHECK(koszul_h1(a, model, w).all_zero() == regular);
  }
}
