#include <doctest.h>

#include <algorithm>
#include <string>

#include "weylkit/expr.hpp"
#include "weylkit/localcoh.hpp"

using namespace weylkit;

namespace {

const PolyRing kXY({"x", "y"});
const PolyRing kXYZ({"x", "y", "z"});

std::vector<Monomial> M(const PolyRing& r, const char* s) { return monomial_generators(parse_poly_list(s, r)); }
Monomial M1(const PolyRing& r, const char* s) { return M(r, s).front(); }

}  // namespace

TEST_CASE("cech pieces") {
  const auto m = M(kXY, "x, y");
  CHECK(cech_cohomology_piece(m, 2, {-1, -1}) == 1);
  for (const auto& d : Window::cube(2, -4, 4).points()) CHECK(cech_cohomology_piece(m, 1, d) == 0);
  CHECK(cech_cohomology_piece(M(kXY, "x"), 1, {-1, 3}) == 1);
  CHECK(cech_cohomology_piece(M(kXY, "x"), 1, {-1, -1}) == 0);
  CHECK(cech_cohomology_piece(M(kXY, "x"), 1, {2, 3}) == 0);
  CHECK(cech_cohomology_piece(m, 5, {-1, -1}) == 0);
  CHECK_THROWS_AS(monomial_generators(parse_poly_list("x + y", kXY)), UsageError);
}

TEST_CASE("maximal ideal baseline") {
  for (std::size_t n : {2u, 3u}) {
    const PolyRing r = PolyRing::numbered(n);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::unit(i));
    for (const auto& d : Window::cube(n, -4, 4).points()) {
      const auto dims = cech_cohomology_dims(gens, d);
      const bool all_neg = std::all_of(d.begin(), d.end(), [](int x) { return x <= -1; });
      for (std::size_t i = 0; i < n; ++i) CHECK(dims[i] == 0);
      CHECK(dims[n] == (all_neg ? 1 : 0));
    }
  }
}

TEST_CASE("H0 vanishes and the complex squares to zero") {
  for (const char* gens : {"x", "x*y", "x^2, y*z", "x, y, z", "x*y, y*z, x*z"}) {
    const auto g = M(kXYZ, gens);
    for (const auto& d : Window::cube(3, -2, 2).points()) {
      const auto p = cech_piece(g, d);
      CHECK(p.complex.squares_to_zero());
      CHECK(p.complex.cohomology_dim(0) == 0);
    }
  }
}

TEST_CASE("monomial intersections") {
  const auto meet = intersect_monomial(M(kXY, "x"), M(kXY, "x*y"));
  REQUIRE(meet.size() == 1);
  CHECK(meet[0] == M1(kXY, "x*y"));
  CHECK(intersect_monomial(M(kXY, "x^2, y^2"), M(kXY, "x*y")).size() == 2);
  CHECK(minimalize(M(kXY, "x, x*y, y^2, x^3")).size() == 2);
}

TEST_CASE("Mayer-Vietoris dimension sums") {
  const auto r = mv_dimension_check(M(kXY, "x"), M(kXY, "y"), Window::cube(2, -3, 3));
  CHECK(r.all_vanish);
  for (const auto& d : r.degrees) {
    if (d.degree == ZDeg{-1, -1}) {
      CHECK(d.meet[1] == 1);
      CHECK(d.sum[2] == 1);
      CHECK(d.i[1] == 0);
      CHECK(d.j[1] == 0);
    }
  }
  const auto same = mv_dimension_check(M(kXY, "x*y"), M(kXY, "x*y"), Window::cube(2, -3, 3));
  CHECK(same.all_vanish);
  const auto nested = mv_dimension_check(M(kXY, "x"), M(kXY, "x*y"), Window::cube(2, -3, 3));
  CHECK(nested.all_vanish);
  REQUIRE(nested.sum_gens.size() == 1);
  CHECK(nested.sum_gens[0] == M1(kXY, "x"));
  CHECK(mv_dimension_check(M(kXYZ, "x^2, y*z"), M(kXYZ, "x*y, z"), Window::cube(3, -2, 2)).all_vanish);
}

TEST_CASE("connecting map for two principal ideals") {
  const auto r = mv_connecting_biprincipal(M1(kXY, "x"), M1(kXY, "y"), Window::cube(2, -3, 3));
  CHECK(r.exact);
  CHECK(r.oracle_match);
  CHECK(r.d_linear);
  CHECK(r.squares_checked > 0);
  for (const auto& d : r.degrees) {
    if (d.degree == ZDeg{-1, -1}) {
      CHECK(d.h_meet[1] == 1);
      CHECK(d.h_sum[2] == 1);
      CHECK(d.delta_rank[1] == 1);
    }
  }

  const auto same = mv_connecting_biprincipal(M1(kXY, "x*y"), M1(kXY, "x*y"), Window::cube(2, -3, 3));
  CHECK(same.exact);
  for (const auto& d : same.degrees) {
    CHECK(d.delta_rank[0] == 0);
    CHECK(d.delta_rank[1] == 0);
  }

  for (const char* f : {"x^2", "x"}) {
    const char* g = std::string(f) == "x" ? "x*y" : "y";
    const auto c = mv_connecting_biprincipal(M1(kXY, f), M1(kXY, g), Window::cube(2, -4, 4));
    CHECK(c.exact);
    CHECK(c.oracle_match);
    CHECK(c.d_linear);
  }
  CHECK_THROWS_AS(mv_connecting_biprincipal(M1(kXY, "x"), M1(kXY, "y"), Window::cube(2, 0, 0)), WindowTooSmall);
}

TEST_CASE("torsion of cyclic modules") {
  const auto g = gamma_cyclic(Ideal(kXY, parse_poly_list("x^2*y", kXY)), Ideal(kXY, parse_poly_list("x", kXY)));
  CHECK_FALSE(g.zero);
  CHECK(same_ideal(g.saturation, Ideal(kXY, parse_poly_list("y", kXY))));
  const auto z = gamma_cyclic(Ideal(kXY), Ideal(kXY, parse_poly_list("x", kXY)));
  CHECK(z.zero);
}

TEST_CASE("torsion of localizations") {
  const Window w = Window::cube(2, -4, 4);
  const LocalizationModel rx{M1(kXY, "x"), std::nullopt};
  // R_x is torsion-free: no nonzero ideal has torsion in it.
  CHECK(gamma_localization(rx, M(kXY, "y"), w).empty());
  CHECK(gamma_localization(rx, M(kXY, "x"), w).empty());
  CHECK(gamma_localization(rx, M(kXY, "1"), w).empty());
  // I = 0 gives all of M.
  std::size_t pieces = 0;
  for (const auto& d : w.points()) pieces += rx.piece(d) ? 1 : 0;
  CHECK(gamma_localization(rx, {}, w).size() == pieces);
  CHECK(gamma_dstable_check(rx, {}, w).stable);

  // R_x / R = H^1_(x)(R) is entirely (x)-torsion and has no (y)-torsion.
  const LocalizationModel h1{M1(kXY, "x"), Monomial()};
  const auto t = gamma_localization(h1, M(kXY, "x"), w);
  for (const auto& d : t) CHECK(d[0] < 0);
  CHECK(t.size() == 4 * 5);
  CHECK(gamma_localization(h1, M(kXY, "y"), w).empty());
  const auto rep = gamma_dstable_check(h1, M(kXY, "x"), w);
  CHECK(rep.stable);
  CHECK(rep.checked > 0);

  // R_xy / R_x: torsion for (y) is everything, for (x) nothing.
  const LocalizationModel q{M1(kXY, "x*y"), M1(kXY, "x")};
  CHECK_FALSE(gamma_localization(q, M(kXY, "y"), w).empty());
  CHECK(gamma_localization(q, M(kXY, "x"), w).empty());
  CHECK(gamma_dstable_check(q, M(kXY, "y"), w).stable);
  CHECK_THROWS_AS(gamma_dstable_check(q, M(kXY, "y"), Window::cube(2, 1, 1)), WindowTooSmall);
}
