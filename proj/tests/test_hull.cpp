#include <doctest.h>

#include "weylkit/expr.hpp"
#include "weylkit/hull.hpp"

using namespace weylkit;

namespace {

const PolyRing kXY({"x", "y"});

Poly P(const char* s) { return parse_poly(s, kXY); }

CurveExtension Map(const char* f, const char* m) { return CurveExtension::from_map(P(f), parse_poly_list(m, kXY)); }

}  // namespace

TEST_CASE("contraction and multiplicity examples") {
  const auto sq = Map("y^2", "y");
  CHECK(contraction(sq) == UPoly::t());
  const auto r = hull_multiplicity(sq);
  CHECK(r.c == 2);
  CHECK(r.algebra_dim == 2);
  CHECK(r.factor_dims.size() == 1);

  const auto split = hull_multiplicity(Map("y^2 - y", "y"));
  CHECK(split.c == 1);
  CHECK(split.factor_dims.size() == 2);

  const auto field = Map("y^2", "y^2 + 1");
  CHECK(contraction(field) == UPoly::t() + UPoly(Rational(1)));
  const auto rf = hull_multiplicity(field);
  CHECK(rf.residue_dim == 1);
  CHECK(rf.c == 2);

  CHECK(hull_multiplicity(Map("y^3", "y")).c == 3);
  CHECK(hull_multiplicity(Map("y^3", "y - 1")).c == 1);

  // Same extension given by a relation monic in y.
  const auto rel = CurveExtension::from_relation(P("y^2 - x"), {P("y")});
  CHECK(hull_multiplicity(rel).c == 2);
}

TEST_CASE("invalid extensions") {
  CHECK_THROWS_AS(Map("x", "y"), UsageError);
  CHECK_THROWS_AS(Map("y^2", "y^2"), UsageError);  // not maximal
  CHECK_THROWS_AS(Map("y^2", "y, y - 1"), UsageError);
  CHECK_THROWS_AS(CurveExtension::from_relation(P("x*y - 1"), {P("y - 1")}), UsageError);
}

TEST_CASE("truncated hull dimensions match the dual count") {
  const auto sq = Map("y^2", "y");
  for (unsigned b = 1; b <= 5; ++b) {
    const auto e = truncated_hull(sq, b);
    CHECK(e.dim() == b);
    CHECK(quotient_dim(sq, b) == b);
  }
  const auto field = Map("y^2", "y^2 + 1");
  CHECK(truncated_hull(field, 3).dim() == 6);
  CHECK(quotient_dim(field, 3) == 6);
}

TEST_CASE("socle growth oracle") {
  const auto sq = Map("y^2", "y");
  CHECK(socle_growth_oracle(sq, 3, oracle_level(sq, 3)) == std::vector<long>{2, 4, 6});

  const auto id = Map("y", "y");
  CHECK(socle_growth_oracle(id, 4, oracle_level(id, 4)) == std::vector<long>{1, 2, 3, 4});

  const auto cube = Map("y^3", "y");
  CHECK(socle_growth_oracle(cube, 2, oracle_level(cube, 2)) == std::vector<long>{3, 6});
  // (0 : m^12) is too small to see (0 : n^4) when x = y^3.
  CHECK_THROWS_AS(socle_growth_oracle(cube, 6, 12), ComputationError);

  const auto field = Map("y^2", "y^2 + 1");
  CHECK(socle_growth_oracle(field, 3, oracle_level(field, 3)) == std::vector<long>{2, 4, 6});
}

TEST_CASE("associated primes and socle of the truncated hull") {
  for (const auto& [f, m] : std::vector<std::pair<const char*, const char*>>{
           {"y^2", "y"}, {"y^2 - y", "y"}, {"y^3", "y - 1"}, {"y^2", "y^2 + 1"}}) {
    const auto x = Map(f, m);
    const auto r = hull_multiplicity(x);
    const auto e = truncated_hull(x, oracle_level(x, 2));
    const auto ass = ass_truncated_hull(e, r.n);
    REQUIRE(ass.size() == 1);
    CHECK(ass[0] == r.n);
    CHECK(socle_matches_q1(e, r));
  }
}

TEST_CASE("associated primes of S/m and S") {
  const auto x = Map("y^2", "y^2 + 1");
  const ArtinAlgebra field(x.maximal_ideal());
  CHECK(ass_torsion(field.generator(0)) == std::vector<UPoly>{contraction(x)});
  // S = K[y] is free of rank 2 over K[y^2].
  std::vector<std::vector<UPoly>> none(x.rank());
  CHECK(ass_presented(none, x.rank()) == std::vector<UPoly>{UPoly()});
}
