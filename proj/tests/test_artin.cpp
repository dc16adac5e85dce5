#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "weylkit/artin.hpp"
#include "weylkit/expr.hpp"

using namespace weylkit;

namespace {

const PolyRing kY({"y"});
const PolyRing kXY({"x", "y"});

ArtinAlgebra Alg(const PolyRing& r, const char* gens) { return ArtinAlgebra(Ideal(r, parse_poly_list(gens, r))); }

std::vector<std::size_t> dims(const LocalDecomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& f : d.factors) out.push_back(f.dim);
  std::sort(out.begin(), out.end());
  return out;
}

// A as a module over itself.
FiniteModule regular_module(const ArtinAlgebra& a) {
  FiniteModule m;
  for (std::size_t v = 0; v < a.ring().size(); ++v) m.actions.push_back(a.generator(v));
  return m;
}

FiniteModule submodule(const FiniteModule& m, const QMatrix& basis) {
  FiniteModule s;
  for (const auto& act : m.actions) s.actions.push_back(*restrict_to<Rational>(act, basis));
  return s;
}

}  // namespace

TEST_CASE("presentations") {
  const auto a = Alg(kY, "y^2");
  CHECK(a.dim() == 2);
  const QVector y = a.coords(parse_poly("y", kY));
  CHECK(is_zero<Rational>(QMatrix(a.mul(y, y))));
  CHECK(Alg(kXY, "x, y^2").dim() == 2);
  CHECK(Alg(kY, "y^3 - y^2").dim() == 3);
  CHECK_THROWS_AS(Alg(kXY, "x*y"), NotZeroDimensional);
  CHECK(a.lift(a.coords(parse_poly("3*y + 2 + y^5", kY))) == parse_poly("3*y + 2", kY));
}

TEST_CASE("local decomposition examples") {
  const auto a = Alg(kY, "y^2 - 1");
  const auto d = decompose_local(a);
  CHECK(decomposition_is_sound(a, d));
  CHECK(dims(d) == std::vector<std::size_t>{1, 1});

  const auto b = Alg(kY, "y^2");
  const auto db = decompose_local(b);
  CHECK(db.factors.size() == 1);
  CHECK(db.factors[0].dim == 2);
  CHECK(db.radical.cols() == 1);

  const auto c = Alg(kY, "y^3 - y^2");
  const auto dc = decompose_local(c);
  CHECK(decomposition_is_sound(c, dc));
  CHECK(dims(dc) == std::vector<std::size_t>{1, 2});
  // The factor at y = 0 is the one containing y.
  const int i = matching_factor(c, dc, {c.coords(parse_poly("y", kY))});
  REQUIRE(i >= 0);
  CHECK(dc.factors[static_cast<std::size_t>(i)].dim == 2);

  // Each generator alone has an irreducible minimal polynomial here, yet
  // Q(i) ⊗ Q(i) splits in two.
  const auto q = Alg(kXY, "x^2 + 1, y^2 + 1");
  const auto dq = decompose_local(q);
  CHECK(decomposition_is_sound(q, dq));
  CHECK(dims(dq) == std::vector<std::size_t>{2, 2});
  for (const auto& f : dq.factors) CHECK(f.residue_dim == 2);
}

TEST_CASE("random zero-dimensional ideals decompose soundly") {
  testing::Gen gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> gens;
    const Poly x = kXY.var(0), y = kXY.var(1);
    gens.push_back(x.pow(static_cast<unsigned>(gen.integer(1, 3))) + gen.poly(kXY, 2, 2));
    gens.push_back(y.pow(static_cast<unsigned>(gen.integer(1, 3))) + gen.poly(kXY, 1, 2));
    const Ideal I(kXY, gens);
    if (!is_proper(I)) continue;
    const ArtinAlgebra a(I);
    const auto d = decompose_local(a);
    CHECK(decomposition_is_sound(a, d));
    // Independent count: the reduced algebra has dimension Σ residue dims.
    std::size_t residue = 0;
    for (const auto& f : d.factors) residue += f.residue_dim;
    CHECK(residue == a.dim() - static_cast<std::size_t>(a.radical().cols()));
  }
}

TEST_CASE("injective hulls of finite modules") {
  const auto a = Alg(kY, "y^2");
  const auto d = decompose_local(a);
  const FiniteModule reg = regular_module(a);

  // The socle (y) is simple; its hull is the dual of A.
  QMatrix ybasis = a.coords(parse_poly("y", kY));
  const auto simple = submodule(reg, ybasis);
  const auto h = essential_and_hull_findim(a, d, simple);
  CHECK(h.hull.dim() == 2);
  CHECK(h.linear);
  CHECK(h.injective_map);
  CHECK(h.essential);
  CHECK(h.summands_injective);

  const auto whole = essential_and_hull_findim(a, d, reg);
  CHECK(whole.hull.dim() == 2);
  CHECK(whole.essential);

  const auto b = Alg(kY, "y^2 - 1");
  const auto db = decompose_local(b);
  const QMatrix at_one = b.coords(parse_poly("y + 1", kY));
  const auto s = submodule(regular_module(b), at_one);
  const auto hb = essential_and_hull_findim(b, db, s);
  CHECK(hb.hull.dim() == 1);
  CHECK(hb.summands.size() == 1);
  CHECK(hb.essential);

  // K ⊕ K as a module over K[y]/(y^2): two copies of the dual.
  FiniteModule two{{QMatrix::Zero(2, 2)}};
  const auto h2 = essential_and_hull_findim(a, d, two);
  CHECK(h2.hull.dim() == 4);
  REQUIRE(h2.summands.size() == 1);
  CHECK(h2.summands[0].copies == 2);
  CHECK(h2.essential);
  CHECK(h2.injective_map);
}

TEST_CASE("associated primes over K[t]") {
  // t acting on K[t]/(t^2 (t-1)).
  const auto a = Alg(kY, "y^3 - y^2");
  const auto ass = ass_torsion(a.generator(0));
  REQUIRE(ass.size() == 2);
  CHECK(std::count(ass.begin(), ass.end(), UPoly::t()) == 1);
  CHECK(std::count(ass.begin(), ass.end(), UPoly::t() - UPoly(Rational(1))) == 1);

  CHECK(ass_presented({{}, {}}, 2) == std::vector<UPoly>{UPoly()});
  const UPoly t = UPoly::t();
  // K[t]^2 / (t^2 e_1): free part and (t).
  const auto mixed = ass_presented({{t * t}, {UPoly()}}, 2);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].is_zero());
  CHECK(mixed[1] == t);
  CHECK(ass_presented({{t * t + UPoly(Rational(1))}}, 1) == std::vector<UPoly>{t * t + UPoly(Rational(1))});
}
