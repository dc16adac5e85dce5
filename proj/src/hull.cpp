#include "weylkit/hull.hpp"

#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

constexpr const char* kModule = "injective_structure";

// Products of e generators of a reduced basis of `m`.
std::vector<Poly> power_generators(const Ideal& m, unsigned e) {
  const auto gens = basis_of(m).elements;
  std::vector<Poly> out;
  std::vector<std::size_t> pick(e, 0);
  if (e == 0) return {m.ring().one()};
  while (true) {
    Poly p = m.ring().one();
    for (auto i : pick) p *= gens[i];
    out.push_back(p);
    std::size_t pos = e;
    while (pos > 0 && pick[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < e; ++i) pick[i] = pick[pos - 1];
  }
  return out;
}

Ideal with(const Ideal& base, const std::vector<Poly>& extra) {
  std::vector<Poly> g = base.generators();
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(base.ring(), std::move(g));
}

}  // namespace

CurveExtension::CurveExtension(Poly h, std::vector<Poly> maximal)
    : ring_(h.ring()), h_(std::move(h)), m_(std::move(maximal)) {
  validate();
}

CurveExtension CurveExtension::from_map(const Poly& f, const std::vector<Poly>& maximal) {
  const PolyRing& r = f.ring();
  if (r.size() != 2) throw UsageError(kModule, "extensions live in a ring with two variables (base, extension)");
  if (f.degree_in(0) != 0 || f.degree_in(1) == 0)
    throw UsageError(kModule, "the structural map must be a nonconstant polynomial in " + r.name(1));
  const Rational lc = f.coefficient(Monomial::unit(1, f.degree_in(1)));
  return CurveExtension((f - r.var(0)) * r.constant(Rational(1) / lc), maximal);
}

CurveExtension CurveExtension::from_relation(const Poly& h, const std::vector<Poly>& maximal) {
  if (h.ring().size() != 2) throw UsageError(kModule, "extensions live in a ring with two variables (base, extension)");
  const unsigned d = h.degree_in(1);
  if (d == 0) throw UsageError(kModule, "relation must involve " + h.ring().name(1));
  Poly lead = h.ring().zero();
  for (const auto& [m, c] : h.terms())
    if (m[1] == d) lead += h.ring().term(Monomial::unit(0, m[0]), c);
  if (!lead.is_constant()) throw UsageError(kModule, "relation is not monic in " + h.ring().name(1));
  const Rational lc = lead.coefficient(Monomial());
  return CurveExtension(h * h.ring().constant(Rational(1) / lc), maximal);
}

Ideal CurveExtension::maximal_ideal() const { return with(presentation(), m_); }

void CurveExtension::validate() const {
  for (const auto& g : m_)
    if (!(g.ring() == ring_)) throw VariableMismatch("maximal ideal over a different ring");
  if (m_.empty()) throw UsageError(kModule, "empty maximal ideal");
  const Ideal m = maximal_ideal();
  if (!is_proper(m)) throw UsageError(kModule, "the given ideal is the unit ideal of S");
  if (!is_zero_dimensional(m, TermOrder::grevlex(2))) throw UsageError(kModule, "the given ideal is not maximal in S");
  const ArtinAlgebra field(m);
  if (field.radical().cols() != 0 || decompose_local(field).factors.size() != 1)
    throw UsageError(kModule, "the given ideal is not maximal in S");
}

std::string CurveExtension::to_string() const {
  std::string s = "K[" + ring_.name(0) + "," + ring_.name(1) + "]/(" + h_.to_string() + "), m = (";
  for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? ", " : "") + m_[i].to_string();
  return s + ")";
}

UPoly contraction(const CurveExtension& x) {
  const ArtinAlgebra field(x.maximal_ideal());
  return minimal_polynomial(field.generator(0));
}

MultiplicityReport hull_multiplicity(const CurveExtension& x) {
  MultiplicityReport r;
  r.n = contraction(x);
  r.residue_dim = static_cast<std::size_t>(r.n.degree());
  const Poly n = to_poly(r.n, x.ring(), 0);
  const ArtinAlgebra a(with(x.presentation(), {n}));
  r.algebra_dim = a.dim();
  const LocalDecomposition d = decompose_local(a);
  if (!decomposition_is_sound(a, d)) throw ComputationError(kModule, "unsound local decomposition of S/nS");
  for (const auto& f : d.factors) r.factor_dims.push_back(f.dim);
  std::vector<QVector> gens;
  for (const auto& g : x.maximal_generators()) gens.push_back(a.coords(g));
  const int idx = matching_factor(a, d, gens);
  if (idx < 0) throw ComputationError(kModule, "no local factor of S/nS matches the maximal ideal");
  r.matched_factor = static_cast<std::size_t>(idx);
  const LocalFactor& f = d.factors[r.matched_factor];
  if (f.dim % r.residue_dim != 0) throw ComputationError(kModule, "local factor is not an R/n-space");
  r.c = f.dim / r.residue_dim;
  r.q1_generators = {x.relation(), n};
  const Poly other = a.lift(QVector(a.one() - f.idempotent));
  if (!other.is_zero()) r.q1_generators.push_back(other);
  return r;
}

QMatrix TruncatedHull::action(const Poly& p) const { return quotient.mult_matrix(p).transpose(); }

TruncatedHull truncated_hull(const CurveExtension& x, unsigned level) {
  if (level == 0) throw UsageError(kModule, "truncation level must be positive");
  const ArtinAlgebra t(with(x.presentation(), power_generators(x.maximal_ideal(), level)));
  return TruncatedHull{level, t, t.generator(0).transpose(), t.generator(1).transpose()};
}

unsigned exponent_bound(const CurveExtension& x) {
  const Poly n = to_poly(contraction(x), x.ring(), 0);
  return static_cast<unsigned>(standard_monomials(with(x.presentation(), {n}), TermOrder::grevlex(2)).size());
}

std::vector<long> socle_growth_oracle(const CurveExtension& x, unsigned k_max, unsigned level) {
  if (level < 2) throw UsageError(kModule, "truncation level must be at least 2");
  const TruncatedHull e = truncated_hull(x, level);
  const ArtinAlgebra& t = e.quotient;
  const UPoly n = contraction(x);
  QMatrix tail(static_cast<Eigen::Index>(t.dim()), 0);
  for (const auto& g : power_generators(x.maximal_ideal(), level - 1))
    tail = hstack<Rational>(tail, t.mult_matrix(g));
  std::vector<long> dims;
  for (unsigned k = 1; k <= k_max; ++k) {
    const QMatrix nk = t.mult_matrix(to_poly(n.pow(k), x.ring(), 0));
    if (!spans<Rational>(nk, tail))
      throw ComputationError(kModule, "truncation level " + std::to_string(level) + " is too small for k = " +
                                          std::to_string(k));
    dims.push_back(static_cast<long>(t.dim()) - static_cast<long>(rank<Rational>(nk)));
  }
  return dims;
}

std::vector<UPoly> ass_truncated_hull(const TruncatedHull& e, const UPoly& n) {
  const QMatrix top = evaluate(n.pow(e.level), e.x_action);
  if (!is_zero<Rational>(top)) throw ComputationError(kModule, "hull element not killed by a power of n");
  return ass_torsion(e.x_action);
}

bool socle_matches_q1(const TruncatedHull& e, const MultiplicityReport& r) {
  const QMatrix soc_n = kernel<Rational>(evaluate(r.n, e.x_action));
  QMatrix stacked(0, static_cast<Eigen::Index>(e.dim()));
  for (const auto& g : r.q1_generators) stacked = vstack<Rational>(stacked, e.action(g));
  const QMatrix soc_q = kernel<Rational>(stacked);
  return same_span<Rational>(soc_n, soc_q);
}

std::size_t quotient_dim(const CurveExtension& x, unsigned k) {
  return standard_monomials(with(x.presentation(), power_generators(x.maximal_ideal(), k)), TermOrder::grevlex(2)).size();
}

}  // namespace weylkit
