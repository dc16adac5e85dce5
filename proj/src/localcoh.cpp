#include "weylkit/localcoh.hpp"

#include <algorithm>
#include <tuple>

#include "weylkit/errors.hpp"
#include "weylkit/koszul.hpp"

namespace weylkit {

namespace {

constexpr const char* kModule = "localcoh";

Eigen::Index dim_at(const FiniteComplex& c, std::size_t t) { return t < c.length() ? c.dims[t] : 0; }

QMatrix out_map(const FiniteComplex& c, std::size_t t) {
  if (t < c.d.size()) return c.d[t];
  return QMatrix(0, dim_at(c, t));
}

QMatrix in_map(const FiniteComplex& c, std::size_t t) {
  if (t > 0 && t - 1 < c.d.size()) return c.d[t - 1];
  return QMatrix(dim_at(c, t), 0);
}

}  // namespace

bool FiniteComplex::squares_to_zero() const {
  for (std::size_t t = 1; t < d.size(); ++t)
    if (!is_zero<Rational>(QMatrix(d[t] * d[t - 1]))) return false;
  return true;
}

long FiniteComplex::cohomology_dim(std::size_t t) const {
  if (t >= length()) return 0;
  return static_cast<long>(dims[t] - rank<Rational>(out_map(*this, t)) - rank<Rational>(in_map(*this, t)));
}

QVector CohomologyBasis::coordinates(const QVector& cycle) const {
  const auto x = solve<Rational>(hstack<Rational>(boundaries, reps), cycle);
  if (!x) throw ComputationError(kModule, "vector is not a cycle");
  return x->tail(reps.cols());
}

CohomologyBasis cohomology_basis(const FiniteComplex& c, std::size_t t) {
  CohomologyBasis b;
  b.boundaries = column_basis<Rational>(in_map(c, t));
  const QMatrix z = kernel<Rational>(out_map(c, t));
  b.reps = QMatrix(dim_at(c, t), 0);
  Eigen::Index r = b.boundaries.cols();
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    QMatrix trial = hstack<Rational>(b.reps, QMatrix(z.col(j)));
    if (rank<Rational>(hstack<Rational>(b.boundaries, trial)) > r) {
      b.reps = trial;
      ++r;
    }
  }
  return b;
}

std::vector<Monomial> monomial_generators(const std::vector<Poly>& gens) {
  std::vector<Monomial> out;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    if (p.num_terms() != 1) throw UsageError(kModule, "generator " + p.to_string() + " is not a monomial");
    out.push_back(p.terms().begin()->first);
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && gens[j].divides(gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Monomial> intersect_monomial(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> l;
  for (const auto& x : a)
    for (const auto& y : b) l.push_back(lcm(x, y));
  return minimalize(std::move(l));
}

bool in_localization(const Monomial& m, const ZDeg& d) {
  for (std::size_t j = 0; j < d.size(); ++j)
    if (m[j] == 0 && d[j] < 0) return false;
  return true;
}

CechPiece cech_piece(const std::vector<Monomial>& gens, const ZDeg& d) {
  CechPiece p;
  const std::size_t r = gens.size();
  for (std::size_t t = 0; t <= r; ++t) {
    std::vector<std::vector<std::size_t>> present;
    for (auto& s : lex_subsets(r, t)) {
      Monomial prod;
      for (auto i : s) prod = prod * gens[i];
      if (in_localization(prod, d)) present.push_back(std::move(s));
    }
    p.complex.dims.push_back(static_cast<Eigen::Index>(present.size()));
    p.terms.push_back(std::move(present));
  }
  for (std::size_t t = 0; t < r; ++t) {
    const auto& from = p.terms[t];
    const auto& to = p.terms[t + 1];
    QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
    for (std::size_t row = 0; row < to.size(); ++row) {
      for (std::size_t pos = 0; pos < to[row].size(); ++pos) {
        std::vector<std::size_t> face = to[row];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
        const auto it = std::lower_bound(from.begin(), from.end(), face);
        if (it != from.end() && *it == face)
          m(static_cast<Eigen::Index>(row), it - from.begin()) = Rational(pos % 2 == 0 ? 1 : -1);
      }
    }
    p.complex.d.push_back(std::move(m));
  }
  return p;
}

std::vector<long> cech_cohomology_dims(const std::vector<Monomial>& gens, const ZDeg& d) {
  const CechPiece p = cech_piece(gens, d);
  if (!p.complex.squares_to_zero()) throw ComputationError(kModule, "Čech differentials do not compose to zero");
  std::vector<long> out;
  for (std::size_t t = 0; t < p.complex.length(); ++t) out.push_back(p.complex.cohomology_dim(t));
  return out;
}

long cech_cohomology_piece(const std::vector<Monomial>& gens, std::size_t i, const ZDeg& d) {
  const auto dims = cech_cohomology_dims(gens, d);
  return i < dims.size() ? dims[i] : 0;
}

MVReport mv_dimension_check(const std::vector<Monomial>& i, const std::vector<Monomial>& j, const Window& w) {
  MVReport r;
  std::vector<Monomial> both = i;
  both.insert(both.end(), j.begin(), j.end());
  r.sum_gens = minimalize(both);
  r.meet_gens = intersect_monomial(i, j);
  const std::vector<Monomial> ii = minimalize(i), jj = minimalize(j);
  for (const auto& d : w.points()) {
    MVDegree m;
    m.degree = d;
    m.sum = cech_cohomology_dims(r.sum_gens, d);
    m.i = cech_cohomology_dims(ii, d);
    m.j = cech_cohomology_dims(jj, d);
    m.meet = cech_cohomology_dims(r.meet_gens, d);
    const std::size_t top = std::max({m.sum.size(), m.i.size(), m.j.size(), m.meet.size()});
    for (std::size_t t = 0; t < top; ++t) {
      const auto at = [t](const std::vector<long>& v) { return t < v.size() ? v[t] : 0L; };
      const long term = at(m.sum) - at(m.i) - at(m.j) + at(m.meet);
      m.alternating += (t % 2 == 0) ? term : -term;
    }
    if (m.alternating != 0) r.all_vanish = false;
    r.degrees.push_back(std::move(m));
  }
  return r;
}

namespace {

// A direct sum of one-dimensional localization pieces; a slot is present at
// degree d iff x^d lies in its localization.
using Slots = std::vector<Monomial>;
using Entries = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

std::vector<Eigen::Index> present(const Slots& s, const ZDeg& d) {
  std::vector<Eigen::Index> idx(s.size(), -1);
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (in_localization(s[i], d)) idx[i] = k++;
  return idx;
}

Eigen::Index count(const std::vector<Eigen::Index>& idx) {
  return static_cast<Eigen::Index>(std::count_if(idx.begin(), idx.end(), [](Eigen::Index i) { return i >= 0; }));
}

QMatrix slot_map(const Slots& to, const ZDeg& dto, const Slots& from, const ZDeg& dfrom, const Entries& e) {
  const auto ti = present(to, dto), fi = present(from, dfrom);
  QMatrix m = QMatrix::Zero(count(ti), count(fi));
  for (const auto& [r, c, v] : e)
    if (ti[r] >= 0 && fi[c] >= 0) m(ti[r], fi[c]) += v;
  return m;
}

// ∂_k from degree d to d − e_k: x^d ↦ d_k x^{d−e_k}.
QMatrix partial_map(const Slots& s, const ZDeg& d, std::size_t k) {
  ZDeg to = d;
  --to[k];
  Entries e;
  for (std::size_t i = 0; i < s.size(); ++i) e.emplace_back(i, i, Rational(d[k]));
  return slot_map(s, to, s, d, e);
}

// The bi-principal data at one degree.
struct Biprincipal {
  Slots a0, a1, h0, h1, k0, k1, k2;
  Entries da0, dh0, phi0, phi1, dk0, dk1, rho0, rho1, delta0, delta1;

  Biprincipal(const Monomial& f, const Monomial& g, const Monomial& h) {
    const Monomial one;
    a0 = {one, one};
    a1 = {f, g};
    h0 = {one};
    h1 = {h};
    k0 = a0;
    k1 = {f, g, one};
    k2 = {h};
    const Rational p(1), m(-1);
    da0 = {{0, 0, p}, {1, 1, p}};
    dh0 = {{0, 0, p}};
    phi0 = {{0, 0, p}, {0, 1, m}};
    phi1 = {{0, 0, p}, {0, 1, m}};
    dk0 = {{0, 0, p}, {1, 1, p}, {2, 0, p}, {2, 1, m}};
    dk1 = {{0, 0, p}, {0, 1, m}, {0, 2, m}};
    rho0 = {{0, 0, p}, {1, 1, p}};
    rho1 = {{0, 0, p}, {1, 1, p}};
    delta0 = {{2, 0, p}};
    delta1 = {{0, 0, p}};
  }

  FiniteComplex pair(const ZDeg& d) const {
    return {{count(present(a0, d)), count(present(a1, d))}, {slot_map(a1, d, a0, d, da0)}};
  }
  FiniteComplex meet(const ZDeg& d) const {
    return {{count(present(h0, d)), count(present(h1, d))}, {slot_map(h1, d, h0, d, dh0)}};
  }
  FiniteComplex cocone(const ZDeg& d) const {
    return {{count(present(k0, d)), count(present(k1, d)), count(present(k2, d))},
            {slot_map(k1, d, k0, d, dk0), slot_map(k2, d, k1, d, dk1)}};
  }
};

QMatrix induced(const CohomologyBasis& from, const CohomologyBasis& to, const QMatrix& chain) {
  QMatrix m(to.reps.cols(), from.reps.cols());
  for (Eigen::Index j = 0; j < from.reps.cols(); ++j) m.col(j) = to.coordinates(QVector(chain * from.reps.col(j)));
  return m;
}

}  // namespace

ConnectingReport mv_connecting_biprincipal(const Monomial& f, const Monomial& g, const Window& w) {
  ConnectingReport rep;
  rep.f = f;
  rep.g = g;
  rep.h = lcm(f, g);
  const Biprincipal b(f, g, rep.h);
  const std::vector<Monomial> pair_gens{f, g};
  for (const auto& d : w.points()) {
    ConnectingDegree cd;
    cd.degree = d;
    const FiniteComplex a = b.pair(d), h = b.meet(d), k = b.cocone(d);
    if (!a.squares_to_zero() || !h.squares_to_zero() || !k.squares_to_zero())
      throw ComputationError(kModule, "bi-principal complexes do not square to zero");
    // Chain-map identities.
    const QMatrix phi0 = slot_map(b.h0, d, b.a0, d, b.phi0), phi1 = slot_map(b.h1, d, b.a1, d, b.phi1);
    const QMatrix rho0 = slot_map(b.a0, d, b.k0, d, b.rho0), rho1 = slot_map(b.a1, d, b.k1, d, b.rho1);
    const QMatrix delta0 = slot_map(b.k1, d, b.h0, d, b.delta0), delta1 = slot_map(b.k2, d, b.h1, d, b.delta1);
    if (h.d[0] * phi0 != phi1 * a.d[0] || a.d[0] * rho0 != rho1 * k.d[0])
      throw ComputationError(kModule, "maps of the bi-principal sequence are not chain maps");

    std::vector<CohomologyBasis> hk, ha, hh;
    for (std::size_t t = 0; t < 3; ++t) hk.push_back(cohomology_basis(k, t));
    for (std::size_t t = 0; t < 2; ++t) {
      ha.push_back(cohomology_basis(a, t));
      hh.push_back(cohomology_basis(h, t));
    }
    for (const auto& c : hk) cd.h_sum.push_back(static_cast<long>(c.reps.cols()));
    for (const auto& c : ha) cd.h_pair.push_back(static_cast<long>(c.reps.cols()));
    for (const auto& c : hh) cd.h_meet.push_back(static_cast<long>(c.reps.cols()));
    cd.h_oracle = cech_cohomology_dims(pair_gens, d);
    cd.oracle_match = cd.h_sum == cd.h_oracle;

    // 0 → H⁰Kc → H⁰A → H⁰Č_h → H¹Kc → H¹A → H¹Č_h → H²Kc → 0
    const std::vector<Eigen::Index> dims{cd.h_sum[0], cd.h_pair[0], cd.h_meet[0], cd.h_sum[1],
                                         cd.h_pair[1], cd.h_meet[1], cd.h_sum[2]};
    const std::vector<QMatrix> maps{induced(hk[0], ha[0], rho0),   induced(ha[0], hh[0], phi0),
                                    induced(hh[0], hk[1], delta0), induced(hk[1], ha[1], rho1),
                                    induced(ha[1], hh[1], phi1),   induced(hh[1], hk[2], delta1)};
    cd.delta_rank = {static_cast<long>(rank<Rational>(maps[2])), static_cast<long>(rank<Rational>(maps[5]))};
    for (std::size_t node = 0; node < dims.size(); ++node) {
      const Eigen::Index in = node == 0 ? 0 : rank<Rational>(maps[node - 1]);
      const Eigen::Index out = node + 1 < dims.size() ? rank<Rational>(maps[node]) : 0;
      if (in != dims[node] - out) cd.exact = false;
      if (node > 0 && node + 1 < dims.size() && !is_zero<Rational>(QMatrix(maps[node] * maps[node - 1]))) cd.exact = false;
    }

    // δ against ∂_k, for target degrees inside the window.
    for (std::size_t kk = 0; kk < d.size(); ++kk) {
      ZDeg e = d;
      --e[kk];
      if (!w.contains(e)) continue;
      const FiniteComplex ke = b.cocone(e);
      const FiniteComplex he = b.meet(e);
      const QMatrix pk_h0 = partial_map(b.h0, d, kk), pk_h1 = partial_map(b.h1, d, kk);
      const QMatrix pk_k0 = partial_map(b.k0, d, kk), pk_k1 = partial_map(b.k1, d, kk), pk_k2 = partial_map(b.k2, d, kk);
      // ∂_k is a chain map on each complex.
      if (he.d[0] * pk_h0 != pk_h1 * h.d[0] || ke.d[0] * pk_k0 != pk_k1 * k.d[0] || ke.d[1] * pk_k1 != pk_k2 * k.d[1])
        rep.d_linear = false;
      const QMatrix delta0e = slot_map(b.k1, e, b.h0, e, b.delta0), delta1e = slot_map(b.k2, e, b.h1, e, b.delta1);
      const std::vector<std::pair<QMatrix, QMatrix>> sides{{delta0e * pk_h0, pk_k1 * delta0},
                                                           {delta1e * pk_h1, pk_k2 * delta1}};
      for (std::size_t t = 0; t < 2; ++t) {
        const CohomologyBasis target = cohomology_basis(ke, t + 1);
        for (Eigen::Index j = 0; j < hh[t].reps.cols(); ++j) {
          const QVector diff = (sides[t].first - sides[t].second) * hh[t].reps.col(j);
          if (target.boundaries.cols() == 0 ? !is_zero<Rational>(QMatrix(diff))
                                            : !solve<Rational>(target.boundaries, diff))
            rep.d_linear = false;
        }
        ++rep.squares_checked;
      }
    }
    if (!cd.exact) rep.exact = false;
    if (!cd.oracle_match) rep.oracle_match = false;
    rep.degrees.push_back(std::move(cd));
  }
  if (rep.squares_checked == 0) throw WindowTooSmall(kModule, "no degree leaves room for a ∂ shift in " + w.to_string());
  return rep;
}

GammaCyclic gamma_cyclic(const Ideal& j, const Ideal& i) {
  Ideal sat = saturate(j, i).ideal;
  const bool zero = contains(j, sat);
  return {std::move(sat), zero};
}

bool LocalizationModel::piece(const ZDeg& d) const {
  if (!in_localization(f, d)) return false;
  return !(g && in_localization(*g, d));
}

std::string LocalizationModel::to_string(const PolyRing& ring) const {
  std::string s = "R_" + monomial_to_string(f, ring);
  if (g) s += g->is_one() ? std::string("/R") : "/R_" + monomial_to_string(*g, ring);
  return s;
}

bool is_torsion(const LocalizationModel& m, const std::vector<Monomial>& i, const ZDeg& d) {
  if (!m.piece(d)) return true;  // the zero element
  int bound = 1;
  for (int x : d) bound = std::max(bound, std::abs(x) + 1);
  for (const auto& gen : i) {
    bool killed = false;
    ZDeg e = d;
    for (int s = 1; s <= bound && !killed; ++s) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += gen[j];
      killed = !m.piece(e);
    }
    if (!killed) return false;
  }
  return true;
}

std::vector<ZDeg> gamma_localization(const LocalizationModel& m, const std::vector<Monomial>& i, const Window& w) {
  std::vector<ZDeg> out;
  for (const auto& d : w.points())
    if (m.piece(d) && is_torsion(m, i, d)) out.push_back(d);
  return out;
}

DStableReport gamma_dstable_check(const LocalizationModel& m, const std::vector<Monomial>& i, const Window& w) {
  for (const auto& [lo, hi] : w.bounds)
    if (hi <= lo) throw WindowTooSmall(kModule, "window " + w.to_string() + " leaves no margin for ∂");
  DStableReport r;
  for (const auto& d : gamma_localization(m, i, w)) {
    ++r.torsion_elements;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;  // ∂_k x^d = 0
      ZDeg e = d;
      --e[k];
      if (!m.piece(e)) continue;  // image is zero in M
      if (!w.contains(e)) {
        ++r.flagged;
        continue;
      }
      ++r.checked;
      if (!is_torsion(m, i, e)) r.stable = false;
    }
  }
  return r;
}

}  // namespace weylkit
