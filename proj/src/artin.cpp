#include "weylkit/artin.hpp"

#include <map>
#include <random>

#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

QMatrix matrix_power(QMatrix m, std::size_t e) {
  QMatrix r = QMatrix::Identity(m.rows(), m.cols());
  while (e) {
    if (e & 1) r = r * m;
    e >>= 1;
    if (e) m = m * m;
  }
  return r;
}

bool nilpotent(const QMatrix& m) { return is_zero<Rational>(matrix_power(m, static_cast<std::size_t>(m.rows()))); }

}  // namespace

ArtinAlgebra::ArtinAlgebra(const Ideal& ideal) : ring_(ideal.ring()), gb_(basis_of(ideal)) {
  basis_ = standard_monomials(ideal, gb_.order);
  const auto n = static_cast<Eigen::Index>(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    QMatrix m(n, n);
    for (std::size_t j = 0; j < basis_.size(); ++j)
      m.col(static_cast<Eigen::Index>(j)) = coords(ring_.term(basis_[i] * basis_[j]));
    basis_mult_.push_back(std::move(m));
  }
  for (std::size_t v = 0; v < ring_.size(); ++v) gens_.push_back(mult_matrix(coords(ring_.var(v))));
}

QVector ArtinAlgebra::coords(const Poly& p) const {
  if (!(p.ring() == ring_)) throw VariableMismatch("element of a different ring");
  const Poly r = normal_form(p, gb_);
  QVector v = QVector::Zero(static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) v(static_cast<Eigen::Index>(i)) = r.coefficient(basis_[i]);
  return v;
}

Poly ArtinAlgebra::lift(const QVector& v) const {
  Poly p = ring_.zero();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v(static_cast<Eigen::Index>(i)) != Rational(0)) p += ring_.term(basis_[i], v(static_cast<Eigen::Index>(i)));
  return p;
}

QVector ArtinAlgebra::mul(const QVector& a, const QVector& b) const { return mult_matrix(a) * b; }

QMatrix ArtinAlgebra::mult_matrix(const QVector& a) const {
  const auto n = static_cast<Eigen::Index>(basis_.size());
  QMatrix m = QMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (a(i) != Rational(0)) m += a(i) * basis_mult_[static_cast<std::size_t>(i)];
  return m;
}

QMatrix ArtinAlgebra::radical() const {
  const auto n = static_cast<Eigen::Index>(basis_.size());
  QMatrix t(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      t(i, j) = (basis_mult_[static_cast<std::size_t>(i)] * basis_mult_[static_cast<std::size_t>(j)]).trace();
      t(j, i) = t(i, j);
    }
  return kernel<Rational>(t);
}

ArtinAlgebra artin_from_presentation(const Ideal& ideal) { return ArtinAlgebra(ideal); }

LocalDecomposition decompose_local(const ArtinAlgebra& a) {
  LocalDecomposition d;
  d.radical = a.radical();
  const std::size_t reduced_dim = a.dim() - static_cast<std::size_t>(d.radical.cols());
  const std::size_t nvars = a.ring().size();
  std::mt19937_64 rng(7);
  std::vector<std::pair<UPoly, unsigned>> factors;
  for (int trial = 0;; ++trial) {
    if (trial >= 200) throw ComputationError("injective_structure", "no primitive element found");
    QVector z = QVector::Zero(static_cast<Eigen::Index>(a.dim()));
    if (static_cast<std::size_t>(trial) < nvars) {
      z = a.coords(a.ring().var(static_cast<std::size_t>(trial)));
    } else {
      for (std::size_t v = 0; v < nvars; ++v)
        z += Rational(static_cast<long>(rng() % 11) - 5) * a.coords(a.ring().var(v));
    }
    const UPoly p = minimal_polynomial(a.mult_matrix(z));
    factors = factor(p);
    std::size_t deg = 0;
    for (const auto& [f, k] : factors) deg += static_cast<std::size_t>(f.degree());
    if (deg == reduced_dim) {
      d.primitive = z;
      d.primitive_minpoly = p;
      break;
    }
  }
  const QMatrix lz = a.mult_matrix(d.primitive);
  const QVector one = a.one();
  for (const auto& [f, k] : factors) {
    const UPoly q = f.pow(k);
    const UPoly other = divmod(d.primitive_minpoly, q).quotient;
    const ExtGcd eg = extended_gcd(other, q);
    const UPoly u = (eg.s * other) % d.primitive_minpoly;
    LocalFactor lf;
    lf.idempotent = evaluate(u, lz) * one;
    const QMatrix le = a.mult_matrix(lf.idempotent);
    lf.basis = column_basis<Rational>(le);
    lf.dim = static_cast<std::size_t>(lf.basis.cols());
    lf.residue_poly = f;
    lf.residue_dim = static_cast<std::size_t>(f.degree());
    const QMatrix complement = a.mult_matrix(QVector(one - lf.idempotent));
    lf.max_ideal = column_basis<Rational>(hstack<Rational>(complement, QMatrix(le * d.radical)));
    if (a.dim() - static_cast<std::size_t>(lf.max_ideal.cols()) != lf.residue_dim)
      throw ComputationError("injective_structure", "local factor has the wrong residue dimension");
    d.factors.push_back(std::move(lf));
  }
  return d;
}

bool decomposition_is_sound(const ArtinAlgebra& a, const LocalDecomposition& d) {
  QVector sum = QVector::Zero(static_cast<Eigen::Index>(a.dim()));
  std::size_t dims = 0;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const QVector& e = d.factors[i].idempotent;
    if (a.mul(e, e) != e) return false;
    for (std::size_t j = i + 1; j < d.factors.size(); ++j)
      if (!is_zero<Rational>(QMatrix(a.mul(e, d.factors[j].idempotent)))) return false;
    if (static_cast<std::size_t>(rank<Rational>(a.mult_matrix(e))) != d.factors[i].dim) return false;
    sum += e;
    dims += d.factors[i].dim;
  }
  return sum == a.one() && dims == a.dim();
}

int matching_factor(const ArtinAlgebra& a, const LocalDecomposition& d, const std::vector<QVector>& gens) {
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    bool all = true;
    for (const auto& g : gens)
      if (!nilpotent(a.mult_matrix(a.mul(d.factors[i].idempotent, g)))) {
        all = false;
        break;
      }
    if (all) return static_cast<int>(i);
  }
  return -1;
}

QMatrix module_action(const ArtinAlgebra& a, const FiniteModule& m, const QVector& element) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  QMatrix out = QMatrix::Zero(n, n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational& c = element(static_cast<Eigen::Index>(i));
    if (c == Rational(0)) continue;
    QMatrix t = QMatrix::Identity(n, n);
    const Monomial& mono = a.basis()[i];
    for (std::size_t v = 0; v < a.ring().size(); ++v)
      for (unsigned k = 0; k < mono[v]; ++k) t = m.actions[v] * t;
    out += c * t;
  }
  return out;
}

QMatrix socle(const ArtinAlgebra& a, const FiniteModule& m) {
  const QMatrix rad = a.radical();
  const auto n = static_cast<Eigen::Index>(m.dim());
  if (rad.cols() == 0) return QMatrix::Identity(n, n);
  QMatrix stacked(0, n);
  for (Eigen::Index j = 0; j < rad.cols(); ++j)
    stacked = vstack<Rational>(stacked, module_action(a, m, QVector(rad.col(j))));
  return kernel<Rational>(stacked);
}

InjectiveHull essential_and_hull_findim(const ArtinAlgebra& a, const LocalDecomposition& d, const FiniteModule& m,
                                        std::uint64_t seed) {
  if (m.actions.size() != a.ring().size()) throw UsageError("injective_structure", "module needs one action per variable");
  const auto mdim = static_cast<Eigen::Index>(m.dim());
  const std::size_t nvars = a.ring().size();
  std::mt19937_64 rng(seed);
  InjectiveHull out;
  const QMatrix soc = socle(a, m);
  std::vector<QMatrix> blocks;  // embedding rows per summand copy
  std::vector<std::vector<QMatrix>> dual_actions;
  for (std::size_t j = 0; j < d.factors.size(); ++j) {
    const LocalFactor& f = d.factors[j];
    const QMatrix ej = module_action(a, m, f.idempotent);
    const QMatrix part = column_basis<Rational>(ej);
    const auto soc_dim = static_cast<std::size_t>(rank<Rational>(QMatrix(ej * soc)));
    if (soc_dim % f.residue_dim != 0) throw ComputationError("injective_structure", "socle is not a residue-field space");
    const std::size_t copies = soc_dim / f.residue_dim;
    if (copies == 0) continue;
    std::vector<QMatrix> acts;  // transpose of multiplication on e_jA
    for (std::size_t v = 0; v < nvars; ++v) {
      const auto r = restrict_to<Rational>(a.generator(v), f.basis);
      if (!r) throw ComputationError("injective_structure", "local factor is not an ideal");
      acts.push_back(r->transpose());
    }
    std::vector<QMatrix> basis_acts;
    for (Eigen::Index k = 0; k < f.basis.cols(); ++k) basis_acts.push_back(module_action(a, m, QVector(f.basis.col(k))));
    bool found = false;
    for (int attempt = 0; attempt < 50 && !found; ++attempt) {
      QMatrix iota(static_cast<Eigen::Index>(copies) * f.basis.cols(), mdim);
      for (std::size_t c = 0; c < copies; ++c) {
        QVector lambda(mdim);
        for (Eigen::Index i = 0; i < mdim; ++i) lambda(i) = Rational(static_cast<long>(rng() % 7) - 3);
        for (Eigen::Index k = 0; k < f.basis.cols(); ++k)
          iota.row(static_cast<Eigen::Index>(c) * f.basis.cols() + k) = lambda.transpose() * basis_acts[static_cast<std::size_t>(k)];
      }
      if (rank<Rational>(QMatrix(iota * part)) == part.cols()) {
        blocks.push_back(iota);
        found = true;
      }
    }
    if (!found) throw ComputationError("injective_structure", "no embedding functionals found");
    for (std::size_t c = 0; c < copies; ++c) dual_actions.push_back(acts);
    out.summands.push_back({j, copies});
  }
  // Assemble E block-diagonally.
  Eigen::Index edim = 0;
  for (const auto& b : blocks) edim += b.rows();
  out.embedding = QMatrix(edim, mdim);
  Eigen::Index row = 0;
  for (const auto& b : blocks) {
    if (b.rows() > 0) out.embedding.block(row, 0, b.rows(), mdim) = b;
    row += b.rows();
  }
  out.hull.actions.assign(nvars, QMatrix::Zero(edim, edim));
  row = 0;
  for (const auto& acts : dual_actions) {
    const Eigen::Index s = acts.front().rows();
    for (std::size_t v = 0; v < nvars; ++v) out.hull.actions[v].block(row, row, s, s) = acts[v];
    row += s;
  }

  out.linear = true;
  for (std::size_t v = 0; v < nvars; ++v)
    if (out.embedding * m.actions[v] != out.hull.actions[v] * out.embedding) out.linear = false;
  out.injective_map = rank<Rational>(out.embedding) == mdim;
  out.essential = spans<Rational>(out.embedding, socle(a, out.hull));
  out.summands_injective = true;
  for (const auto& s : out.summands) {
    const LocalFactor& f = d.factors[s.factor];
    FiniteModule dual;
    for (std::size_t v = 0; v < nvars; ++v) dual.actions.push_back(restrict_to<Rational>(a.generator(v), f.basis)->transpose());
    if (static_cast<std::size_t>(socle(a, dual).cols()) != f.residue_dim) out.summands_injective = false;
    QMatrix images(0, static_cast<Eigen::Index>(f.dim * f.dim));
    for (Eigen::Index k = 0; k < f.basis.cols(); ++k) {
      QMatrix act = module_action(a, dual, QVector(f.basis.col(k)));
      images = vstack<Rational>(images, QMatrix(act.reshaped(1, act.size())));
    }
    if (static_cast<std::size_t>(rank<Rational>(images)) != f.dim) out.summands_injective = false;
  }
  return out;
}

std::vector<UPoly> ass_torsion(const QMatrix& t_action) {
  std::vector<UPoly> out;
  if (t_action.rows() == 0) return out;
  for (const auto& [f, k] : factor(minimal_polynomial(t_action))) out.push_back(f);
  return out;
}

std::vector<UPoly> ass_presented(const std::vector<std::vector<UPoly>>& relations, std::size_t rows) {
  if (relations.size() != rows) throw UsageError("injective_structure", "relation matrix has the wrong row count");
  std::vector<UPoly> out;
  std::size_t nonzero = 0;
  std::map<std::vector<Rational>, UPoly> primes;
  bool has_columns = false;
  for (const auto& r : relations) has_columns = has_columns || !r.empty();
  if (has_columns) {
    for (const auto& d : invariant_factors(relations)) {
      ++nonzero;
      for (const auto& [f, k] : factor(d)) primes.emplace(f.coeffs(), f);
    }
  }
  if (nonzero < rows) out.push_back(UPoly());
  for (const auto& [key, f] : primes) out.push_back(f);
  return out;
}

}  // namespace weylkit
