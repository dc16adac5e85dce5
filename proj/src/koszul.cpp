#include "weylkit/koszul.hpp"

#include <algorithm>
#include <random>

#include "weylkit/errors.hpp"

namespace weylkit {

PolyMatrix::PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("koszul", "matrix shapes do not compose");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  return out;
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t g, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > g) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t pos = k;
    while (pos > 0 && s[pos - 1] == g - k + pos - 1) --pos;
    if (pos == 0) break;
    ++s[pos - 1];
    for (std::size_t i = pos; i < k; ++i) s[i] = s[i - 1] + 1;
  }
  return out;
}

namespace {

const PolyRing& ring_of(const std::vector<Poly>& a) {
  if (a.empty()) throw UsageError("koszul", "empty sequence");
  for (const auto& p : a)
    if (!(p.ring() == a.front().ring())) throw VariableMismatch("sequence over mixed rings");
  return a.front().ring();
}

}  // namespace

PolyMatrix koszul_map(const std::vector<Poly>& a, std::size_t k, Convention conv) {
  const PolyRing& ring = ring_of(a);
  const std::size_t g = a.size();
  if (k < 1 || k > g) throw UsageError("koszul", "degree " + std::to_string(k) + " out of range 1.." + std::to_string(g));
  const auto rows = lex_subsets(g, k);
  const auto cols = lex_subsets(g, k - 1);
  PolyMatrix m(ring, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& t = rows[r];
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::size_t> face;
      for (std::size_t l = 0; l < k; ++l)
        if (l != j) face.push_back(t[l]);
      const auto c = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), face) - cols.begin());
      m(r, c) = (j % 2 == 0) ? a[t[j]] : -a[t[j]];
    }
  }
  return conv == Convention::Right ? m : m.transpose();
}

KoszulComplex koszul_complex(const std::vector<Poly>& a, Convention conv) {
  KoszulComplex k{a, conv, {}};
  for (std::size_t d = 1; d <= a.size(); ++d) k.maps.push_back(koszul_map(a, d, conv));
  return k;
}

bool composes_to_zero(const KoszulComplex& k) {
  for (std::size_t d = 1; d < k.maps.size(); ++d) {
    // Rows act on the right: degree d+1 then degree d. Columns: the reverse.
    const PolyMatrix prod =
        k.convention == Convention::Right ? k.maps[d] * k.maps[d - 1] : k.maps[d - 1] * k.maps[d];
    if (!prod.is_zero()) return false;
  }
  return true;
}

namespace {

PolyMatrix psi_recursive(const std::vector<Poly>& a) {
  const PolyRing& ring = a.front().ring();
  const std::size_t r = a.size();
  PolyMatrix m(ring, r * (r - 1) / 2, r);
  for (std::size_t i = 1; i < r; ++i) {
    m(i - 1, 0) = -a[i];
    m(i - 1, i) = a[0];
  }
  if (r > 2) {
    const PolyMatrix tail = psi_recursive(std::vector<Poly>(a.begin() + 1, a.end()));
    for (std::size_t i = 0; i < tail.rows(); ++i)
      for (std::size_t j = 0; j < tail.cols(); ++j) m(r - 1 + i, 1 + j) = tail(i, j);
  }
  return m;
}

bool rows_equal(const PolyMatrix& a, std::size_t i, const PolyMatrix& b, std::size_t k, bool negate) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!(a(i, j) == (negate ? -b(k, j) : b(k, j)))) return false;
  return true;
}

}  // namespace

InductivePsi build_psi_inductive(const std::vector<Poly>& a) {
  ring_of(a);
  if (a.size() < 2) throw UsageError("koszul", "the inductive construction needs r >= 2");
  InductivePsi out{psi_recursive(a), {}, {}, true};
  const PolyMatrix ext = koszul_map(a, 2, Convention::Right);
  std::vector<bool> used(ext.rows(), false);
  for (std::size_t i = 0; i < out.psi.rows(); ++i) {
    bool found = false;
    for (std::size_t k = 0; k < ext.rows() && !found; ++k) {
      if (used[k]) continue;
      for (int sign : {1, -1}) {
        if (rows_equal(out.psi, i, ext, k, sign < 0)) {
          out.row_permutation.push_back(k);
          out.row_signs.push_back(sign);
          used[k] = true;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.matches = false;
      out.row_permutation.push_back(ext.rows());
      out.row_signs.push_back(0);
    }
  }
  return out;
}

PsiWCheck psi_w_check(const std::vector<Poly>& a, const std::vector<Poly>& e) {
  const PolyRing& ring = ring_of(a);
  if (a.size() < 2) throw UsageError("koszul", "psi_g needs g >= 2");
  if (e.empty()) throw UsageError("koszul", "empty value vector");
  PolyMatrix w(ring, a.size(), e.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!(e[j].ring() == ring)) throw VariableMismatch("value vector over a different ring");
      w(i, j) = a[i] * e[j];
    }
  PsiWCheck out{koszul_map(a, 2, Convention::Right) * w, false};
  out.zero = out.product.is_zero();
  return out;
}

RegularityCertificate is_regular_sequence(const std::vector<Poly>& a, const PolyRing& ring) {
  RegularityCertificate cert;
  for (const auto& p : a)
    if (!(p.ring() == ring)) throw VariableMismatch("sequence over a different ring");
  if (!a.empty() && !is_proper(Ideal(ring, a))) {
    cert.proper = false;
    return cert;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::vector<Poly> prefix(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    const bool prefix_zero =
        std::all_of(prefix.begin(), prefix.end(), [](const Poly& p) { return p.is_zero(); });
    if (a[i].is_zero()) {
      // (J : 0) is the whole ring.
      if (prefix_zero || is_proper(Ideal(ring, prefix))) {
        cert.failing_index = i + 1;
        cert.witness = ring.one();
        return cert;
      }
      continue;
    }
    if (prefix_zero) continue;  // R is a domain
    const Ideal j = groebner(Ideal(ring, prefix));
    const Ideal q = ideal_quotient(j, a[i]);
    for (const auto& g : basis_of(q).elements) {
      if (!ideal_member(g, j)) {
        cert.failing_index = i + 1;
        cert.witness = g;
        return cert;
      }
    }
  }
  cert.regular = true;
  return cert;
}

bool local_member(const Poly& f, const Ideal& q, const Ideal& p) {
  if (f.is_zero()) return true;
  return !contains(p, ideal_quotient(q, f));
}

bool symbolic_power2_member(const Poly& f, const Ideal& p) { return local_member(f, ideal_power(p, 2), p); }

PrimeAvoidanceResult prime_avoidance_sequence(const Ideal& p, std::size_t g, std::uint64_t seed) {
  const PolyRing& ring = p.ring();
  std::vector<Poly> gens;
  for (const auto& x : p.generators())
    if (!x.is_zero()) gens.push_back(x);
  if (gens.empty()) throw UsageError("koszul", "prime avoidance in the zero ideal");
  const Ideal p2 = ideal_power(p, 2);
  std::mt19937_64 rng(seed);
  PrimeAvoidanceResult res;
  while (res.sequence.size() < g) {
    if (res.trials_used >= kPrimeAvoidanceTrials)
      throw ComputationError("koszul", "prime avoidance: no candidate within " +
                                           std::to_string(kPrimeAvoidanceTrials) + " trials");
    ++res.trials_used;
    Poly cand = ring.zero();
    for (const auto& x : gens) {
      const long c = static_cast<long>(rng() % 11) - 5;
      if (c != 0) cand += Rational(c) * x;
    }
    if (cand.is_zero()) continue;
    std::vector<Poly> q_gens = p2.generators();
    for (const auto& x : res.sequence) q_gens.push_back(x);
    if (local_member(cand, Ideal(ring, q_gens), p)) continue;
    std::vector<Poly> next = res.sequence;
    next.push_back(cand);
    if (!is_regular_sequence(next, ring).regular) continue;
    res.sequence = std::move(next);
    res.trial_indices.push_back(res.trials_used);
  }
  return res;
}

}  // namespace weylkit
