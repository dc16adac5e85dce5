#include "weylkit/ore.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "weylkit/expr.hpp"

namespace weylkit {

namespace {

void require_same(const OreRing& a, const OreRing& b) {
  if (!(a == b)) throw UsageError("ore_weyl", "operators live in different rings");
}

Rational binomial(const OpExp& alpha, const OpExp& beta) {
  mpz_class acc = 1, c;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (beta[i] == 0) continue;
    mpz_bin_uiui(c.get_mpz_t(), alpha[i], beta[i]);
    acc *= c;
  }
  return Rational(acc);
}

// Every β ≤ α componentwise.
std::vector<OpExp> sub_exponents(const OpExp& alpha, std::size_t nops) {
  std::vector<OpExp> out{OpExp{}};
  for (std::size_t i = 0; i < nops; ++i) {
    std::vector<OpExp> next;
    for (const auto& b : out)
      for (unsigned e = 0; e <= alpha[i]; ++e) {
        OpExp c = b;
        c[i] = static_cast<std::uint16_t>(e);
        next.push_back(c);
      }
    out = std::move(next);
  }
  return out;
}

// D^β(p), applying the commuting derivations one variable at a time.
Poly derive_multi(const OreRing& ring, const OpExp& beta, Poly p) {
  for (std::size_t i = 0; i < ring.num_ops() && !p.is_zero(); ++i) p = ring.derive_power(i, p, beta[i]);
  return p;
}

void accumulate(DiffOp::TermMap& terms, const OpExp& alpha, const Poly& p) {
  if (p.is_zero()) return;
  auto it = terms.find(alpha);
  if (it == terms.end()) {
    terms.emplace(alpha, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms.erase(it);
}

std::string exp_string(const OpExp& alpha, const OreRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.num_ops(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.op_names()[i];
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s;
}

}  // namespace

// ------------------------------------------------------------------ OreRing

OreRing OreRing::weyl(PolyRing base) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < base.size(); ++i) names.push_back("d" + std::to_string(i + 1));
  return OreRing(Kind::Weyl, std::move(base), {}, std::move(names));
}

OreRing OreRing::single_ore(PolyRing base, std::vector<Poly> delta_on_generators) {
  if (delta_on_generators.size() != base.size())
    throw UsageError("ore_weyl", "derivation must be given on every generator");
  for (const auto& d : delta_on_generators)
    if (!(d.ring() == base)) throw VariableMismatch("derivation value over a different ring");
  return OreRing(Kind::SingleOre, std::move(base), std::move(delta_on_generators), {"X"});
}

Poly OreRing::derive(std::size_t op, const Poly& p) const {
  if (op >= num_ops()) throw UsageError("ore_weyl", "operator index out of range");
  if (kind_ == Kind::Weyl) return partial_derivative(p, op);
  Poly out = base_.zero();
  for (std::size_t j = 0; j < base_.size(); ++j) {
    if (delta_[j].is_zero()) continue;
    const Poly dj = partial_derivative(p, j);
    if (!dj.is_zero()) out += dj * delta_[j];
  }
  return out;
}

Poly OreRing::derive_power(std::size_t op, const Poly& p, unsigned times) const {
  Poly q = p;
  for (unsigned k = 0; k < times && !q.is_zero(); ++k) q = derive(op, q);
  return q;
}

bool operator==(const OreRing& a, const OreRing& b) {
  return a.kind_ == b.kind_ && a.base_ == b.base_ && a.delta_ == b.delta_;
}

// ------------------------------------------------------------------ DiffOp

DiffOp::DiffOp(OreRing ring, NormalForm form, TermMap terms) : ring_(std::move(ring)), form_(form) {
  for (auto& [alpha, p] : terms) {
    if (!(p.ring() == ring_.base())) throw VariableMismatch("operator coefficient over a different ring");
    for (std::size_t i = ring_.num_ops(); i < kMaxVars; ++i)
      if (alpha[i] != 0) throw UsageError("ore_weyl", "operator exponent out of range");
    if (!p.is_zero()) terms_.emplace(alpha, std::move(p));
  }
}

DiffOp DiffOp::from_poly(const OreRing& ring, const Poly& p, NormalForm form) {
  TermMap t;
  t.emplace(OpExp{}, p);
  return DiffOp(ring, form, std::move(t));
}

DiffOp DiffOp::op_monomial(const OreRing& ring, const OpExp& alpha, NormalForm form) {
  TermMap t;
  t.emplace(alpha, ring.base().one());
  return DiffOp(ring, form, std::move(t));
}

DiffOp DiffOp::generator(const OreRing& ring, std::size_t op) {
  if (op >= ring.num_ops()) throw UsageError("ore_weyl", "operator index out of range");
  return op_monomial(ring, OpExp::unit(op));
}

Poly DiffOp::coefficient(const OpExp& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? ring_.base().zero() : it->second;
}

int DiffOp::order() const {
  int m = -1;
  for (const auto& [alpha, p] : terms_) m = std::max(m, static_cast<int>(alpha.degree()));
  return m;
}

DiffOp DiffOp::operator-() const {
  TermMap t;
  for (const auto& [alpha, p] : terms_) t.emplace(alpha, -p);
  return DiffOp(ring_, form_, std::move(t));
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  require_same(a.ring_, b.ring_);
  if (a.form_ != b.form_) throw UsageError("ore_weyl", "adding operators in different normal forms");
  DiffOp out = a;
  for (const auto& [alpha, p] : b.terms_) accumulate(out.terms_, alpha, p);
  return out;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  return a.ring_ == b.ring_ && a.form_ == b.form_ && a.terms_ == b.terms_;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  const TermOrder order = TermOrder::grevlex(ring_.num_ops());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto* a, const auto* b) { return order.less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : sorted) {
    const std::string ops = exp_string(t->first, ring_);
    const Poly& p = t->second;
    std::string coef = p.to_string();
    bool negative = false;
    if (p.is_monomial() && p.terms().begin()->second.sign() < 0) {
      negative = true;
      coef = (-p).to_string();
    }
    std::string body;
    if (ops.empty()) {
      body = coef;
    } else {
      const std::string wrapped = p.is_monomial() ? coef : "(" + coef + ")";
      const bool unit = p.is_monomial() && p.is_constant() && coef == "1";
      if (form_ == NormalForm::Left) body = unit ? ops : wrapped + "*" + ops;
      else if (unit) body = ops;
      else body = p.is_constant() ? coef + "*" + ops : ops + "*" + wrapped;
    }
    if (first) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ products

namespace {

// g^alpha · p in left normal form, by rewriting g_i·q → q·g_i + D_i(q).
// Work items are (pending α, emitted γ) ↦ q, standing for g^α · q · g^γ;
// items with equal keys merge, so the worklist stays small.
DiffOp::TermMap commute_past(const OreRing& ring, const OpExp& alpha, const Poly& p) {
  using Key = std::tuple<unsigned, OpExp, OpExp>;  // (|pending|, pending, emitted)
  std::map<Key, Poly, std::greater<>> work;
  DiffOp::TermMap out;
  work.emplace(Key{alpha.degree(), alpha, OpExp{}}, p);
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const auto& [deg, pending, emitted] = node.key();
    Poly q = std::move(node.mapped());
    if (q.is_zero()) continue;
    if (deg == 0) {
      accumulate(out, emitted, q);
      continue;
    }
    std::size_t i = 0;
    while (pending[i] == 0) ++i;
    OpExp rest = pending;
    --rest[i];
    OpExp moved = emitted;
    ++moved[i];
    auto push = [&](const OpExp& pend, const OpExp& emit, Poly v) {
      if (v.is_zero()) return;
      Key k{pend.degree(), pend, emit};
      auto it = work.find(k);
      if (it == work.end()) work.emplace(k, std::move(v));
      else it->second += v;
    };
    push(rest, emitted, ring.derive(i, q));
    push(rest, moved, std::move(q));
  }
  return out;
}

}  // namespace

DiffOp op_mul(const DiffOp& s0, const DiffOp& t0) {
  require_same(s0.ring(), t0.ring());
  const DiffOp s = to_left_nf(s0);
  const DiffOp t = to_left_nf(t0);
  const OreRing& ring = s.ring();
  DiffOp::TermMap out;
  for (const auto& [alpha, phi] : s.terms()) {
    for (const auto& [beta, psi] : t.terms()) {
      for (const auto& [gamma, q] : commute_past(ring, alpha, psi)) accumulate(out, gamma * beta, phi * q);
    }
  }
  return DiffOp(ring, NormalForm::Left, std::move(out));
}

DiffOp to_right_nf(const DiffOp& s) {
  if (s.form() == NormalForm::Right) return s;
  // φ·g^α = Σ_β (−1)^|β| C(α,β) g^{α−β}·D^β(φ)
  const OreRing& ring = s.ring();
  DiffOp::TermMap out;
  for (const auto& [alpha, phi] : s.terms()) {
    for (const auto& beta : sub_exponents(alpha, ring.num_ops())) {
      Poly d = derive_multi(ring, beta, phi);
      if (d.is_zero()) continue;
      Rational c = binomial(alpha, beta);
      if (beta.degree() % 2) c = -c;
      accumulate(out, alpha / beta, c * d);
    }
  }
  return DiffOp(ring, NormalForm::Right, std::move(out));
}

DiffOp to_left_nf(const DiffOp& s) {
  if (s.form() == NormalForm::Left) return s;
  // g^α·ψ = Σ_β C(α,β) D^{α−β}(ψ)·g^β
  const OreRing& ring = s.ring();
  DiffOp::TermMap out;
  for (const auto& [alpha, psi] : s.terms()) {
    for (const auto& beta : sub_exponents(alpha, ring.num_ops())) {
      Poly d = derive_multi(ring, alpha / beta, psi);
      if (d.is_zero()) continue;
      accumulate(out, beta, binomial(alpha, beta) * d);
    }
  }
  return DiffOp(ring, NormalForm::Left, std::move(out));
}

// ------------------------------------------------------------------ fractions

LocalizedFraction::LocalizedFraction(Poly numerator, Poly base, unsigned power)
    : num_(std::move(numerator)), base_(std::move(base)), k_(power) {
  if (!(num_.ring() == base_.ring())) throw VariableMismatch("fraction over mismatched rings");
  if (base_.is_zero()) throw UsageError("ore_weyl", "zero denominator");
  if (base_.is_constant()) {
    num_ = num_ * base_.coefficient(Monomial{}).pow(k_).inverse();
    k_ = 0;
  }
  if (num_.is_zero()) k_ = 0;
  while (k_ > 0) {
    auto q = divide_exact(num_, base_);
    if (!q) break;
    num_ = std::move(*q);
    --k_;
  }
}

bool operator==(const LocalizedFraction& a, const LocalizedFraction& b) {
  if (!(a.num_.ring() == b.num_.ring())) return false;
  return a.num_ * b.base_.pow(b.k_) == b.num_ * a.base_.pow(a.k_);
}

std::string LocalizedFraction::to_string() const {
  if (k_ == 0) return num_.to_string();
  std::string den = base_.is_monomial() ? base_.to_string() : "(" + base_.to_string() + ")";
  if (k_ > 1) den += "^" + std::to_string(k_);
  const std::string num = num_.is_monomial() && !num_.is_constant() ? num_.to_string()
                          : num_.is_constant()                      ? num_.to_string()
                                                                    : "(" + num_.to_string() + ")";
  return num + "/" + den;
}

Poly apply(const DiffOp& s0, const Poly& m) {
  if (!(m.ring() == s0.ring().base())) throw VariableMismatch("operand over a different ring");
  const DiffOp s = to_left_nf(s0);
  Poly out = m.ring().zero();
  for (const auto& [alpha, phi] : s.terms()) {
    Poly d = derive_multi(s.ring(), alpha, m);
    if (!d.is_zero()) out += phi * d;
  }
  return out;
}

LocalizedFraction apply(const DiffOp& s0, const LocalizedFraction& m) {
  if (s0.ring().kind() != OreRing::Kind::Weyl)
    throw UsageError("ore_weyl", "fractions are acted on by Weyl operators only");
  if (!(m.numerator().ring() == s0.ring().base())) throw VariableMismatch("operand over a different ring");
  const DiffOp s = to_left_nf(s0);
  const Poly& f = m.base();
  // Work over the common denominator f^K, K = power + order, so the sum is a
  // single numerator.
  const unsigned top = m.power() + static_cast<unsigned>(std::max(0, s.order()));
  Poly total = f.ring().zero();
  for (const auto& [alpha, phi] : s.terms()) {
    // Quotient rule, one ∂ at a time: ∂_i(p/f^k) = (∂_i p·f − k·p·∂_i f)/f^{k+1}.
    Poly num = m.numerator();
    unsigned k = m.power();
    for (std::size_t i = 0; i < s.ring().num_ops(); ++i)
      for (unsigned e = 0; e < alpha[i]; ++e) {
        num = partial_derivative(num, i) * f - Rational(static_cast<long>(k)) * num * partial_derivative(f, i);
        ++k;
      }
    total += phi * num * f.pow(top - k);
  }
  return LocalizedFraction(total, f, top);
}

// ------------------------------------------------------------------ (*)

bool in_left_ideal_SI(const DiffOp& t, const Ideal& ideal) {
  if (!(ideal.ring() == t.ring().base())) throw VariableMismatch("ideal over a different ring");
  const Ideal gi = groebner(ideal);
  const DiffOp r = to_right_nf(t);
  for (const auto& [alpha, psi] : r.terms())
    if (!ideal_member(psi, gi)) return false;
  return true;
}

StarResult verify_star(const Ideal& ideal, const DiffOp& s, int r_max) {
  if (r_max < 1) throw UsageError("ore_weyl", "r_max must be at least 1");
  const OreRing& ring = s.ring();
  const Ideal gi = groebner(ideal);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) gens.push_back(g);
  StarResult res;
  if (gens.empty()) {
    res.r = 1;
    return res;
  }
  for (int r = 1; r <= r_max; ++r) {
    // Multisets of r generators as non-decreasing index vectors.
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    bool ok = true;
    while (ok) {
      Poly b = ring.base().one();
      for (auto i : idx) b *= gens[i];
      ++res.products_checked;
      if (!in_left_ideal_SI(op_mul(DiffOp::from_poly(ring, b), s), gi)) ok = false;
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
      if (pos == 0) break;
      const std::size_t v = idx[pos - 1] + 1;
      for (std::size_t j = pos - 1; j < idx.size(); ++j) idx[j] = v;
    }
    if (ok) {
      res.r = r;
      return res;
    }
  }
  throw ComputationError("ore_weyl", "no r <= " + std::to_string(r_max) + " with I^r s in SI");
}

DiffOp parse_op(std::string_view text, const OreRing& ring) {
  std::vector<std::string> declared = ring.base().names();
  for (const auto& n : ring.op_names()) declared.push_back(n);
  const ExprPtr ast = parse_expr(text, declared);
  auto leaf = [&](const ExprNode& n) -> DiffOp {
    if (n.kind == ExprNode::Kind::Number) return DiffOp::from_poly(ring, ring.base().constant(n.value));
    if (auto i = ring.base().index_of(n.name)) return DiffOp::from_poly(ring, ring.base().var(*i));
    const auto& ops = ring.op_names();
    const auto it = std::find(ops.begin(), ops.end(), n.name);
    return DiffOp::generator(ring, static_cast<std::size_t>(it - ops.begin()));
  };
  auto mul = [](const DiffOp& a, const DiffOp& b) { return op_mul(a, b); };
  return fold_expr<DiffOp>(*ast, leaf, mul);
}

}  // namespace weylkit
