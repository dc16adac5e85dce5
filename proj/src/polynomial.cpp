#include "weylkit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "weylkit/errors.hpp"

namespace weylkit {

Monomial::Monomial(std::initializer_list<unsigned> e) {
  if (e.size() > kMaxVars) throw UsageError("core_arith", "too many variables");
  std::size_t i = 0;
  for (unsigned v : e) exp[i++] = static_cast<std::uint16_t>(v);
}

Monomial Monomial::unit(std::size_t var, unsigned power) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned{a.exp[i]} + b.exp[i];
    if (s > 0xFFFFu) throw ComputationError("core_arith", "exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(Kind kind, std::vector<int> priority, std::size_t eliminate)
    : kind_(kind), priority_(std::move(priority)), eliminate_(eliminate) {
  if (priority_.size() > kMaxVars) throw UsageError("core_arith", "too many variables for term order");
  std::vector<int> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw UsageError("core_arith", "priority is not a permutation");
}

static std::vector<int> identity_priority(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

TermOrder TermOrder::grevlex(std::size_t nvars) { return {Kind::GradedReverseLex, identity_priority(nvars), 0}; }
TermOrder TermOrder::lex(std::size_t nvars) { return {Kind::Lex, identity_priority(nvars), 0}; }
TermOrder TermOrder::grevlex(std::vector<int> priority) { return {Kind::GradedReverseLex, std::move(priority), 0}; }
TermOrder TermOrder::lex(std::vector<int> priority) { return {Kind::Lex, std::move(priority), 0}; }
TermOrder TermOrder::elimination(std::size_t nvars, std::size_t eliminate) {
  return {Kind::Elimination, identity_priority(nvars), eliminate};
}

std::strong_ordering TermOrder::grevlex_on(const Monomial& a, const Monomial& b, std::size_t from,
                                           std::size_t to) const {
  unsigned da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[static_cast<std::size_t>(priority_[i])];
    db += b[static_cast<std::size_t>(priority_[i])];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = to; i-- > from;) {
    const auto v = static_cast<std::size_t>(priority_[i]);
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (int v : priority_) {
        const auto i = static_cast<std::size_t>(v);
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      auto c = grevlex_on(a, b, 0, eliminate_);
      if (c != 0) return c;
      return grevlex_on(a, b, eliminate_, priority_.size());
    }
    case Kind::GradedReverseLex:
    default:
      return grevlex_on(a, b, 0, priority_.size());
  }
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination";
    default: return "grevlex";
  }
}

// ------------------------------------------------------------------ PolyRing

PolyRing::PolyRing(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->size() > kMaxVars)
    throw UsageError("core_arith", "at most " + std::to_string(kMaxVars) + " variables supported");
}

PolyRing PolyRing::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return PolyRing(std::move(names));
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

Poly PolyRing::zero() const { return Poly(*this); }
Poly PolyRing::one() const { return constant(Rational(1)); }
Poly PolyRing::constant(const Rational& c) const { return term(Monomial{}, c); }
Poly PolyRing::var(std::size_t i) const {
  if (i >= size()) throw UsageError("core_arith", "variable index out of range");
  return term(Monomial::unit(i));
}
Poly PolyRing::term(const Monomial& m, const Rational& c) const {
  Poly::TermMap t;
  if (!c.is_zero()) t.emplace(m, c);
  return Poly(*this, std::move(t));
}

// ---------------------------------------------------------------------- Poly

Poly::Poly(PolyRing ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [m, c] : terms_)
    for (std::size_t i = ring_.size(); i < kMaxVars; ++i)
      if (m[i] != 0) throw VariableMismatch("exponent vector longer than variable list");
}

void Poly::check_same_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw VariableMismatch("polynomials over different variable lists");
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

std::pair<Monomial, Rational> Poly::leading(const TermOrder& order) const {
  if (terms_.empty()) throw UsageError("core_arith", "leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly::TermMap out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  return Poly(a.ring_, std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c.is_zero()) return Poly(p.ring_);
  Poly r = p;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  TermMap out;
  for (const auto& [mm, cc] : terms_) out.emplace_hint(out.end(), mm * m, cc * c);
  return Poly(ring_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = ring_.one();
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  return leading(order).second.inverse() * *this;
}

bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string Poly::to_string(const TermOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_to_string(m, ring_);
    if (mono.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly poly_arith(const Poly& p, const Poly& q, ArithOp which) {
  if (!(p.ring() == q.ring())) throw VariableMismatch("poly_arith: variable lists differ");
  switch (which) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul:
    default: return p * q;
  }
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  if (var >= p.ring().size()) throw UsageError("core_arith", "partial_derivative: variable index out of range");
  Poly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] = static_cast<std::uint16_t>(d[var] - 1);
    out.emplace(d, c * Rational(static_cast<long>(m[var])));
  }
  return Poly(p.ring(), std::move(out));
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
  if (!(p.ring() == q.ring())) throw VariableMismatch("divide_exact: variable lists differ");
  if (q.is_zero()) throw UsageError("core_arith", "division by zero polynomial");
  const TermOrder order = TermOrder::grevlex(p.ring().size());
  const auto [lm, lc] = q.leading(order);
  Poly rem = p;
  Poly quot = p.ring().zero();
  while (!rem.is_zero()) {
    const auto [m, c] = rem.leading(order);
    if (!lm.divides(m)) return std::nullopt;
    const Monomial t = m / lm;
    const Rational k = c / lc;
    quot += p.ring().term(t, k);
    rem -= q.mul_term(t, k);
  }
  return quot;
}

Poly embed(const Poly& p, const PolyRing& target, const std::vector<std::size_t>& var_map) {
  if (var_map.size() != p.ring().size()) throw UsageError("core_arith", "embed: map size mismatch");
  Poly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    Monomial t;
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= target.size()) throw UsageError("core_arith", "embed: target index out of range");
      t[var_map[i]] = static_cast<std::uint16_t>(t[var_map[i]] + m[i]);
    }
    auto [it, inserted] = out.try_emplace(t, c);
    if (!inserted) it->second += c;
  }
  return Poly(target, std::move(out));
}

}  // namespace weylkit
