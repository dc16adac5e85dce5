#include "weylkit/groebner.hpp"

#include <algorithm>
#include <set>

#include "weylkit/errors.hpp"

namespace weylkit {
namespace {

struct Term {
  Monomial m;
  Rational c;
};

// Terms in ascending order; the leading term sits at the back.
using Terms = std::vector<Term>;

Terms to_terms(const Poly& p, const TermOrder& order) {
  Terms t;
  t.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) t.push_back({m, c});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.less(a.m, b.m); });
  return t;
}

Poly from_terms(const Terms& t, const PolyRing& ring) {
  Poly::TermMap map;
  for (const auto& [m, c] : t) map.emplace(m, c);
  return Poly(ring, std::move(map));
}

// f - c * shift * g
Terms sub_scaled(const Terms& f, const Rational& c, const Monomial& shift, const Terms& g,
                 const TermOrder& order) {
  Terms out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    const Monomial gm = g[j].m * shift;
    if (i == f.size()) {
      out.push_back({gm, -(c * g[j].c)});
      ++j;
      continue;
    }
    const auto cmp = order.compare(f[i].m, gm);
    if (cmp < 0) {
      out.push_back(f[i++]);
    } else if (cmp > 0) {
      out.push_back({gm, -(c * g[j].c)});
      ++j;
    } else {
      Rational v = f[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  const Rational inv = t.back().c.inverse();
  for (auto& term : t) term.c *= inv;
}

// Full reduction of f modulo the (monic) list g.
Terms reduce(Terms f, const std::vector<Terms>& g, const TermOrder& order, std::size_t skip = SIZE_MAX) {
  Terms rem;
  while (!f.empty()) {
    const Term lead = f.back();
    const Terms* divisor = nullptr;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == skip || g[k].empty()) continue;
      if (g[k].back().m.divides(lead.m)) {
        divisor = &g[k];
        break;
      }
    }
    if (divisor) {
      f = sub_scaled(f, lead.c / divisor->back().c, lead.m / divisor->back().m, *divisor, order);
    } else {
      rem.push_back(lead);
      f.pop_back();
    }
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

Terms s_polynomial(const Terms& a, const Terms& b, const TermOrder& order) {
  const Monomial l = lcm(a.back().m, b.back().m);
  // Both monic: S = (l/LM a) a - (l/LM b) b.
  Terms left;
  left.reserve(a.size());
  const Monomial sa = l / a.back().m;
  for (const auto& t : a) left.push_back({t.m * sa, t.c});
  return sub_scaled(left, Rational(1), l / b.back().m, b, order);
}

bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

std::vector<Terms> buchberger(std::vector<Terms> basis, const TermOrder& order) {
  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_l = lcm(basis[best->first].back().m, basis[best->second].back().m);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(basis[it->first].back().m, basis[it->second].back().m);
      if (order.less(l, best_l)) {
        best = it;
        best_l = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& mi = basis[i].back().m;
    const Monomial& mj = basis[j].back().m;
    if (coprime(mi, mj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (basis[k].back().m.divides(best_l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    Terms h = reduce(s_polynomial(basis[i], basis[j], order), basis, order);
    if (h.empty()) continue;
    make_monic(h);
    if (h.back().m.is_one()) return {h};
    basis.push_back(std::move(h));
    const std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }
  return basis;
}

std::vector<Terms> reduce_basis(std::vector<Terms> g, const TermOrder& order) {
  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[i].back().m;
      const Monomial& b = g[j].back().m;
      if (b.divides(a) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Term lead = minimal[i].back();
    Terms tail(minimal[i].begin(), minimal[i].end() - 1);
    Terms reduced = reduce(std::move(tail), minimal, order, i);
    reduced.push_back(lead);
    minimal[i] = std::move(reduced);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return order.less(b.back().m, a.back().m); });
  return minimal;
}

void check_order(const PolyRing& ring, const TermOrder& order) {
  if (order.nvars() != ring.size()) throw UsageError("core_arith", "term order / ring size mismatch");
}

PolyRing with_eliminant(const PolyRing& ring) {
  std::vector<std::string> names{"_t"};
  for (const auto& n : ring.names()) names.push_back(n);
  return PolyRing(std::move(names));
}

}  // namespace

// --------------------------------------------------------------------- Ideal

Ideal::Ideal(PolyRing ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (!(g.ring() == ring_)) throw VariableMismatch("ideal generator over a different ring");
}

Ideal::Ideal(std::vector<Poly> generators)
    : ring_(generators.empty() ? throw UsageError("core_arith", "empty generator list")
                               : generators.front().ring()) {
  for (const auto& g : generators)
    if (!(g.ring() == ring_)) throw VariableMismatch("ideal generator over a different ring");
  generators_ = std::move(generators);
}

bool Ideal::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Poly& p) { return p.is_zero(); });
}

Ideal groebner(const Ideal& ideal, const TermOrder& order) {
  check_order(ideal.ring(), order);
  Ideal out = ideal;
  if (ideal.cached_ && ideal.cached_->order == order) return out;
  std::vector<Terms> input;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    Terms t = to_terms(g, order);
    make_monic(t);
    input.push_back(std::move(t));
  }
  std::vector<Terms> reduced = input.empty() ? input : reduce_basis(buchberger(std::move(input), order), order);
  GroebnerBasis gb{order, {}};
  for (const auto& t : reduced) gb.elements.push_back(from_terms(t, ideal.ring()));
  out.cached_ = std::move(gb);
  return out;
}

Ideal groebner(const Ideal& ideal) { return groebner(ideal, TermOrder::grevlex(ideal.ring().size())); }

GroebnerBasis basis_of(const Ideal& ideal, const TermOrder& order) {
  if (ideal.cached_basis() && ideal.cached_basis()->order == order) return *ideal.cached_basis();
  return *groebner(ideal, order).cached_basis();
}

GroebnerBasis basis_of(const Ideal& ideal) { return basis_of(ideal, TermOrder::grevlex(ideal.ring().size())); }

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (gb.elements.empty()) return f;
  if (!(f.ring() == gb.elements.front().ring())) throw VariableMismatch("normal_form: ring mismatch");
  std::vector<Terms> g;
  g.reserve(gb.elements.size());
  for (const auto& e : gb.elements) g.push_back(to_terms(e, gb.order));
  return from_terms(reduce(to_terms(f, gb.order), g, gb.order), f.ring());
}

bool ideal_member(const Poly& f, const Ideal& ideal) {
  if (!(f.ring() == ideal.ring())) throw VariableMismatch("ideal_member: ring mismatch");
  if (f.is_zero()) return true;
  return normal_form(f, basis_of(ideal)).is_zero();
}

bool contains(const Ideal& outer, const Ideal& inner) {
  const GroebnerBasis gb = basis_of(outer);
  for (const auto& g : inner.generators())
    if (!g.is_zero() && !normal_form(g, gb).is_zero()) return false;
  return true;
}

bool same_ideal(const Ideal& a, const Ideal& b) { return contains(a, b) && contains(b, a); }

bool is_proper(const Ideal& ideal) { return !ideal_member(ideal.ring().one(), ideal); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw VariableMismatch("ideal_sum: ring mismatch");
  std::vector<Poly> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw VariableMismatch("ideal_product: ring mismatch");
  std::vector<Poly> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) {
      Poly r = p * q;
      if (!r.is_zero()) g.push_back(std::move(r));
    }
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& a, unsigned e) {
  Ideal result(a.ring(), {a.ring().one()});
  const Ideal base(a.ring(), basis_of(a).elements);
  for (unsigned k = 0; k < e; ++k) result = Ideal(a.ring(), basis_of(ideal_product(result, base)).elements);
  return result;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw VariableMismatch("intersect: ring mismatch");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const std::size_t n = a.ring().size();
  const PolyRing ext = with_eliminant(a.ring());
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  const Poly t = ext.var(0);
  const Poly one_minus_t = ext.one() - t;
  std::vector<Poly> gens;
  for (const auto& g : a.generators())
    if (!g.is_zero()) gens.push_back(t * embed(g, ext, shift));
  for (const auto& g : b.generators())
    if (!g.is_zero()) gens.push_back(one_minus_t * embed(g, ext, shift));
  const GroebnerBasis gb = basis_of(Ideal(ext, std::move(gens)), TermOrder::elimination(n + 1, 1));
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Poly> out;
  for (const auto& g : gb.elements)
    if (g.degree_in(0) == 0) out.push_back(embed(g, a.ring(), back));
  return groebner(Ideal(a.ring(), std::move(out)));
}

Ideal ideal_quotient(const Ideal& ideal, const Poly& f) {
  if (!(f.ring() == ideal.ring())) throw VariableMismatch("ideal_quotient: ring mismatch");
  if (f.is_zero()) throw UsageError("core_arith", "ideal_quotient by the zero polynomial");
  if (ideal.is_zero()) return Ideal(ideal.ring());
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Poly> out;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q) throw ComputationError("core_arith", "ideal_quotient: intersection element not divisible");
    out.push_back(std::move(*q));
  }
  return groebner(Ideal(ideal.ring(), std::move(out)));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    if (g.is_zero()) continue;
    Ideal q = ideal_quotient(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return Ideal(ideal.ring(), {ideal.ring().one()});
  return *acc;
}

SaturationResult saturate(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw UsageError("core_arith", "saturation by the zero ideal");
  Ideal current = groebner(ideal);
  for (int step = 0; step < kSaturationCap; ++step) {
    Ideal next = groebner(ideal_quotient(current, by));
    if (contains(current, next)) return {current, step};
    current = std::move(next);
  }
  throw ComputationError("core_arith", "saturation did not stabilize within " +
                                           std::to_string(kSaturationCap) + " steps");
}

Ideal saturation(const Ideal& ideal, const Ideal& by) { return saturate(ideal, by).ideal; }

namespace {

std::optional<std::vector<unsigned>> pure_power_bounds(const GroebnerBasis& gb, std::size_t n) {
  std::vector<unsigned> bound(n, 0);
  std::vector<bool> found(n, false);
  for (const auto& g : gb.elements) {
    const Monomial lm = g.leading(gb.order).first;
    if (lm.is_one()) return std::vector<unsigned>(n, 0);
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i]) {
        ++support;
        var = i;
      }
    if (support == 1 && (!found[var] || lm[var] < bound[var])) {
      found[var] = true;
      bound[var] = lm[var];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!found[i]) return std::nullopt;
  return bound;
}

}  // namespace

bool is_zero_dimensional(const Ideal& ideal, const TermOrder& order) {
  return pure_power_bounds(basis_of(ideal, order), ideal.ring().size()).has_value();
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, const TermOrder& order) {
  const GroebnerBasis gb = basis_of(ideal, order);
  const std::size_t n = ideal.ring().size();
  const auto bounds = pure_power_bounds(gb, n);
  if (!bounds) {
    for (std::size_t i = 0; i < n; ++i) {
      bool has = false;
      for (const auto& g : gb.elements) {
        const Monomial lm = g.leading(gb.order).first;
        if (lm[i] > 0 && lm.degree() == lm[i]) has = true;
      }
      if (!has)
        throw NotZeroDimensional("variable " + ideal.ring().name(i) +
                                 " has no pure power among leading terms");
    }
    throw NotZeroDimensional("ideal is not zero-dimensional");
  }
  std::vector<Monomial> lms;
  for (const auto& g : gb.elements) lms.push_back(g.leading(gb.order).first);
  std::vector<Monomial> out;
  if (std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); })) return out;
  Monomial cur;
  // Odometer over the box [0, bound_i).
  while (true) {
    if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.divides(cur); }))
      out.push_back(cur);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (cur[i] + 1u < (*bounds)[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

}  // namespace weylkit
