#include "weylkit/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "weylkit/errors.hpp"

namespace weylkit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = lead().inverse();
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= inv;
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x = -x;
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly acc(Rational(1)), base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (!a.is_one()) os << a << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[static_cast<std::size_t>(i)] * inv;
    if (f.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = r0.lead().inverse();
  return {r0 * UPoly(inv), s0 * UPoly(inv), t0 * UPoly(inv)};
}

std::vector<std::pair<UPoly, unsigned>> squarefree_factorization(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const UPoly m = f.monic();
  const UPoly dm = m.derivative();
  const UPoly a0 = gcd(m, dm);
  UPoly b = divmod(m, a0).quotient;
  UPoly c = divmod(dm, a0).quotient;
  UPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const UPoly a = gcd(b, d);
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
    ++i;
  }
  return out;
}

namespace {

// ------------------------------------------------------------ arithmetic mod p

using u64 = std::uint64_t;
using Fp = std::vector<u64>;  // low to high, trimmed

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_sub(const Fp& a, const Fp& b, u64 p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Fp fp_mul(const Fp& a, const Fp& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

std::pair<Fp, Fp> fp_divmod(Fp a, const Fp& b, u64 p) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  Fp q(a.size() - db, 0);
  const u64 inv = invmod(b.back(), p);
  for (std::size_t i = a.size(); i-- > db;) {
    const u64 f = mulmod(a[i], inv, p);
    if (f == 0) continue;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(f, b[j], p)) % p;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Fp fp_monic(Fp a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (auto& x : a) x = mulmod(x, inv, p);
  return a;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
  while (!b.empty()) {
    Fp r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s with s*a ≡ g (mod b), where g = gcd(a, b) monic.
Fp fp_inverse_mod(const Fp& a, const Fp& b, u64 p) {
  Fp r0 = b, r1 = fp_divmod(a, b, p).second, s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw ComputationError("injective_structure", "modular factors are not coprime");
  const u64 inv = invmod(r0[0], p);
  for (auto& x : s0) x = mulmod(x, inv, p);
  return s0;
}

Fp fp_powmod_x(u64 e, const Fp& f, u64 p) {
  Fp result{1}, base{0, 1};
  base = fp_divmod(base, f, p).second;
  while (e) {
    if (e & 1u) result = fp_divmod(fp_mul(result, base, p), f, p).second;
    base = fp_divmod(fp_mul(base, base, p), f, p).second;
    e >>= 1u;
  }
  return result;
}

// Kernel of a square matrix over F_p, as row vectors.
std::vector<Fp> fp_kernel(std::vector<std::vector<u64>> m, u64 p) {
  const std::size_t n = m.size();
  std::vector<long> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = row; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    const u64 inv = invmod(m[row][col], p);
    for (auto& x : m[row]) x = mulmod(x, inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] = (m[r][c] + p - mulmod(f, m[row][c], p)) % p;
    }
    pivot_col_of_row.push_back(static_cast<long>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<Fp> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Fp v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = (p - m[r][free]) % p;
    basis.push_back(v);
  }
  return basis;
}

// Berlekamp: monic irreducible factors of a monic squarefree f over F_p.
std::vector<Fp> berlekamp(const Fp& f, u64 p) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return {f};
  // Row i of Q holds x^{ip} mod f; we need v with v·(Q − I) = 0.
  std::vector<std::vector<u64>> qt(n, std::vector<u64>(n, 0));
  const Fp xp = fp_powmod_x(p, f, p);
  Fp cur{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) qt[j][i] = j < cur.size() ? cur[j] : 0;
    qt[i][i] = (qt[i][i] + p - 1) % p;
    cur = fp_divmod(fp_mul(cur, xp, p), f, p).second;
  }
  const auto kernel = fp_kernel(qt, p);
  const std::size_t r = kernel.size();
  std::vector<Fp> factors{f};
  for (const auto& v0 : kernel) {
    if (factors.size() == r) break;
    Fp v = v0;
    trim(v);
    if (v.size() <= 1) continue;
    std::vector<Fp> next;
    for (const auto& u : factors) {
      if (u.size() <= 2) {
        next.push_back(u);
        continue;
      }
      std::vector<Fp> parts;
      for (u64 s = 0; s < p; ++s) {
        Fp vs = v;
        vs[0] = (vs[0] + p - s) % p;
        trim(vs);
        Fp g = fp_gcd(u, vs, p);
        if (g.size() > 1) parts.push_back(g);
      }
      if (parts.empty()) parts.push_back(u);
      for (auto& g : parts) next.push_back(std::move(g));
    }
    factors = std::move(next);
  }
  if (factors.size() != r) throw ComputationError("injective_structure", "Berlekamp split incomplete");
  return factors;
}

// ------------------------------------------------------------ integer side

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly z_mod(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_nonneg(a[i], m);
  trim(r);
  return r;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = ::gcd(g, c);
  return g;
}

ZPoly primitive_part(ZPoly a) {
  mpz_class g = content(a);
  if (!a.empty() && a.back() < 0) g = -g;
  if (g != 0 && g != 1)
    for (auto& c : a) c /= g;
  return a;
}

// Exact quotient a / b in Z[x], or nullopt.
std::optional<ZPoly> z_divide(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    if (a[i] % b.back() != 0) return std::nullopt;
    const mpz_class f = a[i] / b.back();
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

Fp to_fp(const ZPoly& a, u64 p) {
  Fp r(a.size());
  const mpz_class mp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_nonneg(a[i], mp).get_ui();
  trim(r);
  return r;
}

ZPoly from_fp(const Fp& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Factors of a primitive squarefree f with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  const mpz_class lc = f.back();
  const ZPoly df = [&] {
    ZPoly d(n);
    for (std::size_t i = 1; i <= n; ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    return d;
  }();

  // Pick the prime with the fewest modular factors among a handful of good ones.
  u64 best_p = 0;
  std::vector<Fp> best;
  int good = 0;
  for (u64 p = 3; good < 5 && p < 2000; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mod_nonneg(lc, mpz_class(static_cast<unsigned long>(p))) == 0) continue;
    const Fp fp = to_fp(f, p);
    if (fp_gcd(fp, to_fp(df, p), p).size() != 1) continue;
    ++good;
    auto facs = berlekamp(fp_monic(fp, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw ComputationError("injective_structure", "no suitable prime for factorization");
  if (best.size() == 1) return {f};
  const u64 p = best_p;
  const std::size_t r = best.size();

  // Coefficient bound for factors (generous form of Mignotte's bound).
  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(::abs(c)));
  mpz_class bound = maxc * static_cast<unsigned long>(n + 1);
  bound <<= static_cast<mp_bitcnt_t>(n);
  const mpz_class need = 2 * ::abs(lc) * bound + 1;
  const mpz_class mp(static_cast<unsigned long>(p));
  mpz_class modulus = mp;
  unsigned k = 1;
  while (modulus < need) {
    modulus *= mp;
    ++k;
  }

  // Partial-fraction cofactors s_i with Σ s_i ∏_{l≠i} g_l ≡ 1 (mod p).
  std::vector<Fp> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    Fp others{1};
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) others = fp_mul(others, best[l], p);
    s[i] = fp_inverse_mod(others, best[i], p);
  }
  const u64 lc_inv = invmod(mod_nonneg(lc, mp).get_ui(), p);

  // Linear Hensel lifting: keep f ≡ lc·∏ g_i (mod p^j), g_i monic.
  std::vector<ZPoly> g(r);
  for (std::size_t i = 0; i < r; ++i) g[i] = from_fp(best[i]);
  mpz_class pj = mp;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly prod{lc};
    for (const auto& gi : g) prod = z_mul(prod, gi);
    ZPoly e(std::max(f.size(), prod.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const mpz_class a = i < f.size() ? f[i] : mpz_class(0);
      const mpz_class b = i < prod.size() ? prod[i] : mpz_class(0);
      e[i] = (a - b) / pj;
    }
    trim(e);
    Fp ebar = to_fp(e, p);
    for (auto& x : ebar) x = mulmod(x, lc_inv, p);
    for (std::size_t i = 0; i < r; ++i) {
      const Fp delta = fp_divmod(fp_mul(ebar, s[i], p), best[i], p).second;
      for (std::size_t t = 0; t < delta.size(); ++t) g[i][t] += pj * static_cast<unsigned long>(delta[t]);
    }
    pj *= mp;
  }

  // Recombination over subsets of increasing size.
  const mpz_class half = modulus / 2;
  auto symmetric = [&](ZPoly a) {
    for (auto& c : a) {
      c = mod_nonneg(c, modulus);
      if (c > half) c -= modulus;
    }
    trim(a);
    return a;
  };
  std::vector<ZPoly> out;
  std::vector<std::size_t> remaining(r);
  std::iota(remaining.begin(), remaining.end(), 0);
  ZPoly cur = f;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ZPoly cand{cur.back()};
      for (auto i : idx) cand = z_mod(z_mul(cand, g[remaining[i]]), modulus);
      cand = primitive_part(symmetric(cand));
      if (auto q = z_divide(cur, cand)) {
        out.push_back(cand);
        cur = *q;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < remaining.size(); ++t)
          if (std::find(idx.begin(), idx.end(), t) == idx.end()) rest.push_back(remaining[t]);
        remaining = std::move(rest);
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == remaining.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t t = pos; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
    if (!found) ++size;
  }
  if (cur.size() > 1) out.push_back(primitive_part(cur));
  return out;
}

ZPoly to_integer_primitive(const UPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.denominator());
  ZPoly z(f.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Rational& c = f.coeffs()[i];
    z[i] = c.numerator() * (den / c.denominator());
  }
  return primitive_part(z);
}

UPoly from_integer(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& x : z) c.emplace_back(x);
  return UPoly(std::move(c)).monic();
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ai = a.coeff(static_cast<std::size_t>(i)), bi = b.coeff(static_cast<std::size_t>(i));
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> factor(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  for (const auto& [part, mult] : squarefree_factorization(f)) {
    if (part.degree() == 1) {
      out.emplace_back(part, mult);
      continue;
    }
    for (const auto& z : zassenhaus(to_integer_primitive(part))) out.emplace_back(from_integer(z), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() <= 0) return false;
  const auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

QMatrix evaluate(const UPoly& p, const QMatrix& m) {
  QMatrix acc = QMatrix::Zero(m.rows(), m.cols());
  const QMatrix id = QMatrix::Identity(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) acc = QMatrix(acc * m) + p.coeff(static_cast<std::size_t>(i)) * id;
  return acc;
}

namespace {

QVector apply_poly(const UPoly& p, const QMatrix& m, const QVector& v) {
  QVector acc = QVector::Zero(v.size());
  for (int i = p.degree(); i >= 0; --i) acc = QVector(m * acc) + p.coeff(static_cast<std::size_t>(i)) * v;
  return acc;
}

// Minimal polynomial of m relative to the vector v (Krylov dependency).
UPoly local_minpoly(const QMatrix& m, const QVector& v) {
  std::vector<QVector> rows;
  std::vector<Eigen::Index> pivots;
  std::vector<std::vector<Rational>> combos;
  QVector w = v;
  for (std::size_t k = 0;; ++k) {
    QVector red = w;
    std::vector<Rational> combo(k + 1);
    combo[k] = Rational(1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational f = red(pivots[i]);
      if (f.is_zero()) continue;
      red -= f * rows[i];
      for (std::size_t j = 0; j < combos[i].size(); ++j) combo[j] -= f * combos[i][j];
    }
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < red.size(); ++i)
      if (!red(i).is_zero()) { piv = i; break; }
    if (piv < 0) return UPoly(std::move(combo));
    const Rational inv = red(piv).inverse();
    red *= inv;
    for (auto& c : combo) c *= inv;
    // Keep earlier rows reduced at the new pivot.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational f = rows[i](piv);
      if (f.is_zero()) continue;
      rows[i] -= f * red;
      combos[i].resize(k + 1);
      for (std::size_t j = 0; j <= k; ++j) combos[i][j] -= f * combo[j];
    }
    rows.push_back(red);
    pivots.push_back(piv);
    combos.push_back(combo);
    w = m * w;
  }
}

}  // namespace

UPoly minimal_polynomial(const QMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("injective_structure", "minimal polynomial of a non-square matrix");
  UPoly acc(Rational(1));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    QVector e = QVector::Zero(m.rows());
    e(j) = Rational(1);
    if (is_zero<Rational>(QMatrix(apply_poly(acc, m, e)))) continue;
    const UPoly mj = local_minpoly(m, e);
    acc = divmod(acc * mj, gcd(acc, mj)).quotient.monic();
  }
  return acc;
}

Poly to_poly(const UPoly& p, const PolyRing& ring, std::size_t var) {
  Poly out = ring.zero();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!p.coeffs()[i].is_zero()) out += ring.term(Monomial::unit(var, static_cast<unsigned>(i)), p.coeffs()[i]);
  return out;
}

std::optional<UPoly> from_poly(const Poly& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [m, coef] : p.terms()) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (i != var && m[i] != 0) return std::nullopt;
    if (c.size() <= m[var]) c.resize(m[var] + 1u);
    c[m[var]] = coef;
  }
  return UPoly(std::move(c));
}

std::vector<UPoly> invariant_factors(std::vector<std::vector<UPoly>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<UPoly> out;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      // Smallest-degree nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (!m[i][j].is_zero() && (pr == rows || m[i][j].degree() < m[pr][pc].degree())) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return out;
      std::swap(m[k], m[pr]);
      for (auto& row : m) std::swap(row[k], row[pc]);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k].is_zero()) continue;
        const UPoly q = divmod(m[i][k], m[k][k]).quotient;
        for (std::size_t j = k; j < cols; ++j) m[i][j] = m[i][j] - q * m[k][j];
        if (!m[i][k].is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j].is_zero()) continue;
        const UPoly q = divmod(m[k][j], m[k][k]).quotient;
        for (std::size_t i = k; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][k];
        if (!m[k][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row k and go again.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < rows && divides_all; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!(m[i][j] % m[k][k]).is_zero()) {
            for (std::size_t c = k; c < cols; ++c) m[k][c] = m[k][c] + m[i][c];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    out.push_back(m[k][k].monic());
  }
  return out;
}

}  // namespace weylkit
