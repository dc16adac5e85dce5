#include "weylkit/graded.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weylkit {

Window Window::cube(std::size_t n, int lo, int hi) {
  return Window{std::vector<std::pair<int, int>>(n, {lo, hi})};
}

bool Window::contains(const ZDeg& d) const {
  if (d.size() != bounds.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < bounds[i].first || d[i] > bounds[i].second) return false;
  return true;
}

std::vector<ZDeg> Window::points() const {
  std::vector<ZDeg> out;
  for (const auto& [lo, hi] : bounds)
    if (lo > hi) return out;
  ZDeg d(bounds.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = bounds[i].first;
  while (true) {
    out.push_back(d);
    std::size_t i = d.size();
    while (i > 0 && d[i - 1] == bounds[i - 1].second) {
      d[i - 1] = bounds[i - 1].first;
      --i;
    }
    if (i == 0) return out;
    ++d[i - 1];
  }
}

std::string Window::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(bounds[i].first) + ".." + std::to_string(bounds[i].second);
  }
  return s;
}

GradedModuleModel::GradedModuleModel(std::string signs) : signs_(std::move(signs)) {
  if (signs_.empty() || signs_.size() > kMaxVars) throw UsageError("koszul", "model needs 1..8 variables");
  for (char c : signs_)
    if (c != '+' && c != '-') throw UsageError("koszul", "model signs must be '+' or '-'");
}

bool GradedModuleModel::in_support(const ZDeg& d) const {
  if (d.size() != signs_.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (signs_[i] == '+' && d[i] < 0) return false;
    if (signs_[i] == '-' && d[i] > -1) return false;
  }
  return true;
}

bool GradedModuleModel::shift(const ZDeg& d, std::size_t var, ZDeg& out) const {
  out = d;
  ++out[var];
  return in_support(out);
}

bool GradedModuleModel::slice(int k, const Window& w, std::vector<ZDeg>& out) const {
  out.clear();
  const int n = static_cast<int>(signs_.size());
  const int pos = static_cast<int>(std::count(signs_.begin(), signs_.end(), '+'));
  const int neg = n - pos;
  // Empty slices: all '+' needs k >= 0, all '-' needs k <= -n.
  if (neg == 0 && k < 0) return true;
  if (pos == 0 && k > -n) return true;
  if (pos > 0 && neg > 0) return false;  // infinite slice
  if (w.size() != signs_.size()) throw UsageError("koszul", "window dimension does not match the model");
  // Coordinate range over the slice.
  const int lo = pos ? 0 : k + n - 1;
  const int hi = pos ? k : -1;
  for (const auto& [wl, wh] : w.bounds)
    if (lo < wl || hi > wh) return false;
  Window box{std::vector<std::pair<int, int>>(signs_.size(), {lo, hi})};
  for (auto& d : box.points())
    if (std::accumulate(d.begin(), d.end(), 0) == k) out.push_back(std::move(d));
  return true;
}

QMatrix GradedModuleModel::action(const Poly& a, const std::vector<ZDeg>& from, const std::vector<ZDeg>& to) const {
  std::map<ZDeg, Eigen::Index> index;
  for (std::size_t i = 0; i < to.size(); ++i) index.emplace(to[i], static_cast<Eigen::Index>(i));
  QMatrix m = QMatrix::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
  for (std::size_t c = 0; c < from.size(); ++c) {
    for (const auto& [mono, coef] : a.terms()) {
      ZDeg t = from[c];
      for (std::size_t v = 0; v < t.size(); ++v) t[v] += mono[v];
      if (!in_support(t)) continue;
      auto it = index.find(t);
      if (it == index.end()) throw ComputationError("koszul", "action leaves the materialized slice");
      m(it->second, static_cast<Eigen::Index>(c)) += coef;
    }
  }
  return m;
}

bool GradedDims::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](long d) { return d == 0; });
}

long GradedDims::at(int degree) const {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == degree) return dims[i];
  throw UsageError("koszul", "degree " + std::to_string(degree) + " not computed");
}

namespace {

std::vector<int> degrees_of(const std::vector<Poly>& a, std::size_t nvars) {
  if (a.empty()) throw UsageError("koszul", "empty sequence");
  std::vector<int> d;
  for (const auto& p : a) {
    if (p.ring().size() != nvars) throw VariableMismatch("sequence and model have different variable counts");
    if (p.is_zero() || !p.is_homogeneous()) throw UsageError("koszul", "graded Koszul needs nonzero homogeneous elements");
    d.push_back(p.total_degree());
  }
  return d;
}

// Places `block` at (row offset, col offset) of m.
void put(QMatrix& m, Eigen::Index r, Eigen::Index c, const QMatrix& block) {
  if (block.size() > 0) m.block(r, c, block.rows(), block.cols()) = block;
}

Eigen::Index total(const std::vector<std::vector<ZDeg>>& slices) {
  Eigen::Index t = 0;
  for (const auto& s : slices) t += static_cast<Eigen::Index>(s.size());
  return t;
}

std::vector<Eigen::Index> offsets(const std::vector<std::vector<ZDeg>>& slices) {
  std::vector<Eigen::Index> o(slices.size() + 1, 0);
  for (std::size_t i = 0; i < slices.size(); ++i) o[i + 1] = o[i] + static_cast<Eigen::Index>(slices[i].size());
  return o;
}

// Shared driver: `sign` is +1 for the cochain direction (Ext) and −1 for the
// chain direction (Koszul homology).
GradedDims run(const std::vector<Poly>& a, const GradedModuleModel& m, const Window& w, int sign, const char* what) {
  const auto deg = degrees_of(a, m.nvars());
  const std::size_t g = a.size();
  const auto pairs = [&] {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) p.emplace_back(i, j);
    return p;
  }();
  const int maxdeg = *std::max_element(deg.begin(), deg.end());
  int lo = 0, hi = 0;
  for (const auto& [l, h] : w.bounds) {
    lo += l;
    hi += h;
  }
  GradedDims out;
  bool any_nonempty = false;
  for (int k = lo - 2 * maxdeg; k <= hi + 2 * maxdeg; ++k) {
    std::vector<ZDeg> s0;
    std::vector<std::vector<ZDeg>> s1(g), s2(pairs.size());
    bool ok = m.slice(k, w, s0);
    for (std::size_t i = 0; ok && i < g; ++i) ok = m.slice(k + sign * deg[i], w, s1[i]);
    for (std::size_t p = 0; ok && p < pairs.size(); ++p)
      ok = m.slice(k + sign * (deg[pairs[p].first] + deg[pairs[p].second]), w, s2[p]);
    if (!ok) continue;
    const Eigen::Index n1 = total(s1), n2 = total(s2);
    const auto o1 = offsets(s1), o2 = offsets(s2);
    if (n1 > 0) any_nonempty = true;
    // Middle term is C¹ (resp. K_1); `in` maps into it, `outm` maps out of it.
    QMatrix in, outm;
    if (sign > 0) {
      in = QMatrix::Zero(n1, static_cast<Eigen::Index>(s0.size()));
      for (std::size_t i = 0; i < g; ++i) put(in, o1[i], 0, m.action(a[i], s0, s1[i]));
      outm = QMatrix::Zero(n2, n1);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        put(outm, o2[p], o1[j], m.action(a[i], s1[j], s2[p]));
        put(outm, o2[p], o1[i], QMatrix(-m.action(a[j], s1[i], s2[p])));
      }
    } else {
      outm = QMatrix::Zero(static_cast<Eigen::Index>(s0.size()), n1);
      for (std::size_t i = 0; i < g; ++i) put(outm, 0, o1[i], m.action(a[i], s1[i], s0));
      in = QMatrix::Zero(n1, n2);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        put(in, o1[j], o2[p], m.action(a[i], s2[p], s1[j]));
        put(in, o1[i], o2[p], QMatrix(-m.action(a[j], s2[p], s1[i])));
      }
    }
    if (!is_zero<Rational>(QMatrix(outm * in)))
      throw ComputationError("koszul", std::string(what) + ": differentials do not compose to zero");
    const long dim = static_cast<long>(n1 - rank<Rational>(outm) - rank<Rational>(in));
    out.degrees.push_back(k);
    out.dims.push_back(dim);
  }
  if (!any_nonempty)
    throw WindowTooSmall("koszul", std::string(what) + ": no total degree has its slices inside the window " +
                                       w.to_string());
  return out;
}

}  // namespace

GradedDims ext1_koszul(const std::vector<Poly>& a, const GradedModuleModel& e, const Window& w) {
  return run(a, e, w, +1, "ext1");
}

GradedDims koszul_h1(const std::vector<Poly>& a, const GradedModuleModel& m, const Window& w) {
  return run(a, m, w, -1, "koszul H1");
}

}  // namespace weylkit
