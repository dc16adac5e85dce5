#pragma once

// Z^n-graded monomial modules of "orthant" type and the graded Koszul
// computations (Ext¹ into such a module, H_1 of the Koszul complex on R).
//
// A model is a sign per variable. The module has K-basis the Laurent
// monomials x^d with d_j >= 0 where the sign is '+' and d_j <= -1 where it is
// '-'; x_j sends x^d to x^{d+e_j} when that stays in the orthant and to 0
// otherwise. "++" is R = K[x,y], "-" is K[x,x^-1]/K[x], "--" is H²_(x,y)(R),
// "-+" is H¹_(x)(K[x,y]).

#include <string>
#include <utility>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/linalg.hpp"
#include "weylkit/polynomial.hpp"

namespace weylkit {

using ZDeg = std::vector<int>;

/// Per-variable closed degree intervals.
struct Window {
  std::vector<std::pair<int, int>> bounds;

  static Window cube(std::size_t n, int lo, int hi);
  std::size_t size() const { return bounds.size(); }
  bool contains(const ZDeg& d) const;
  /// Every degree in the box, lexicographic.
  std::vector<ZDeg> points() const;
  std::string to_string() const;
};

class WindowTooSmall : public ComputationError {
 public:
  WindowTooSmall(const std::string& module, const std::string& what) : ComputationError(module, what) {}
};

class GradedModuleModel {
 public:
  explicit GradedModuleModel(std::string signs);

  static GradedModuleModel polynomial_ring(std::size_t n) { return GradedModuleModel(std::string(n, '+')); }
  /// Top local cohomology of K[x_1..x_n] at the maximal ideal.
  static GradedModuleModel top_local_cohomology(std::size_t n) { return GradedModuleModel(std::string(n, '-')); }

  std::size_t nvars() const { return signs_.size(); }
  const std::string& signs() const { return signs_; }
  bool in_support(const ZDeg& d) const;
  std::size_t piece_dim(const ZDeg& d) const { return in_support(d) ? 1 : 0; }

  /// Fills `out` with the basis of the total-degree-k slice. Returns false
  /// when the slice is not contained in the window (it is then infinite or
  /// cut off by the box).
  bool slice(int k, const Window& w, std::vector<ZDeg>& out) const;

  /// Matrix of multiplication by the homogeneous polynomial a from the
  /// slice `from` to the slice `to` (columns: source basis).
  QMatrix action(const Poly& a, const std::vector<ZDeg>& from, const std::vector<ZDeg>& to) const;
  /// Action of x_j on one basis element; false when it leaves the support.
  bool shift(const ZDeg& d, std::size_t var, ZDeg& out) const;

 private:
  std::string signs_;
};

struct GradedDims {
  std::vector<int> degrees;
  std::vector<long> dims;

  bool all_zero() const;
  long at(int degree) const;
};

/// dim_K Ext¹_R(R/(a), E)_k = dim ker(C¹→C²)_k − rank(C⁰→C¹)_k for the
/// Hom-Koszul cochain complex, at every total degree k whose slices
/// (k, k+deg a_i, k+deg a_i+deg a_j) all lie inside the window.
/// Throws WindowTooSmall when no degree qualifies.
GradedDims ext1_koszul(const std::vector<Poly>& a, const GradedModuleModel& e, const Window& w);

/// dim H_1(a; M)_k of the graded Koszul complex, same window rule with the
/// slices (k, k−deg a_i, k−deg a_i−deg a_j).
GradedDims koszul_h1(const std::vector<Poly>& a, const GradedModuleModel& m, const Window& w);

}  // namespace weylkit
