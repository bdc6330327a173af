#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corequot/polynomial.hpp"

namespace corequot {

// a_j on V = C[t1,t3,t5,...]: d/dt_j for positive odd j, multiplication by
// |j|·t_{|j|} for negative odd j. The index must be odd and nonzero, and f
// must live in the odd variables.
GradedPolynomial heisenberg_apply(int index, const GradedPolynomial& f);

// A_m: the coefficient of p^m in e^{2·xi(t,p)}, xi(t,p) = sum_{j odd} t_j p^j.
// Weighted homogeneous of degree m.
GradedPolynomial exp_xi_coefficient(int m);

// X_k f for X(p) = -(1/2) e^{2·xi(t,p)} e^{-2·xi(d~,1/p)} = sum_k X_k p^{-k}.
// The lowering factor annihilates degrees below its order, so the mode sum is
// finite and the result is exact; on homogeneous input the degree shifts by
// exactly -k.
GradedPolynomial vertex_apply(int k, const GradedPolynomial& f);

// Names an operator drawn from {a_j, X_k} for commutator reports.
struct OperatorRef {
  enum class Kind { heisenberg, vertex_mode };
  Kind kind = Kind::heisenberg;
  int index = 0;

  static OperatorRef a(int j) { return {Kind::heisenberg, j}; }
  static OperatorRef x(int k) { return {Kind::vertex_mode, k}; }

  std::string str() const;
};

GradedPolynomial apply_operator(const OperatorRef& op, const GradedPolynomial& f);

// Exact fit of [op1, op2] against the degree-matched candidates
// {a_{j+k} (odd, nonzero), X_{j+k}, Id (when j+k = 0)} over every monomial of
// degree <= degree_bound. Inconsistency is reported with the first witness
// monomial rather than thrown.
struct CommutatorFit {
  OperatorRef op1;
  OperatorRef op2;
  int target_index = 0;
  bool consistent = false;
  bool fully_determined = false;
  std::vector<std::pair<std::string, Rational>> combination;
  std::optional<Monomial> witness;

  // Coefficient on a named candidate ("a_3", "X_-1", "Id"); 0 if absent.
  Rational coefficient_on(const std::string& name) const;
  std::string str() const;
};

CommutatorFit commutator_fit(const OperatorRef& op1, const OperatorRef& op2, int degree_bound);

}  // namespace corequot
