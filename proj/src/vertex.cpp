#include "corequot/vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "corequot/linalg.hpp"
#include "corequot/partition.hpp"

namespace corequot {

namespace {

// t^nu for a partition nu read as multiplicities.
Monomial monomial_of_parts(const Partition& nu) {
  std::vector<std::pair<int, int>> powers;
  for (int part : nu.parts()) powers.emplace_back(part, 1);
  return Monomial::from_powers(std::move(powers));
}

void require_odd_polynomial(const GradedPolynomial& f) {
  if (!f.odd_support()) {
    throw std::invalid_argument("polynomial must live in the odd variables t1,t3,t5,...");
  }
}

// The lowering half of the vertex operator: the coefficient of p^{-l} in
// e^{-2·xi(d~,1/p)}, encoded as a polynomial whose variable j stands for
// d/dt_j. It is the image of A_l under t_j -> -(1/j) d_j; all factors
// commute.
GradedPolynomial lowering_operator(int l) {
  GradedPolynomial op;
  const GradedPolynomial raising = exp_xi_coefficient(l);
  for (const auto& [m, c] : raising.terms()) {
    Rational coeff = c;
    for (const auto& [j, e] : m.powers()) {
      Rational factor = make_rational(-1, j);
      for (int k = 0; k < e; ++k) coeff *= factor;
    }
    op.add_term(m, coeff);
  }
  return op;
}

GradedPolynomial apply_diff_operator(const GradedPolynomial& op, const GradedPolynomial& f) {
  GradedPolynomial out;
  for (const auto& [m, c] : op.terms()) {
    GradedPolynomial g = f;
    for (const auto& [j, e] : m.powers()) {
      for (int k = 0; k < e && !g.is_zero(); ++k) g = g.derivative(j);
    }
    if (!g.is_zero()) out += g * c;
  }
  return out;
}

}  // namespace

GradedPolynomial heisenberg_apply(int index, const GradedPolynomial& f) {
  if (index == 0 || index % 2 == 0) {
    throw std::invalid_argument("Heisenberg index must be odd and nonzero");
  }
  require_odd_polynomial(f);
  if (index > 0) return f.derivative(index);
  const int j = -index;
  return GradedPolynomial::variable(j) * f * make_rational(j);
}

GradedPolynomial exp_xi_coefficient(int m) {
  if (m < 0) throw std::invalid_argument("mode index must be non-negative");
  // [p^m] e^{2·xi(t,p)} = sum over odd-part partitions nu of m of
  // 2^{len(nu)} t^nu / prod nu_j!.
  GradedPolynomial out;
  for (const Partition& nu : enumerate_odd_partitions(m)) {
    std::vector<std::pair<int, int>> powers;
    Integer denominator = 1;
    const auto& parts = nu.parts();
    for (size_t i = 0; i < parts.size();) {
      size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      powers.emplace_back(parts[i], static_cast<int>(j - i));
      denominator *= factorial(static_cast<unsigned long>(j - i));
      i = j;
    }
    Integer numerator = integer_pow(Integer(2), static_cast<unsigned long>(nu.length()));
    out.add_term(Monomial::from_powers(std::move(powers)), make_rational(numerator, denominator));
  }
  return out;
}

GradedPolynomial vertex_apply(int k, const GradedPolynomial& f) {
  require_odd_polynomial(f);
  if (f.is_zero()) return {};
  const int degree = f.weighted_degree();
  GradedPolynomial acc;
  for (int m = std::max(0, -k); m + k <= degree; ++m) {
    GradedPolynomial lowered = apply_diff_operator(lowering_operator(m + k), f);
    if (!lowered.is_zero()) acc += exp_xi_coefficient(m) * lowered;
  }
  return acc * make_rational(-1, 2);
}

std::string OperatorRef::str() const {
  return (kind == Kind::heisenberg ? "a_" : "X_") + std::to_string(index);
}

GradedPolynomial apply_operator(const OperatorRef& op, const GradedPolynomial& f) {
  return op.kind == OperatorRef::Kind::heisenberg ? heisenberg_apply(op.index, f)
                                                  : vertex_apply(op.index, f);
}

Rational CommutatorFit::coefficient_on(const std::string& name) const {
  for (const auto& [candidate, value] : combination) {
    if (candidate == name) return value;
  }
  return Rational(0);
}

std::string CommutatorFit::str() const {
  std::string lhs = "[" + op1.str() + ", " + op2.str() + "]";
  if (!consistent) {
    return lhs + " has no fit; witness " + (witness ? witness->str() : std::string("?"));
  }
  std::string rhs;
  for (const auto& [name, value] : combination) {
    if (value == 0) continue;
    if (!rhs.empty()) rhs += " + ";
    rhs += to_string(value) + "·" + name;
  }
  if (rhs.empty()) rhs = "0";
  return lhs + " = " + rhs;
}

CommutatorFit commutator_fit(const OperatorRef& op1, const OperatorRef& op2, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");

  CommutatorFit fit;
  fit.op1 = op1;
  fit.op2 = op2;
  const int target = op1.index + op2.index;
  fit.target_index = target;

  struct Candidate {
    std::string name;
    OperatorRef ref;
    bool identity;
  };
  std::vector<Candidate> candidates;
  if (target % 2 != 0 && target != 0) {
    candidates.push_back({OperatorRef::a(target).str(), OperatorRef::a(target), false});
  }
  candidates.push_back({OperatorRef::x(target).str(), OperatorRef::x(target), false});
  if (target == 0) {
    candidates.push_back({"Id", OperatorRef{}, true});
  }
  const int ncand = static_cast<int>(candidates.size());

  // One row per (test monomial, result monomial); equations accumulate
  // monomial by monomial so an inconsistent fit can name its witness.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  auto solve_current = [&]() {
    RationalMatrix a(static_cast<int>(rows.size()), ncand);
    for (size_t r = 0; r < rows.size(); ++r) {
      for (int c = 0; c < ncand; ++c) a(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    }
    return solve_exact(a, rhs);
  };

  for (int degree = 0; degree <= degree_bound; ++degree) {
    for (const Partition& nu : enumerate_odd_partitions(degree)) {
      const Monomial mono = monomial_of_parts(nu);
      const GradedPolynomial f = GradedPolynomial::term(mono, make_rational(1));

      GradedPolynomial lhs = apply_operator(op1, apply_operator(op2, f)) -
                             apply_operator(op2, apply_operator(op1, f));
      std::vector<GradedPolynomial> images;
      images.reserve(static_cast<size_t>(ncand));
      for (const Candidate& cand : candidates) {
        images.push_back(cand.identity ? f : apply_operator(cand.ref, f));
      }

      // Union of the result monomials, in canonical order.
      GradedPolynomial::TermMap support;
      for (const auto& [m, c] : lhs.terms()) support.emplace(m, 0);
      for (const GradedPolynomial& g : images) {
        for (const auto& [m, c] : g.terms()) support.emplace(m, 0);
      }

      for (const auto& [m, unused] : support) {
        std::vector<Rational> row(static_cast<size_t>(ncand));
        for (int c = 0; c < ncand; ++c) row[static_cast<size_t>(c)] = images[static_cast<size_t>(c)].coefficient(m);
        rows.push_back(std::move(row));
        rhs.push_back(lhs.coefficient(m));
      }

      if (!support.empty() && solve_current().status == SolveStatus::inconsistent) {
        fit.consistent = false;
        fit.witness = mono;
        return fit;
      }
    }
  }

  // An underdetermined system means some candidate acts trivially on every
  // test monomial (degree bound too low to pin it); report zeros there.
  ExactSolve final = solve_current();
  fit.consistent = final.status != SolveStatus::inconsistent;
  fit.fully_determined = final.status == SolveStatus::unique_solution;
  std::vector<Rational> coeffs(static_cast<size_t>(ncand), Rational(0));
  if (final.status == SolveStatus::unique_solution) coeffs = final.solution;
  for (int c = 0; c < ncand; ++c) {
    fit.combination.emplace_back(candidates[static_cast<size_t>(c)].name,
                                 coeffs[static_cast<size_t>(c)]);
  }
  return fit;
}

}  // namespace corequot
