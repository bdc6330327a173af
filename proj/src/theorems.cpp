#include "corequot/theorems.hpp"

#include <vector>

#include "corequot/characters.hpp"
#include "corequot/linalg.hpp"
#include "corequot/littlewood_richardson.hpp"
#include "corequot/schur.hpp"
#include "corequot/series.hpp"

namespace corequot {

namespace {

// Monomials spanning the odd-variable polynomials of weighted degree d, in
// the canonical listing order (descending lexicographic cycle types).
std::vector<Monomial> odd_monomials(int degree) {
  std::vector<Monomial> out;
  for (const Partition& nu : enumerate_odd_partitions(degree)) {
    out.push_back(monomial_of_cycle_type(nu));
  }
  return out;
}

}  // namespace

Weight weight_of(const Partition& y) {
  Triplet t = two_quotient_triplet(y);
  return Weight{t.core.length(), t.quotient0.size() + t.quotient1.size()};
}

std::vector<Partition> basis_for_weight(const Weight& w) {
  std::vector<Partition> out;
  const Partition core = staircase(w.r);
  for (const Partition& z1 : enumerate_partitions(w.n)) {
    out.push_back(from_triplet(Triplet{core, Partition{}, z1}));
  }
  return out;
}

RankReport verify_theorem2(const Weight& w) {
  RankReport report;
  report.weight = w;
  report.expected = count_partitions(w.n);

  const std::vector<Partition> basis = basis_for_weight(w);
  const std::vector<Monomial> monomials = odd_monomials(w.degree());
  RationalMatrix matrix(static_cast<int>(basis.size()), static_cast<int>(monomials.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    const GradedPolynomial f = reduced_schur(basis[i]);
    for (size_t j = 0; j < monomials.size(); ++j) {
      matrix(static_cast<int>(i), static_cast<int>(j)) = f.coefficient(monomials[j]);
    }
  }
  report.rank = exact_rank(matrix);
  report.pass = Integer(report.rank) == report.expected;
  return report;
}

DecompositionReport theorem3_coefficients(const Partition& y) {
  DecompositionReport report;
  report.subject = y;

  const Triplet t = two_quotient_triplet(y);
  const Weight w{t.core.length(), t.quotient0.size() + t.quotient1.size()};
  report.basis = basis_for_weight(w);

  const Partition q0_transposed = conjugate(t.quotient0);
  const long long front =
      ((t.quotient0.size() % 2 == 0) ? 1 : -1) * static_cast<long long>(two_sign(y));
  const std::vector<Partition> z1s = enumerate_partitions(w.n);
  for (size_t i = 0; i < z1s.size(); ++i) {
    const long long lr = lr_coefficient(z1s[i], q0_transposed, t.quotient1);
    report.formula.push_back(front * lr * two_sign(report.basis[i]));
  }
  return report;
}

DecompositionReport decompose_in_basis(const Partition& y) {
  DecompositionReport report;
  report.subject = y;

  const Weight w = weight_of(y);
  report.basis = basis_for_weight(w);
  const std::vector<Monomial> monomials = odd_monomials(w.degree());

  RationalMatrix matrix(static_cast<int>(monomials.size()), static_cast<int>(report.basis.size()));
  for (size_t j = 0; j < report.basis.size(); ++j) {
    const GradedPolynomial f = reduced_schur(report.basis[j]);
    for (size_t i = 0; i < monomials.size(); ++i) {
      matrix(static_cast<int>(i), static_cast<int>(j)) = f.coefficient(monomials[i]);
    }
  }
  const GradedPolynomial subject = reduced_schur(y);
  std::vector<Rational> rhs;
  rhs.reserve(monomials.size());
  for (const Monomial& m : monomials) rhs.push_back(subject.coefficient(m));

  ExactSolve solve = solve_exact(matrix, rhs);
  report.solvable = solve.status == SolveStatus::unique_solution;
  if (report.solvable) report.solved = std::move(solve.solution);
  return report;
}

DecompositionReport verify_theorem3(const Partition& y) {
  DecompositionReport report = decompose_in_basis(y);
  report.formula = theorem3_coefficients(y).formula;
  report.match = report.solvable && report.solved.size() == report.formula.size();
  if (report.match) {
    for (size_t i = 0; i < report.formula.size(); ++i) {
      if (make_rational(static_cast<long>(report.formula[i])) != report.solved[i]) {
        report.match = false;
        break;
      }
    }
  }
  return report;
}

MultiplicityReport multiplicity_report(int max_degree) {
  MultiplicityReport report;
  report.max_degree = max_degree;
  report.pass = true;
  for (int d = 0; d <= max_degree; ++d) {
    MultiplicityRow row;
    row.degree = d;
    for (int r = 0; r * (r + 1) / 2 <= d; ++r) {
      const int rest = d - r * (r + 1) / 2;
      if (rest % 2 == 0) row.weight_sum += count_partitions(rest / 2);
    }
    row.odd_count = count_odd_partitions(d);
    row.pass = row.weight_sum == row.odd_count;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

GaussReport gauss_series_check(int order) {
  GaussReport report;
  report.order = order;

  // Degrees of the maximal weight vectors: 2m^2 + m over m in Z.
  IntegerSeries staircase_degrees(order);
  for (int m = 0;; ++m) {
    const long long up = 2LL * m * m + m;
    const long long down = 2LL * m * m - m;
    if (up > order && down > order) break;
    if (up <= order) staircase_degrees.at(static_cast<int>(up)) += 1;
    if (m > 0 && down <= order) staircase_degrees.at(static_cast<int>(down)) += 1;
  }

  IntegerSeries multiplicities(order);
  for (int n = 0; 2 * n <= order; ++n) multiplicities.at(2 * n) = count_partitions(n);

  const IntegerSeries lhs = series_mul(staircase_degrees, multiplicities);
  const IntegerSeries rhs = series_div(phi_series(2, order), phi_series(1, order));

  report.pass = true;
  for (int i = 0; i <= order; ++i) {
    report.lhs.push_back(lhs.at(i));
    report.rhs.push_back(rhs.at(i));
    if (report.pass && lhs.at(i) != rhs.at(i)) {
      report.pass = false;
      report.first_mismatch = i;
    }
  }
  return report;
}

}  // namespace corequot
