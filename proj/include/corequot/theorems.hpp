#pragma once

#include <vector>

#include "corequot/numbers.hpp"
#include "corequot/partition.hpp"

namespace corequot {

// The weight Lambda_r - n·delta; its vectors live in weighted degree
// 2n + r(r+1)/2.
struct Weight {
  int r = 0;
  int n = 0;

  int degree() const { return 2 * n + r * (r + 1) / 2; }
  bool operator==(const Weight& other) const = default;
};

// Weight of the reduced Schur function of Y: r from the 2-core of Y, n the
// total size of the 2-quotient.
Weight weight_of(const Partition& y);

// For each Z1 of n in descending lexicographic order, the partition with
// triplet (K_r; empty, Z1). Length p(n).
std::vector<Partition> basis_for_weight(const Weight& w);

struct RankReport {
  Weight weight;
  int rank = 0;
  Integer expected;  // p(n)
  bool pass = false;
};

// Exact rank of the coefficient matrix of the weight's basis candidates;
// passes iff the rank equals p(n).
RankReport verify_theorem2(const Weight& w);

// Coefficients of S^red_Y over the basis of its weight space, computed two
// ways: `formula` carries the signed LR products, `solved` the exact linear
// solve. Empty vectors mean "not computed on this side".
struct DecompositionReport {
  Partition subject;
  std::vector<Partition> basis;
  std::vector<long long> formula;
  std::vector<Rational> solved;
  bool solvable = false;  // the linear system had a unique solution
  bool match = false;     // both sides computed and identical
};

DecompositionReport theorem3_coefficients(const Partition& y);
DecompositionReport decompose_in_basis(const Partition& y);
DecompositionReport verify_theorem3(const Partition& y);

struct MultiplicityRow {
  int degree = 0;
  Integer weight_sum;  // sum of p(n) over weights of this degree
  Integer odd_count;   // p^odd(degree)
  bool pass = false;
};

struct MultiplicityReport {
  int max_degree = 0;
  std::vector<MultiplicityRow> rows;
  bool pass = false;
};

// Checks sum_{(r,n): 2n + r(r+1)/2 = d} p(n) = p^odd(d) for d <= max_degree.
MultiplicityReport multiplicity_report(int max_degree);

struct GaussReport {
  int order = 0;
  bool pass = false;
  int first_mismatch = -1;  // exponent of the first differing coefficient
  std::vector<Integer> lhs;  // coefficient lists of both truncated series
  std::vector<Integer> rhs;
};

// Truncated-series identity
// (sum_{m in Z} q^{2m^2+m}) · (sum_n p(n) q^{2n}) = phi(q^2)/phi(q).
GaussReport gauss_series_check(int order);

}  // namespace corequot
