#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corequot/numbers.hpp"

namespace corequot {

// Monomial t_{j1}^{e1}·t_{j2}^{e2}·… with indices increasing and exponents
// positive; weighted degree counts deg t_j = j.
class Monomial {
 public:
  Monomial() = default;  // the constant monomial

  static Monomial variable(int index, int exponent = 1);
  // Merges duplicate indices and drops zero exponents; rejects index < 1 and
  // negative exponents.
  static Monomial from_powers(std::vector<std::pair<int, int>> powers);

  const std::vector<std::pair<int, int>>& powers() const { return powers_; }
  int exponent(int index) const;
  int weighted_degree() const;
  bool is_constant() const { return powers_.empty(); }
  bool odd_support() const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return powers_ == other.powers_; }

  std::string str() const;  // "t1^4·t3"; "1" for the constant monomial

 private:
  std::vector<std::pair<int, int>> powers_;
};

// Canonical term order: weighted degree ascending, ties broken by comparing
// the dense exponent vectors lexicographically with the larger one first.
// Iteration and every serialized form follow this order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Q in t_1, t_2, …, graded by deg t_j = j. Zero
// coefficients are never stored; coefficients stay in lowest terms with a
// positive denominator.
class GradedPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  GradedPolynomial() = default;  // zero

  static GradedPolynomial constant(const Rational& value);
  static GradedPolynomial variable(int index);
  static GradedPolynomial term(const Monomial& m, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  // Largest weighted degree among terms; 0 for the zero polynomial.
  int weighted_degree() const;
  bool is_homogeneous() const;  // vacuously true for zero
  bool odd_support() const;

  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  GradedPolynomial& operator*=(const GradedPolynomial& other);
  GradedPolynomial& operator*=(const Rational& scalar);

  GradedPolynomial homogeneous_component(int degree) const;
  // Sets t_2 = t_4 = … = 0.
  GradedPolynomial without_even_variables() const;
  GradedPolynomial derivative(int index) const;

  void add_term(const Monomial& m, const Rational& coeff);

  bool operator==(const GradedPolynomial& other) const { return terms_ == other.terms_; }

  // "1/24·t1^4 + t1·t3"; "0" when zero.
  std::string pretty() const;

 private:
  TermMap terms_;
};

GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b);
GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b);
GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial operator*(GradedPolynomial a, const Rational& scalar);
GradedPolynomial operator*(const Rational& scalar, GradedPolynomial a);
GradedPolynomial operator-(GradedPolynomial a);

}  // namespace corequot
