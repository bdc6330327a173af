#pragma once

#include "corequot/partition.hpp"
#include "corequot/polynomial.hpp"

namespace corequot {

// t^nu: variable j raised to the multiplicity of j in nu.
Monomial monomial_of_cycle_type(const Partition& nu);
Partition cycle_type_of_monomial(const Monomial& m);

// S_Y(t) = sum_nu chi_Y(nu) t^nu / (nu_1! nu_2! ...), weighted homogeneous of
// degree |Y|. Results are cached by shape.
GradedPolynomial schur(const Partition& shape);

// S_Y with every even-indexed variable set to zero.
GradedPolynomial reduced_schur(const Partition& shape);

// Coefficients a_lambda with f = sum a_lambda S_lambda, recovered through
// character orthogonality. Requires a weighted-homogeneous input; the zero
// polynomial yields the empty map. Zero coefficients are omitted.
PartitionMap<Rational> schur_expand(const GradedPolynomial& f);

}  // namespace corequot
