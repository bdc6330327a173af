#include "corequot/vertex.hpp"

#include <doctest.h>

#include "corequot/partition.hpp"

using namespace corequot;

namespace {

GradedPolynomial t(int j) { return GradedPolynomial::variable(j); }
GradedPolynomial one() { return GradedPolynomial::constant(make_rational(1)); }

std::vector<GradedPolynomial> odd_monomials_up_to(int degree_bound) {
  std::vector<GradedPolynomial> out;
  for (int d = 0; d <= degree_bound; ++d) {
    for (const Partition& nu : enumerate_odd_partitions(d)) {
      GradedPolynomial m = one();
      for (int part : nu.parts()) m *= t(part);
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("heisenberg operators") {
  CHECK(heisenberg_apply(1, t(1)) == one());
  CHECK(heisenberg_apply(-1, one()) == t(1));
  CHECK(heisenberg_apply(-3, t(1)) == t(1) * t(3) * make_rational(3));
  CHECK(heisenberg_apply(3, t(1)).is_zero());

  CHECK_THROWS_AS(heisenberg_apply(2, t(1)), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_apply(0, t(1)), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg_apply(1, t(2)), std::invalid_argument);
}

TEST_CASE("raising exponential coefficients") {
  CHECK(exp_xi_coefficient(0) == one());
  CHECK(exp_xi_coefficient(1) == t(1) * make_rational(2));
  CHECK(exp_xi_coefficient(2) == t(1) * t(1) * make_rational(2));

  // m·A_m = 2 sum_{j odd} j t_j A_{m-j}, from d/dp of the exponential.
  for (int m = 1; m <= 12; ++m) {
    GradedPolynomial rhs;
    for (int j = 1; j <= m; j += 2) {
      rhs += t(j) * exp_xi_coefficient(m - j) * make_rational(2 * j);
    }
    CHECK(exp_xi_coefficient(m) * make_rational(m) == rhs);
  }
}

TEST_CASE("vertex modes on the constant") {
  for (int k = 1; k <= 5; ++k) CHECK(vertex_apply(k, one()).is_zero());
  CHECK(vertex_apply(0, one()) == GradedPolynomial::constant(make_rational(-1, 2)));
  CHECK(vertex_apply(-1, one()) == -t(1));
}

TEST_CASE("vertex modes shift homogeneous degree by -k") {
  for (const GradedPolynomial& m : odd_monomials_up_to(6)) {
    for (int k = -3; k <= 3; ++k) {
      const GradedPolynomial image = vertex_apply(k, m);
      if (image.is_zero()) continue;
      CHECK(image.is_homogeneous());
      CHECK(image.weighted_degree() == m.weighted_degree() - k);
      CHECK(image.odd_support());
    }
  }
}

TEST_CASE("heisenberg commutators") {
  const auto monomials = odd_monomials_up_to(6);
  for (int i : {-5, -3, -1, 1, 3, 5}) {
    for (int j : {-5, -3, -1, 1, 3, 5}) {
      for (const GradedPolynomial& m : monomials) {
        const GradedPolynomial bracket =
            heisenberg_apply(i, heisenberg_apply(j, m)) -
            heisenberg_apply(j, heisenberg_apply(i, m));
        if (i + j == 0) {
          CHECK(bracket == m * make_rational(i));
        } else {
          CHECK(bracket.is_zero());
        }
      }
    }
  }
}

TEST_CASE("mixed commutators give shifted vertex modes") {
  const auto monomials = odd_monomials_up_to(6);
  for (int j : {-3, -1, 1, 3}) {
    for (int k = -2; k <= 2; ++k) {
      for (const GradedPolynomial& m : monomials) {
        const GradedPolynomial bracket = heisenberg_apply(j, vertex_apply(k, m)) -
                                         vertex_apply(k, heisenberg_apply(j, m));
        CHECK(bracket == vertex_apply(j + k, m) * make_rational(2));
      }
    }
  }
}

TEST_CASE("commutator fits") {
  const auto aa = commutator_fit(OperatorRef::a(3), OperatorRef::a(-3), 8);
  CHECK(aa.consistent);
  CHECK(aa.fully_determined);
  CHECK(aa.coefficient_on("Id") == 3);
  CHECK(aa.coefficient_on("X_0") == 0);

  const auto zero = commutator_fit(OperatorRef::a(1), OperatorRef::a(3), 8);
  CHECK(zero.consistent);
  for (const auto& [name, coeff] : zero.combination) CHECK(coeff == 0);

  const auto mixed = commutator_fit(OperatorRef::a(1), OperatorRef::x(0), 8);
  CHECK(mixed.consistent);
  CHECK(mixed.fully_determined);
  CHECK(mixed.coefficient_on("X_1") == 2);
  CHECK(mixed.coefficient_on("a_1") == 0);

  // Brackets of two vertex modes close onto the candidate set as well.
  for (const auto& [j, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, -1}, {2, -1}, {1, 1}}) {
    const auto fit = commutator_fit(OperatorRef::x(j), OperatorRef::x(k), 8);
    CHECK(fit.consistent);
    CHECK(fit.fully_determined);
  }

  CHECK_THROWS_AS(commutator_fit(OperatorRef::a(1), OperatorRef::a(1), -1),
                  std::invalid_argument);
}
