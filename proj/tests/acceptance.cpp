// Acceptance suite: each criterion prints one PASS/FAIL line and the binary
// exits nonzero if any fails. Time budgets are part of the criteria and are
// enforced.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corequot/characters.hpp"
#include "corequot/littlewood_richardson.hpp"
#include "corequot/partition.hpp"
#include "corequot/schur.hpp"
#include "corequot/theorems.hpp"
#include "corequot/vertex.hpp"
#include "oracles.hpp"

using namespace corequot;

namespace {

Partition P(const std::vector<int>& parts) { return make_partition(parts); }

GradedPolynomial term(std::vector<std::pair<int, int>> powers, long num, long den = 1) {
  return GradedPolynomial::term(Monomial::from_powers(std::move(powers)),
                                make_rational(num, den));
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> all;
  for (int n = 0; n <= max_size; ++n) {
    for (const Partition& p : enumerate_partitions(n)) all.push_back(p);
  }
  return all;
}

struct Criterion {
  int id;
  std::string label;
  double budget_ms;
  std::function<bool(std::string&)> run;
};

bool example_reproduction(std::string& detail) {
  const Partition y = P({4, 3, 1, 1});
  if (beta_set(y, 4).entries != std::vector<int>{7, 5, 2, 1}) {
    detail = "beta-set mismatch";
    return false;
  }
  const Triplet t = two_quotient_triplet(y);
  if (!(t.core == P({2, 1}) && t.quotient0 == P({1}) && t.quotient1 == P({1, 1}))) {
    detail = "triplet mismatch";
    return false;
  }
  return true;
}

bool degree_four_table(std::string& detail) {
  const GradedPolynomial plus = term({{1, 4}}, 1, 24) + term({{1, 1}, {3, 1}}, 1);
  const GradedPolynomial eighth = term({{1, 4}}, 1, 8);
  const GradedPolynomial minus = term({{1, 4}}, 1, 12) - term({{1, 1}, {3, 1}}, 1);
  const std::vector<std::pair<Partition, GradedPolynomial>> table = {
      {P({4}), plus},         {P({1, 1, 1, 1}), plus}, {P({3, 1}), eighth},
      {P({2, 1, 1}), eighth}, {P({2, 2}), minus},
  };
  for (const auto& [shape, expected] : table) {
    if (!(reduced_schur(shape) == expected)) {
      detail = "mismatch at " + shape.str();
      return false;
    }
  }
  return true;
}

bool theorem2_ranks(std::string& detail) {
  for (int r = 0; r <= 3; ++r) {
    for (int n = 0; n <= 6; ++n) {
      const RankReport report = verify_theorem2(Weight{r, n});
      if (!report.pass) {
        std::ostringstream msg;
        msg << "rank " << report.rank << " != p(" << n << ") = " << to_string(report.expected)
            << " at r=" << r;
        detail = msg.str();
        return false;
      }
    }
  }
  return true;
}

bool theorem3_all(std::string& detail) {
  // The named degree-4 relations first.
  if (!(reduced_schur(P({4})) == reduced_schur(P({1, 1, 1, 1}))) ||
      !(reduced_schur(P({3, 1})) == reduced_schur(P({2, 1, 1}))) ||
      !(reduced_schur(P({2, 2})) ==
        reduced_schur(P({2, 1, 1})) - reduced_schur(P({4})))) {
    detail = "degree-4 linear relations fail";
    return false;
  }
  for (const Partition& y : partitions_up_to(14)) {
    const GradedPolynomial f = reduced_schur(y);
    if (!f.odd_support() || !f.is_homogeneous() || f.weighted_degree() != y.size()) {
      detail = "reduced Schur function of " + y.str() + " is not odd-homogeneous";
      return false;
    }
    if (!verify_theorem3(y).match) {
      detail = "formula and solve disagree at " + y.str();
      return false;
    }
  }
  return true;
}

bool multiplicity_to_forty(std::string& detail) {
  const MultiplicityReport report = multiplicity_report(40);
  if (!report.pass) {
    for (const MultiplicityRow& row : report.rows) {
      if (!row.pass) {
        detail = "mismatch at degree " + std::to_string(row.degree);
        break;
      }
    }
  }
  return report.pass;
}

bool gauss_to_eighty(std::string& detail) {
  const GaussReport report = gauss_series_check(80);
  if (!report.pass) detail = "first mismatch at q^" + std::to_string(report.first_mismatch);
  return report.pass;
}

bool character_orthogonality(std::string& detail) {
  for (int n = 0; n <= 8; ++n) {
    const auto shapes = enumerate_partitions(n);
    for (const Partition& lambda : shapes) {
      for (const Partition& mu : shapes) {
        Rational sum = 0;
        for (const Partition& nu : shapes) {
          sum += Rational(mn_character(lambda, nu) * mn_character(mu, nu)) /
                 Rational(centralizer_order(nu));
        }
        if (sum != (lambda == mu ? 1 : 0)) {
          detail = "orthogonality fails at (" + lambda.str() + ")x(" + mu.str() + ")";
          return false;
        }
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& shape : enumerate_partitions(n)) {
      for (const Partition& nu : enumerate_partitions(n)) {
        if (mn_character(shape, nu) != oracles::frobenius_character(shape, nu)) {
          detail = "oracle disagrees at shape " + shape.str() + ", class " + nu.str();
          return false;
        }
      }
    }
  }
  return true;
}

bool lr_oracle_equivalence(std::string& detail) {
  for (int total = 0; total <= 8; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (const Partition& mu : enumerate_partitions(a)) {
        for (const Partition& nu : enumerate_partitions(total - a)) {
          const auto tableau_side = lr_expand_product(mu, nu);
          if (!(tableau_side == lr_expand_product(nu, mu))) {
            detail = "symmetry fails at (" + mu.str() + ")x(" + nu.str() + ")";
            return false;
          }
          const auto schur_side = schur_expand(schur(mu) * schur(nu));
          if (schur_side.size() != tableau_side.size()) {
            detail = "support mismatch at (" + mu.str() + ")x(" + nu.str() + ")";
            return false;
          }
          for (const auto& [lambda, coeff] : schur_side) {
            auto it = tableau_side.find(lambda);
            if (it == tableau_side.end() ||
                coeff != make_rational(static_cast<long>(it->second))) {
              detail = "coefficient mismatch at " + lambda.str();
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool vertex_relations(std::string& detail) {
  std::vector<GradedPolynomial> monomials;
  for (int d = 0; d <= 10; ++d) {
    for (const Partition& nu : enumerate_odd_partitions(d)) {
      GradedPolynomial m = GradedPolynomial::constant(make_rational(1));
      for (int part : nu.parts()) m *= GradedPolynomial::variable(part);
      monomials.push_back(m);
    }
  }

  if (!(vertex_apply(0, GradedPolynomial::constant(make_rational(1))) ==
        GradedPolynomial::constant(make_rational(-1, 2)))) {
    detail = "X_0(1) != -1/2";
    return false;
  }

  const std::vector<int> heisenberg_range{-7, -5, -3, -1, 1, 3, 5, 7};
  for (int i : heisenberg_range) {
    for (int j : heisenberg_range) {
      for (const GradedPolynomial& m : monomials) {
        const GradedPolynomial bracket = heisenberg_apply(i, heisenberg_apply(j, m)) -
                                         heisenberg_apply(j, heisenberg_apply(i, m));
        const GradedPolynomial expected =
            (i + j == 0) ? m * make_rational(i) : GradedPolynomial{};
        if (!(bracket == expected)) {
          detail = "[a_i, a_j] fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
          return false;
        }
      }
    }
  }

  for (int j : {-5, -3, -1, 1, 3, 5}) {
    for (int k = -4; k <= 4; ++k) {
      for (const GradedPolynomial& m : monomials) {
        const GradedPolynomial bracket =
            heisenberg_apply(j, vertex_apply(k, m)) - vertex_apply(k, heisenberg_apply(j, m));
        if (!(bracket == vertex_apply(j + k, m) * make_rational(2))) {
          detail = "[a_j, X_k] fails at j=" + std::to_string(j) + ", k=" + std::to_string(k);
          return false;
        }
      }
    }
  }

  for (int k = -5; k <= 5; ++k) {
    for (const GradedPolynomial& m : monomials) {
      const GradedPolynomial image = vertex_apply(k, m);
      if (image.is_zero()) continue;
      if (!image.is_homogeneous() || image.weighted_degree() != m.weighted_degree() - k) {
        detail = "degree shift fails at k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

bool sign_well_defined(std::string& detail) {
  std::map<std::vector<int>, oracles::DominoOutcome> memo;
  for (const Partition& p : partitions_up_to(10)) {
    const auto& outcome = oracles::domino_outcomes(p, memo);
    if (outcome.signs.size() != 1) {
      detail = "sign depends on the removal order at " + p.str();
      return false;
    }
    if (*outcome.signs.begin() != two_sign(p)) {
      detail = "greedy sign disagrees with the oracle at " + p.str();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-example quotient and beta-set", 1.0, example_reproduction},
      {2, "degree-4 reduced Schur table, bit-exact", 10.0, degree_four_table},
      {3, "basis rank equals p(n) for r<=3, n<=6", 120000.0, theorem2_ranks},
      {4, "LR formula equals exact solve for |Y|<=14", 600000.0, theorem3_all},
      {5, "weight multiplicities match p^odd up to degree 40", 1000.0, multiplicity_to_forty},
      {6, "q-series identity to order 80", 1000.0, gauss_to_eighty},
      {7, "character orthogonality (<=8) and alternant oracle (<=6)", 60000.0,
       character_orthogonality},
      {8, "LR expansion equals Schur product expansion (<=8)", 120000.0, lr_oracle_equivalence},
      {9, "Heisenberg/vertex commutation relations", 120000.0, vertex_relations},
      {10, "2-sign independent of removal order (<=10)", 60000.0, sign_well_defined},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    const bool ok = criterion.run(detail);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = ms < criterion.budget_ms;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  [%2d] %s (%.2f ms%s)%s%s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), ms, in_budget ? "" : ", over budget",
                detail.empty() ? "" : " — ", detail.c_str());
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria pass\n", criteria.size());
  return 0;
}
