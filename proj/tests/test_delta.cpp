#include <algorithm>
#include <cmath>
#include <doctest.h>

#include "oracles.hpp"
#include "tailforge/delta.hpp"
#include "tailforge/entropy.hpp"
#include "tailforge/errors.hpp"
#include "tailforge/random_tables.hpp"
#include "test_helpers.hpp"

using namespace tailforge;
using testutil::max_table;
using testutil::table_of;

TEST_SUITE("delta") {

TEST_CASE("perturbing an ignored coordinate changes nothing") {
  // Z depends on coordinate 1 only.
  const FunctionTable z(testutil::binary_square(), {3.0, 7.0, 3.0, 7.0}, false);
  for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
    CHECK(perturbed_values(z, 0, choice).values() == z.values());
  }
}

TEST_CASE("perturbed values of max(x1, x2) on the binary square") {
  const FunctionTable z = max_table();
  const FunctionTable sup0 = perturbed_values(z, 0, PerturbationChoice::kLeftSup);
  CHECK(sup0.values() == std::vector<double>{1.0, 1.0, 1.0, 1.0});
  const FunctionTable inf0 = perturbed_values(z, 0, PerturbationChoice::kMaurerInf);
  CHECK(inf0.values() == std::vector<double>{0.0, 1.0, 0.0, 1.0});  // = x2
}

TEST_CASE("perturbed values match the substitution oracle on random tables") {
  auto eng = testutil::test_engine(10);
  for (int trial = 0; trial < 30; ++trial) {
    const ProductSpace space = random_product_space(eng, 4, 4);
    const FunctionTable z = random_table(eng, space, -2.0, 2.0);
    const auto weights = testutil::weights_of(space);
    for (std::size_t k = 0; k < space.num_coordinates(); ++k) {
      for (bool take_min : {true, false}) {
        const auto choice =
            take_min ? PerturbationChoice::kMaurerInf : PerturbationChoice::kLeftSup;
        CHECK(perturbed_values(z, k, choice).values() ==
              oracle::perturbed_direct(weights, z.values(), k, take_min));
      }
    }
  }
}

TEST_CASE("perturbation is idempotent and constant along its axis") {
  auto eng = testutil::test_engine(11);
  const ProductSpace space = random_product_space(eng, 3, 4);
  const FunctionTable z = random_table(eng, space, -1.0, 1.0);
  for (std::size_t k = 0; k < space.num_coordinates(); ++k) {
    for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
      const FunctionTable once = perturbed_values(z, k, choice);
      CHECK(perturbed_values(once, k, choice).values() == once.values());
      // constant along axis k: every substitution of the k-index agrees
      for (std::size_t i = 0; i < space.total_points(); ++i) {
        auto multi = space.multi_index(i);
        multi[k] = 0;
        CHECK(once.at(i) == once.at(space.flat_index(multi)));
      }
    }
  }
}

TEST_CASE("pointwise bracketing holds exactly") {
  auto eng = testutil::test_engine(12);
  for (int trial = 0; trial < 30; ++trial) {
    const ProductSpace space = random_product_space(eng, 4, 4);
    const FunctionTable z = random_table(eng, space, -2.0, 2.0);
    const auto inf_report = delta_squared(z, PerturbationChoice::kMaurerInf);
    const auto sup_report = delta_squared(z, PerturbationChoice::kLeftSup);
    for (std::size_t k = 0; k < space.num_coordinates(); ++k) {
      for (std::size_t i = 0; i < space.total_points(); ++i) {
        CHECK(z.at(i) - inf_report.perturbed[k].at(i) >= 0.0);
        CHECK(sup_report.perturbed[k].at(i) - z.at(i) >= 0.0);
      }
    }
  }
}

TEST_CASE("enlarging a coordinate's support moves the extremes outward") {
  auto f = [](const std::vector<double>& x) {
    return std::sin(x[0]) + 0.5 * x[1] * x[1] - 0.3 * x[0] * x[1];
  };
  const ProductSpace small({CoordinateSpace::uniform({0.0, 1.0, 2.0}),
                            CoordinateSpace::uniform({-1.0, 1.0})});
  const ProductSpace large({CoordinateSpace::uniform({0.0, 1.0, 2.0, 3.0, -2.0}),
                            CoordinateSpace::uniform({-1.0, 1.0})});
  const FunctionTable z_small = table_of(small, f);
  const FunctionTable z_large = table_of(large, f);

  const auto inf_small = perturbed_values(z_small, 0, PerturbationChoice::kMaurerInf);
  const auto inf_large = perturbed_values(z_large, 0, PerturbationChoice::kMaurerInf);
  const auto sup_small = perturbed_values(z_small, 0, PerturbationChoice::kLeftSup);
  const auto sup_large = perturbed_values(z_large, 0, PerturbationChoice::kLeftSup);

  // compare on the shared points (the first three values of coordinate 0)
  for (std::size_t i0 = 0; i0 < 3; ++i0) {
    for (std::size_t i1 = 0; i1 < 2; ++i1) {
      const std::size_t flat_small = small.flat_index(std::vector<std::size_t>{i0, i1});
      const std::size_t flat_large = large.flat_index(std::vector<std::size_t>{i0, i1});
      CHECK(inf_large.at(flat_large) <= inf_small.at(flat_small));
      CHECK(sup_large.at(flat_large) >= sup_small.at(flat_small));
    }
  }
}

TEST_CASE("delta squared of a constant is identically zero") {
  const FunctionTable z = FunctionTable::constant(testutil::binary_square(), 5.0);
  for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
    const auto report = delta_squared(z, choice);
    CHECK(report.sup_norm == 0.0);
    for (double v : report.delta_sq.values()) CHECK(v == 0.0);
  }
}

TEST_CASE("the two choices disagree on max(x1, x2): sup-norms 1 and 2") {
  const FunctionTable z = max_table();
  const auto inf_report = delta_squared(z, PerturbationChoice::kMaurerInf);
  CHECK(inf_report.sup_norm == 1.0);
  CHECK(inf_report.delta_sq.values() == std::vector<double>{0.0, 1.0, 1.0, 0.0});
  const auto sup_report = delta_squared(z, PerturbationChoice::kLeftSup);
  CHECK(sup_report.sup_norm == 2.0);
  CHECK(sup_report.delta_sq.values() == std::vector<double>{2.0, 0.0, 0.0, 0.0});
  CHECK(inf_report.sup_norm != sup_report.sup_norm);
}

TEST_CASE("sup_norm equals the exact maximum of the field") {
  auto eng = testutil::test_engine(13);
  for (int trial = 0; trial < 20; ++trial) {
    const ProductSpace space = random_product_space(eng, 4, 4);
    const FunctionTable z = random_table(eng, space, -3.0, 3.0);
    for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
      const auto report = delta_squared(z, choice);
      double max_value = 0.0;
      for (double v : report.delta_sq.values()) max_value = std::max(max_value, v);
      CHECK(report.sup_norm == max_value);
    }
  }
}

TEST_CASE("tail bound values and edge cases") {
  CHECK(tail_bound(0.0, 2.0, TailSide::kRight) == 1.0);
  CHECK(tail_bound(2.0, 2.0, TailSide::kLeft) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-15));  // e^{-1}
  // sup_norm = n^2/N at n = 4, N = 16 gives exp(-t^2/2) at t = 1
  CHECK(tail_bound(1.0, 1.0, TailSide::kRight) ==
        doctest::Approx(0.60653065971263342).epsilon(1e-15));
  // degenerate deterministic case
  CHECK(tail_bound(0.0, 0.0, TailSide::kRight) == 1.0);
  CHECK(tail_bound(0.5, 0.0, TailSide::kRight) == 0.0);
  CHECK_THROWS_AS(tail_bound(-1.0, 1.0, TailSide::kRight), DomainError);
  CHECK_THROWS_AS(tail_bound(1.0, -1.0, TailSide::kRight), DomainError);
}

TEST_CASE("tail bound is monotone in t and in sup_norm") {
  double previous = 2.0;
  for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double bound = tail_bound(t, 1.5, TailSide::kRight);
    CHECK(bound <= previous);
    previous = bound;
  }
  previous = 0.0;
  for (double sup : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double bound = tail_bound(1.0, sup, TailSide::kLeft);
    CHECK(bound >= previous);
    previous = bound;
  }
}

TEST_CASE("eigenvalue bounds: values forced by the formulas") {
  const auto [r0, l0] = maurer_eig_bounds(1, 0.0);
  CHECK(r0 == 1.0);
  CHECK(l0 == 1.0);
  const auto [r1, l1] = maurer_eig_bounds(1, 4.0);
  CHECK(r1 == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(l1 == doctest::Approx(std::exp(-2.0 / 3.0)).epsilon(1e-15));
  const auto [r2, l2] = maurer_eig_bounds(2, 8.0);
  CHECK(r2 == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(l2 == doctest::Approx(std::exp(-2.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(maurer_eig_bounds(0, 1.0), DomainError);
  CHECK_THROWS_AS(maurer_eig_bounds(1, -0.5), DomainError);
}

TEST_CASE("the left eigenvalue bound strictly dominates the right one") {
  for (int k : {1, 2, 3}) {
    for (double t : {0.25, 0.5, 1.0, 2.0, 8.0}) {
      const auto [right, left] = maurer_eig_bounds(k, t);
      CHECK(left > right);
    }
  }
}

TEST_CASE("perturbation reports satisfy the log-Sobolev and Herbst layers") {
  auto eng = testutil::test_engine(14);
  const std::vector<double> lambdas{0.1, 0.5, 1.0, 2.0};
  for (int trial = 0; trial < 50; ++trial) {
    const ProductSpace space = random_product_space(eng, 4, 4);  // at most 256 points
    const FunctionTable z = random_table(eng, space, -1.0, 1.0);
    for (const auto choice : {PerturbationChoice::kMaurerInf, PerturbationChoice::kLeftSup}) {
      const auto report = delta_squared(z, choice);
      for (double magnitude : lambdas) {
        const double lambda =
            choice == PerturbationChoice::kMaurerInf ? magnitude : -magnitude;
        CHECK(log_sobolev_gap(z, lambda, report.perturbed) >= -1e-10);
        const auto [lhs, rhs] = herbst_mgf_check(z, lambda, report.sup_norm, side_of(choice));
        CHECK(lhs <= rhs + 1e-10);
      }
    }
  }
}

}  // TEST_SUITE
