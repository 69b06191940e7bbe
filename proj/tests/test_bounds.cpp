#include <doctest.h>

#include <cmath>

#include "latred/bounds.hpp"
#include "latred/ortho.hpp"
#include "oracles.hpp"

using namespace latred;
using namespace latred::testing;

namespace {
const double kKappa = 1.0 - std::log2(3.0) / 2.0;  // log2(2/sqrt(3))
}

TEST_CASE("log_norm") {
  CHECK(log_norm(from_rows({{1}, {1}})).to_double() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(log_norm(IntMatrix::identity(3)).to_double() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(log_norm(IntMatrix(2, 2)), InputError);
}

TEST_CASE("swap_bound_theorem2: frozen evaluations") {
  // n=2, k=1, log||A|| = 1/2: (1*1.5*0.5 + 1 + 1) / kappa = 2.75 / kappa
  CHECK(swap_bound_theorem2(2, 1, HiReal(0.5)).to_double() ==
        doctest::Approx(2.75 / kKappa).epsilon(1e-12));
  CHECK(swap_bound_theorem2(2, 1, HiReal(0.5)).to_double() ==
        doctest::Approx(13.25).epsilon(1e-3));

  // log||A|| = 0: (0 + 1 + 1) / kappa
  CHECK(swap_bound_theorem2(2, 1, HiReal(0L)).to_double() ==
        doctest::Approx(2.0 / kKappa).epsilon(1e-12));
  CHECK(swap_bound_theorem2(2, 1, HiReal(0L)).to_double() ==
        doctest::Approx(9.64).epsilon(1e-3));

  CHECK_THROWS_AS(swap_bound_theorem2(2, 2, HiReal(1.0)), InputError);
  CHECK_THROWS_AS(swap_bound_theorem2(2, 0, HiReal(1.0)), InputError);
}

TEST_CASE("swap_bound_classical: frozen evaluation and K-monotonicity") {
  // n=2, k=1, K=3, ||A|| = sqrt(2): 2 * (log2 3 + 0.5) / kappa
  const double expected = 2.0 * (std::log2(3.0) + 0.5) / kKappa;
  CHECK(swap_bound_classical(2, 1, HiReal(std::log2(3.0)), HiReal(0.5)).to_double() ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(20.1).epsilon(1e-2));

  // each extra bit of K adds exactly k(2n-k+1)/2 / kappa
  const double step = 2.0 / kKappa;
  double prev = swap_bound_classical(2, 1, HiReal(1.0), HiReal(0.5)).to_double();
  for (int bits = 2; bits < 6; ++bits) {
    double cur =
        swap_bound_classical(2, 1, HiReal(static_cast<double>(bits)), HiReal(0.5))
            .to_double();
    CHECK(cur - prev == doctest::Approx(step).epsilon(1e-12));
    prev = cur;
  }
}

TEST_CASE("theorem-2 bound is K-free and eventually below the classical one") {
  const HiReal alpha(3.0);
  for (std::size_t n : {4ul, 6ul, 8ul}) {
    HiReal thm2 = swap_bound_theorem2(n, 1, alpha);
    // crossover in log K: numerator/(k(2n-k+1)/2) - alpha
    double coeff = 1.0 * (2.0 * n - 1.0 + 1.0) / 2.0;
    double crossover = thm2.to_double() * kKappa / coeff - alpha.to_double();
    double beyond = crossover + 1.0;
    CHECK(swap_bound_classical(n, 1, HiReal(beyond), alpha).to_double() >
          thm2.to_double());
    CHECK(swap_bound_classical(n, 1, HiReal(crossover - 1.0), alpha).to_double() <
          thm2.to_double());
  }
}

TEST_CASE("principal_minor_nonzero") {
  CHECK(principal_minor_nonzero(from_rows({{1}, {1}})));
  CHECK_FALSE(principal_minor_nonzero(from_rows({{0}, {1}})));
  CHECK(principal_minor_nonzero(from_rows({{2, 1}, {1, 2}, {5, 5}})));
  CHECK_FALSE(principal_minor_nonzero(from_rows({{1, 2}, {2, 4}, {0, 1}})));
}

TEST_CASE("measured swaps below the theorem-2 bound on a worked instance") {
  IntMatrix a = from_rows({{1}, {1}});
  KernelResult res = orthogonal_lattice_basis(a);
  HiReal bound = swap_bound_theorem2(2, 1, log_norm(a));
  CHECK(static_cast<double>(res.swap_count) <= bound.to_double());
}

TEST_CASE("table1_row") {
  const HiReal alpha(4.0);
  Table1Row one = table1_row(8, Table1K::One, alpha);
  CHECK(one.k == 1);
  CHECK(one.new_form == "O(n alpha)");
  // k=1: the new bound is linear in alpha for fixed n
  double n8a4 = table1_row(8, Table1K::One, HiReal(4.0)).new_analysis.to_double();
  double n8a8 = table1_row(8, Table1K::One, HiReal(8.0)).new_analysis.to_double();
  double n8a12 = table1_row(8, Table1K::One, HiReal(12.0)).new_analysis.to_double();
  CHECK(n8a8 - n8a4 == doctest::Approx(n8a12 - n8a8).epsilon(1e-9));

  Table1Row half = table1_row(8, Table1K::Half, alpha);
  CHECK(half.k == 4);
  CHECK(half.new_form == "O(n^3 + n^2 alpha)");

  Table1Row last = table1_row(8, Table1K::NMinusOne, alpha);
  CHECK(last.k == 7);
  CHECK(last.new_form == "O(n^3 + n alpha)");

  // all three instantiated bounds are positive and finite
  for (const auto& row : {one, half, last}) {
    CHECK(row.classical.to_double() > 0);
    CHECK(row.heuristic.to_double() > 0);
    CHECK(row.new_analysis.to_double() > 0);
  }
  CHECK_THROWS_AS(table1_row(1, Table1K::One, alpha), InputError);
}
