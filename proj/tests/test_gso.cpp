#include <doctest.h>

#include "latred/experiment.hpp"
#include "latred/gso.hpp"
#include "oracles.hpp"

using namespace latred;
using namespace latred::testing;

TEST_CASE("gso_compute: identity and small bases") {
  GSOState st = gso_compute(IntMatrix::identity(3));
  for (const auto& d : st.gs_norm_sq) CHECK(d == 1);
  for (const auto& row : st.mu)
    for (const auto& m : row) CHECK(m == 0);

  st = gso_compute(from_cols({{1, 0}, {1, 1}}));
  CHECK(st.gs_norm_sq[0] == 1);
  CHECK(st.gs_norm_sq[1] == 1);
  CHECK(st.mu[1][0] == 1);

  st = gso_compute(from_cols({{3, 0}, {1, 1}}));
  CHECK(st.gs_norm_sq[0] == 9);
  CHECK(st.gs_norm_sq[1] == 1);
  CHECK(st.mu[1][0] == make_rat(1, 3));

  // ||b_1*||^2 == ||b_1||^2 always
  CHECK(gso_compute(from_cols({{3, 4}})).gs_norm_sq[0] == 25);
}

TEST_CASE("gso_compute rejects rank-deficient bases") {
  CHECK_THROWS_WITH_AS(gso_compute(from_cols({{1, 2}, {2, 4}})),
                       "zero Gram-Schmidt norm at index 2", InputError);
  CHECK_THROWS_WITH_AS(gso_compute(from_cols({{0, 0}, {1, 1}})),
                       "zero Gram-Schmidt norm at index 1", InputError);
}

TEST_CASE("gso_compute agrees with naive vector Gram-Schmidt") {
  Xoshiro256 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 5;
    IntMatrix b = random_full_rank_matrix(n + trial % 2, n, 5, rng);
    GSOState st = gso_compute(b);
    NaiveGSO ref = naive_gso(b);
    CHECK(st.gs_norm_sq == ref.norms_sq);
    CHECK(st.mu == ref.mu);
  }
}

TEST_CASE("swap_update: examples") {
  // swapping the two columns of I_2 relabels equal norms
  IntMatrix b = IntMatrix::identity(2);
  GSOState st = gso_compute(b);
  b.swap_cols(0, 1);
  gso_swap_update(st, b, 0);
  CHECK(st.gs_norm_sq[0] == 1);
  CHECK(st.gs_norm_sq[1] == 1);

  // (3,0),(1,1) swapped at the first pair: norms become (2, 9/2)
  b = from_cols({{3, 0}, {1, 1}});
  st = gso_compute(b);
  b.swap_cols(0, 1);
  gso_swap_update(st, b, 0);
  CHECK(st.gs_norm_sq[0] == 2);
  CHECK(st.gs_norm_sq[1] == make_rat(9, 2));
  CHECK(st.gs_norm_sq[0] * st.gs_norm_sq[1] == 9);  // product preserved
  CHECK(st == gso_compute(b));

  CHECK_THROWS_AS(gso_swap_update(st, b, 5), InputError);
}

TEST_CASE("swap_update leaves other norms unchanged") {
  Xoshiro256 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix b = random_full_rank_matrix(4, 4, 5, rng);
    GSOState st = gso_compute(b);
    BigRat first = st.gs_norm_sq[0], last = st.gs_norm_sq[3];
    b.swap_cols(1, 2);
    gso_swap_update(st, b, 1);
    CHECK(st.gs_norm_sq[0] == first);
    CHECK(st.gs_norm_sq[3] == last);
    CHECK(st == gso_compute(b));
  }
}

TEST_CASE("size_reduce_update: examples") {
  IntMatrix b = from_cols({{1, 0}, {1, 1}});
  GSOState st = gso_compute(b);

  GSOState same = st;
  gso_size_reduce_update(same, 1, 0, BigInt(0));  // q = 0 is a no-op
  CHECK(same == st);

  b.sub_col_multiple(1, 0, BigInt(1));
  gso_size_reduce_update(st, 1, 0, BigInt(1));
  CHECK(st.mu[1][0] == 0);
  CHECK(st.gs_norm_sq[0] == 1);
  CHECK(st.gs_norm_sq[1] == 1);
  CHECK(st == gso_compute(b));

  // |mu| = 1/3 needs no reduction: round(1/3) = 0
  st = gso_compute(from_cols({{3, 0}, {1, 1}}));
  CHECK(round_half_up(st.mu[1][0]) == 0);

  CHECK_THROWS_AS(gso_size_reduce_update(st, 1, 1, BigInt(1)), InputError);
}

TEST_CASE("round-trip: incremental updates equal recomputation") {
  Xoshiro256 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 3 + trial % 4;
    IntMatrix b = random_full_rank_matrix(n, n, 6, rng);
    GSOState st = gso_compute(b);
    for (int op = 0; op < 25; ++op) {
      if (rng.below(2) == 0) {
        std::size_t i = rng.below(n - 1);
        b.swap_cols(i, i + 1);
        gso_swap_update(st, b, i);
      } else {
        std::size_t i = 1 + rng.below(n - 1);
        std::size_t j = rng.below(i);
        BigInt q(static_cast<long>(rng.below(7)) - 3);
        if (q != 0) {
          b.sub_col_multiple(i, j, q);
          gso_size_reduce_update(st, i, j, q);
        }
      }
      CHECK(st == gso_compute(b));
    }
  }
}
