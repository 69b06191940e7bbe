#pragma once

#include <vector>

#include "latred/exactlin.hpp"

namespace latred {

// Exact Gram-Schmidt data for a full-column-rank basis: the coefficients
// mu[i][j] = <b_i, b_j*> / ||b_j*||^2 for j < i, and the squared norms
// ||b_i*||^2 as exact rationals. Actual norms never appear; downstream
// consumers take logs of the squared values.
struct GSOState {
  std::vector<std::vector<BigRat>> mu;  // mu[i] has i entries (indices j < i)
  std::vector<BigRat> gs_norm_sq;

  std::size_t size() const { return gs_norm_sq.size(); }
  bool operator==(const GSOState& other) const = default;
};

/// Full recomputation from the basis (columns are the vectors), via the
/// Gram-matrix recurrence. Throws InputError("zero Gram-Schmidt norm at
/// index i") for rank-deficient input (1-based i).
GSOState gso_compute(const IntMatrix& basis);

/// Local O(n) update after exchanging basis columns i and i+1 (0-based).
/// The basis passed in must already have the columns exchanged; the state
/// afterwards equals gso_compute(basis).
void gso_swap_update(GSOState& state, const IntMatrix& basis, std::size_t i);

/// Update after the translation b_i <- b_i - q * b_j (j < i, 0-based).
/// Only row i of mu changes; the squared GS norms are untouched.
void gso_size_reduce_update(GSOState& state, std::size_t i, std::size_t j, const BigInt& q);

}  // namespace latred
