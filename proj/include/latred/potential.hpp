#pragma once

#include <cstddef>
#include <vector>

#include "latred/exactlin.hpp"
#include "latred/hiprec.hpp"
#include "latred/lll.hpp"

namespace latred {

// Split of the GS-norm indices into the n-k smallest (S) and the k largest
// (L). Ties go to the lexicographically smallest S: among equal norms,
// smaller indices are assigned to S first. Indices are 0-based here; the
// positional term of the k-th potential accounts for the 1-based convention.
struct IndexPartition {
  std::size_t k = 0;
  std::vector<std::size_t> small_idx;  // S, sorted ascending, size n-k
  std::vector<std::size_t> large_idx;  // L, sorted ascending, size k
};

/// Partition for given squared GS norms; 1 <= k <= n.
IndexPartition partition_indices(const std::vector<BigRat>& gs_norm_sq, std::size_t k);

/// Classical potential: sum over i < n of (n-i) * log2||b_i*|| (1-based i),
/// evaluated from the exact squared norms at working precision.
HiReal potential_classic(const std::vector<BigRat>& gs_norm_sq);

/// k-th potential: sum_j (k-j) log2||b*_{l_j}|| - sum_i i*log2||b*_{s_i}||
/// + sum_i s_i, with s_i, l_j the 1-based partition positions. For k = n
/// this is the classical potential.
HiReal potential_k(const std::vector<BigRat>& gs_norm_sq, std::size_t k);

// Per-swap decrease of the k-th potential along a traced reduction.
struct SwapDecreaseReport {
  struct Entry {
    std::size_t step;
    HiReal decrease;
    bool ok;  // decrease >= log2(2/sqrt(3)) - slack
  };
  std::vector<Entry> entries;
  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok) return false;
    return true;
  }
};

/// Checks every recorded swap of the trace against the guaranteed decrease
/// log2(2/sqrt(3)), with `slack` absorbing the finite-precision logs.
/// Throws InputError when the trace lacks checkpoints for its swaps.
SwapDecreaseReport verify_swap_decrease(const ReductionTrace& trace, std::size_t k,
                                        double slack = 1e-9);

/// (Pi_k(in) - Pi_k(out)) / log2(2/sqrt(3)): an upper bound on the number
/// of swaps any LLL run can take from `in` to `out`.
HiReal swap_bound_from_potentials(const IntMatrix& basis_in, const IntMatrix& basis_out,
                                  std::size_t k);

/// Minimum of swap_bound_from_potentials over k = 1..n.
HiReal swap_bound_min_over_k(const IntMatrix& basis_in, const IntMatrix& basis_out);

}  // namespace latred
