#pragma once

#include <cstddef>
#include <string>

#include "latred/exactlin.hpp"
#include "latred/hiprec.hpp"

namespace latred {

/// log2||A|| = (1/2) log2(matrix_norm_bound(A)), at working precision.
HiReal log_norm(const IntMatrix& a);

/// Explicit proof-level swap bound that is independent of the scaling K:
/// (k(n - k/2) log2||A|| + k^3 + (n-k)k) / log2(2/sqrt(3)).
HiReal swap_bound_theorem2(std::size_t n, std::size_t k, const HiReal& log_norm_a);

/// Swap bound from the classical potential of the extended basis:
/// (k(2n-k+1)/2) (log2 K + log2||A||) / log2(2/sqrt(3)). Grows with K.
HiReal swap_bound_classical(std::size_t n, std::size_t k, const HiReal& log_k,
                            const HiReal& log_norm_a);

struct BoundReport {
  std::size_t n = 0, k = 0;
  HiReal log_norm_a;
  HiReal bound_theorem2;
  HiReal bound_classical;
  HiReal bound_potential_min_k;
  std::size_t measured_swaps = 0;
  bool principal_minor_nonzero = false;  // hypothesis of the K-free bound
};

/// True when the k x k leading minor of A (first k rows) is nonzero.
bool principal_minor_nonzero(const IntMatrix& a);

// One comparison row: the three bound families, each instantiated with the
// constants of the explicit formulas rather than O-notation. The classical
// column substitutes log K from the general threshold, the heuristic column
// from 2^{c n} * ||A||^{k/(n-k)} with c = 1.
enum class Table1K { One, Half, NMinusOne };

struct Table1Row {
  std::size_t k = 0;
  HiReal classical;
  HiReal heuristic;
  HiReal new_analysis;
  std::string classical_form;  // asymptotic shape, for display
  std::string heuristic_form;
  std::string new_form;
};

Table1Row table1_row(std::size_t n, Table1K mode, const HiReal& alpha);

}  // namespace latred
