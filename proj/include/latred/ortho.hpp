#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "latred/exactlin.hpp"
#include "latred/gso.hpp"
#include "latred/lll.hpp"

namespace latred {

// The (n+k) x n scaled embedding: K*A^T stacked over I_n. Its columns are
// the basis handed to the reduction; every GS norm of it is >= 1.
struct ExtendedBasis {
  IntMatrix a;      // n x k, full column rank
  BigInt scale_k;   // K > 0
  IntMatrix basis;  // (n+k) x n
  std::size_t n = 0, k = 0;
};

/// Lay out the extended basis. Throws InputError for rank-deficient A or
/// non-positive K.
ExtendedBasis build_extended(const IntMatrix& a, const BigInt& scale_k);

/// Smallest integer strictly greater than
/// 2^{(n-1)/2} * (n-k)^{(n-k)/2} * ||A||^k, computed exactly: the bound is
/// the square root of an exact integer, so the answer is found by integer
/// square root rather than interval arithmetic.
BigInt threshold_K_general(const IntMatrix& a);

/// Smallest integer strictly greater than 2^{c*n} * ||A||^{k/(n-k)}, found
/// exactly by comparing (2(n-k))-th powers.
BigInt threshold_K_heuristic(const IntMatrix& a, unsigned c = 1);

enum class KMode { General, Heuristic, Explicit };

struct KernelOptions {
  KMode mode = KMode::General;
  BigInt explicit_K;      // used when mode == Explicit
  unsigned heuristic_c = 1;
  bool with_checkpoints = false;
  std::function<void(const ReductionEvent&, const GSOState&)> on_event;
};

struct KernelResult {
  std::size_t n = 0, k = 0;
  IntMatrix input;             // A as given
  IntMatrix kernel;            // C: n x (n-k), LLL-reduced basis of the kernel lattice
  IntMatrix scaled_rows;       // M: k x k top block of the trailing columns
  IntMatrix residual;          // N: n x k bottom block of the trailing columns
  BigInt K_used;
  std::size_t swap_count = 0;
  bool sub_threshold = false;  // explicit K below the general threshold
  IntMatrix reduced_extended;  // full reduced basis, shape (0 M / C N)
  ReductionTrace trace;
};

/// Run the pipeline: build Ext_K(A), LLL-reduce it, verify the zero top-left
/// block, and split out C, M, N. n > k >= 1 is required ("kernel is trivial"
/// for n == k). A sub-threshold explicit K still runs, but the result is
/// flagged and a missing zero block raises VerificationError("extraction
/// failed: ...").
KernelResult orthogonal_lattice_basis(const IntMatrix& a, const KernelOptions& opts = {});

/// (1/K) * M, which is a basis of the lattice generated by the rows of A.
/// Each column is verified to be an integer combination of the rows;
/// inconsistent divisibility raises VerificationError("extraction failed...").
RatMatrix extract_row_lattice_basis(const KernelResult& result);

// Structural verification of an extracted kernel basis against A.
struct KernelReport {
  bool orthogonal = false;     // A^T * C == 0 exactly
  bool full_rank = false;      // rank(C) == n-k
  bool lll_reduced = false;    // is_lll_reduced(C)
  bool lattice_equal = false;  // mutual integer-solvability vs the reference kernel
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

KernelReport verify_kernel(const IntMatrix& a, const IntMatrix& c,
                           const ReductionParams& params = {});

// GS-norm separation of the reduced extended basis: every norm among the
// first n-k positions strictly below every norm among the last k, and
// ||b'_{n-k+j}*||^2 >= 2^{1-j} K^2 for j = 1..k.
struct SeparationReport {
  bool separated = false;
  bool floor_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

SeparationReport verify_output_separation(const IntMatrix& reduced_extended,
                                          std::size_t n, std::size_t k,
                                          const BigInt& scale_k);

}  // namespace latred
