#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latred/exactlin.hpp"
#include "latred/gso.hpp"

namespace latred {

// Reduction parameter 1/4 < delta < 1, exact. Default 3/4, which makes
// alpha = 4/(4*delta - 1) equal to 2.
struct ReductionParams {
  BigRat delta = make_rat(3, 4);

  void validate() const;
  BigRat alpha() const;  // 4 / (4*delta - 1)
};

struct ReductionEvent {
  enum class Kind { Translate, Swap };
  std::size_t step = 0;  // strictly increasing over a run
  Kind kind = Kind::Swap;
  std::size_t pos = 0;   // translate: index i of the reduced vector (0-based);
                         // swap: lower index of the exchanged pair (pos, pos+1)
  std::size_t other = 0; // translate only: index j with b_pos -= q * b_other
  BigInt coeff;          // translate only: q (nonzero)
};

// Exact squared GS norms around one swap; recorded when checkpointing is on.
struct SwapCheckpoint {
  std::size_t step = 0;  // step of the matching swap event
  std::vector<BigRat> norms_before;
  std::vector<BigRat> norms_after;
};

struct ReductionTrace {
  std::vector<ReductionEvent> events;
  std::size_t swap_count = 0;
  std::vector<SwapCheckpoint> checkpoints;  // one per swap when enabled
};

struct ReductionOptions {
  ReductionParams params;
  // Record exact GS-norm snapshots around every swap (potential analysis).
  bool with_checkpoints = false;
  // Invoked after each translate/swap with the event record and the current
  // GSO state. The callback must not mutate reduction state.
  std::function<void(const ReductionEvent&, const GSOState&)> on_event;
};

struct ReductionResult {
  IntMatrix basis;
  ReductionTrace trace;
};

/// LLL-reduce the columns of `basis`. The returned basis generates the same
/// lattice (it is related to the input by the recorded unimodular events)
/// and satisfies is_lll_reduced. A translation is performed whenever
/// |mu_{i,j}| > 1/2, with q = floor(mu + 1/2); no event is emitted for
/// coefficients that are already reduced.
ReductionResult lll_reduce(IntMatrix basis, const ReductionOptions& opts = {});

/// Exact check of both LLL conditions: |mu_{i,j}| <= 1/2 for all j < i and
/// delta*||b_i*||^2 <= ||b_{i+1}*||^2 + mu_{i+1,i}^2*||b_i*||^2 for all i.
bool is_lll_reduced(const IntMatrix& basis, const ReductionParams& params = {});

// Exact consequences of LLL-reducedness: ||b_i*||^2 <= alpha*||b_{i+1}*||^2
// and ||b_i||^2 <= alpha^{i-1}*||b_i*||^2. Violations are listed, not thrown.
struct ConsequenceReport {
  struct Violation {
    std::size_t index;  // 1-based position
    std::string what;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ConsequenceReport check_reduced_consequences(const IntMatrix& basis,
                                             const ReductionParams& params = {});

}  // namespace latred
