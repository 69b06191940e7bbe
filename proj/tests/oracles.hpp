#pragma once

// Test-only reference implementations. Each one reaches the quantity under
// test by a route independent of the library code it is checking.

#include <functional>
#include <string>
#include <vector>

#include "latred/exactlin.hpp"
#include "latred/lll.hpp"

namespace latred::testing {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
IntMatrix from_cols(const std::vector<std::vector<long>>& cols);

// Textbook Gram-Schmidt on rational vectors: b_i* = b_i - sum mu_{i,j} b_j*.
// Independent of the Gram-matrix recurrence used by gso_compute.
struct NaiveGSO {
  std::vector<std::vector<BigRat>> gs_vectors;  // b_i* as rational vectors
  std::vector<std::vector<BigRat>> mu;          // mu[i] has i entries
  std::vector<BigRat> norms_sq;
};
NaiveGSO naive_gso(const IntMatrix& basis);

// Walk the event list over a private copy of the input, exposing the basis
// before and after each event.
void replay_visit(
    const IntMatrix& input, const std::vector<ReductionEvent>& events,
    const std::function<void(const ReductionEvent&, const IntMatrix& before,
                             const IntMatrix& after)>& visit);

// The five exact swap identities for squared GS norms at positions
// (pos, pos+1), for a swap taken on a Lovasz failure at delta = 3/4.
// Returns a list of human-readable failures (empty = all hold).
std::vector<std::string> lemma1_failures(const std::vector<BigRat>& before,
                                         const std::vector<BigRat>& after,
                                         std::size_t pos);

// Brute-force squared successive minima of the lattice spanned by the
// columns of `basis`, enumerating coefficient vectors in [-box, box]^n and
// greedily collecting linearly independent short vectors.
std::vector<BigInt> successive_minima_sq(const IntMatrix& basis, long box);

// True when v lies in the lattice generated by the columns of basis
// (exact rational solve with integer solution).
bool lattice_member(const IntMatrix& basis, const std::vector<BigInt>& v);

// Mutual membership of all columns: equal lattices.
bool lattices_equal(const IntMatrix& a, const IntMatrix& b);

}  // namespace latred::testing
