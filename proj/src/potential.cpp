#include "latred/potential.hpp"

#include <algorithm>
#include <numeric>

namespace latred {

IndexPartition partition_indices(const std::vector<BigRat>& gs_norm_sq, std::size_t k) {
  const std::size_t n = gs_norm_sq.size();
  if (k < 1 || k > n) throw InputError("k out of range");
  for (const auto& d : gs_norm_sq)
    if (!(d > 0)) throw InputError("non-positive Gram-Schmidt norm");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp(gs_norm_sq[a], gs_norm_sq[b]);
    return c != 0 ? c < 0 : a < b;
  });

  IndexPartition part;
  part.k = k;
  part.small_idx.assign(order.begin(), order.begin() + (n - k));
  part.large_idx.assign(order.begin() + (n - k), order.end());
  std::sort(part.small_idx.begin(), part.small_idx.end());
  std::sort(part.large_idx.begin(), part.large_idx.end());
  return part;
}

namespace {

// log2||b_i*|| from the exact squared norm.
HiReal half_log2(const BigRat& norm_sq) {
  return HiReal::log2(norm_sq) / HiReal(2L);
}

}  // namespace

HiReal potential_classic(const std::vector<BigRat>& gs_norm_sq) {
  const std::size_t n = gs_norm_sq.size();
  HiReal sum;
  for (std::size_t i = 0; i + 1 < n; ++i)
    sum += HiReal(static_cast<long>(n - 1 - i)) * half_log2(gs_norm_sq[i]);
  return sum;
}

HiReal potential_k(const std::vector<BigRat>& gs_norm_sq, std::size_t k) {
  IndexPartition part = partition_indices(gs_norm_sq, k);
  HiReal sum;
  for (std::size_t j = 0; j + 1 < part.large_idx.size(); ++j)
    sum += HiReal(static_cast<long>(k - 1 - j)) * half_log2(gs_norm_sq[part.large_idx[j]]);
  long pos_total = 0;
  for (std::size_t i = 0; i < part.small_idx.size(); ++i) {
    sum -= HiReal(static_cast<long>(i + 1)) * half_log2(gs_norm_sq[part.small_idx[i]]);
    pos_total += static_cast<long>(part.small_idx[i] + 1);  // 1-based position
  }
  sum += HiReal(pos_total);
  return sum;
}

SwapDecreaseReport verify_swap_decrease(const ReductionTrace& trace, std::size_t k,
                                        double slack) {
  if (trace.checkpoints.size() != trace.swap_count)
    throw InputError("trace is missing potential checkpoints");
  const HiReal threshold = log2_two_over_sqrt3() - HiReal(slack);
  SwapDecreaseReport report;
  for (const auto& cp : trace.checkpoints) {
    HiReal dec = potential_k(cp.norms_before, k) - potential_k(cp.norms_after, k);
    bool ok = dec >= threshold;
    report.entries.push_back({cp.step, std::move(dec), ok});
  }
  return report;
}

HiReal swap_bound_from_potentials(const IntMatrix& basis_in, const IntMatrix& basis_out,
                                  std::size_t k) {
  const auto norms_in = gso_compute(basis_in).gs_norm_sq;
  const auto norms_out = gso_compute(basis_out).gs_norm_sq;
  return (potential_k(norms_in, k) - potential_k(norms_out, k)) / log2_two_over_sqrt3();
}

HiReal swap_bound_min_over_k(const IntMatrix& basis_in, const IntMatrix& basis_out) {
  const auto norms_in = gso_compute(basis_in).gs_norm_sq;
  const auto norms_out = gso_compute(basis_out).gs_norm_sq;
  const std::size_t n = norms_in.size();
  HiReal best;
  for (std::size_t k = 1; k <= n; ++k) {
    HiReal bound = (potential_k(norms_in, k) - potential_k(norms_out, k)) /
                   log2_two_over_sqrt3();
    if (k == 1 || bound < best) best = std::move(bound);
  }
  return best;
}

}  // namespace latred
