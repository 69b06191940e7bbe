#include "latred/bounds.hpp"

namespace latred {

HiReal log_norm(const IntMatrix& a) {
  BigInt bound = matrix_norm_bound(a);
  if (bound == 0) throw InputError("zero matrix has no norm logarithm");
  return HiReal::log2(BigRat(bound)) / HiReal(2L);
}

HiReal swap_bound_theorem2(std::size_t n, std::size_t k, const HiReal& log_norm_a) {
  if (k < 1 || k >= n) throw InputError("need 1 <= k < n");
  const HiReal kk(static_cast<long>(k));
  const HiReal nn(static_cast<long>(n));
  HiReal numerator = kk * (nn - kk / HiReal(2L)) * log_norm_a;
  numerator += kk * kk * kk;
  numerator += (nn - kk) * kk;
  return numerator / log2_two_over_sqrt3();
}

HiReal swap_bound_classical(std::size_t n, std::size_t k, const HiReal& log_k,
                            const HiReal& log_norm_a) {
  if (k < 1 || k >= n) throw InputError("need 1 <= k < n");
  const HiReal kk(static_cast<long>(k));
  const HiReal nn(static_cast<long>(n));
  HiReal coeff = kk * (HiReal(2L) * nn - kk + HiReal(1L)) / HiReal(2L);
  return coeff * (log_k + log_norm_a) / log2_two_over_sqrt3();
}

bool principal_minor_nonzero(const IntMatrix& a) {
  const std::size_t k = a.cols();
  if (a.rows() < k) return false;
  IntMatrix top(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) top.at(r, c) = a.at(r, c);
  return det_bareiss(top) != 0;
}

Table1Row table1_row(std::size_t n, Table1K mode, const HiReal& alpha) {
  if (n < 2) throw InputError("need n >= 2");
  Table1Row row;
  switch (mode) {
    case Table1K::One:
      row.k = 1;
      row.classical_form = "O(n^2 log n + n alpha)";
      row.heuristic_form = "O(n^2 + n alpha)";
      row.new_form = "O(n alpha)";
      break;
    case Table1K::Half:
      row.k = n / 2 > 0 ? n / 2 : 1;
      row.classical_form = "O(n^3 log n + n^3 alpha)";
      row.heuristic_form = "O(n^3 + n^2 alpha)";
      row.new_form = "O(n^3 + n^2 alpha)";
      break;
    case Table1K::NMinusOne:
      row.k = n - 1;
      row.classical_form = "O(n^2 alpha)";
      row.heuristic_form = "O(n^2 alpha)";
      row.new_form = "O(n^3 + n alpha)";
      break;
  }
  const std::size_t k = row.k;
  const HiReal kk(static_cast<long>(k));
  const HiReal nn(static_cast<long>(n));
  const HiReal nk(static_cast<long>(n - k));

  // log K from the general threshold: (n-1)/2 + ((n-k)/2) log2(n-k) + k*alpha.
  HiReal log_k_general = (nn - HiReal(1L)) / HiReal(2L);
  if (n - k > 1) log_k_general += nk / HiReal(2L) * HiReal::log2(BigRat(n - k));
  log_k_general += kk * alpha;
  row.classical = swap_bound_classical(n, k, log_k_general, alpha);

  // log K from the heuristic threshold with c = 1: n + (k/(n-k)) alpha.
  HiReal log_k_heuristic = nn + kk / nk * alpha;
  row.heuristic = swap_bound_classical(n, k, log_k_heuristic, alpha);

  row.new_analysis = swap_bound_theorem2(n, k, alpha);
  return row;
}

}  // namespace latred
