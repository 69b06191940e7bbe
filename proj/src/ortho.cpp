#include "latred/ortho.hpp"

#include <string>

namespace latred {

namespace {

void require_full_column_rank(const IntMatrix& a) {
  if (a.rows() < a.cols() || rank(a) != a.cols())
    throw InputError("not full column rank");
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Smallest K >= 1 with K^(2e) * den > num, i.e. K^e > sqrt(num/den).
BigInt smallest_root_exceeding(const BigInt& num, const BigInt& den, unsigned long e) {
  BigInt q = num / den;  // floor
  BigInt k;
  mpz_root(k.get_mpz_t(), q.get_mpz_t(), 2 * e);  // floor of the true root of q
  while (pow_int(k, 2 * e) * den <= num) ++k;
  if (k < 1) k = 1;
  return k;
}

}  // namespace

ExtendedBasis build_extended(const IntMatrix& a, const BigInt& scale_k) {
  const std::size_t n = a.rows(), k = a.cols();
  if (scale_k <= 0) throw InputError("K must be positive");
  require_full_column_rank(a);

  ExtendedBasis ext{a, scale_k, IntMatrix(n + k, n), n, k};
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < k; ++row)
      ext.basis.at(row, col) = scale_k * a.at(col, row);  // K * A^T block
    ext.basis.at(k + col, col) = 1;                       // I_n block
  }
  return ext;
}

BigInt threshold_K_general(const IntMatrix& a) {
  const std::size_t n = a.rows(), k = a.cols();
  require_full_column_rank(a);
  if (n == k) throw InputError("kernel is trivial");

  // Bound^2 = 2^{n-1} * (n-k)^{n-k} * ||A||^{2k}, an exact integer: the
  // smallest K with K^2 > Bound^2 is the smallest integer > Bound.
  BigInt bound_sq = pow_int(BigInt(2), n - 1);
  bound_sq *= pow_int(BigInt(n - k), n - k);
  bound_sq *= pow_int(matrix_norm_bound(a), k);

  BigInt k_min;
  mpz_sqrt(k_min.get_mpz_t(), bound_sq.get_mpz_t());
  while (k_min * k_min <= bound_sq) ++k_min;
  return k_min;
}

BigInt threshold_K_heuristic(const IntMatrix& a, unsigned c) {
  const std::size_t n = a.rows(), k = a.cols();
  require_full_column_rank(a);
  if (n == k) throw InputError("kernel is trivial");
  if (c < 1) throw InputError("heuristic constant must be >= 1");

  // K > 2^{c*n} * ||A||^{k/(n-k)}  <=>  K^{2(n-k)} > 2^{2cn(n-k)} * ||A||^{2k}.
  const unsigned long e = n - k;
  BigInt rhs = pow_int(BigInt(2), 2ul * c * n * e);
  rhs *= pow_int(matrix_norm_bound(a), k);
  return smallest_root_exceeding(rhs, BigInt(1), e);
}

KernelResult orthogonal_lattice_basis(const IntMatrix& a, const KernelOptions& opts) {
  const std::size_t n = a.rows(), k = a.cols();
  if (k < 1) throw InputError("empty matrix");
  require_full_column_rank(a);
  if (n == k) throw InputError("kernel is trivial");

  BigInt scale;
  bool sub_threshold = false;
  switch (opts.mode) {
    case KMode::General:
      scale = threshold_K_general(a);
      break;
    case KMode::Heuristic:
      scale = threshold_K_heuristic(a, opts.heuristic_c);
      break;
    case KMode::Explicit:
      scale = opts.explicit_K;
      if (scale <= 0) throw InputError("K must be positive");
      sub_threshold = scale < threshold_K_general(a);
      break;
  }

  ExtendedBasis ext = build_extended(a, scale);
  ReductionOptions ropts;
  ropts.with_checkpoints = opts.with_checkpoints;
  ropts.on_event = opts.on_event;
  ReductionResult red = lll_reduce(ext.basis, ropts);

  // Eq.-of-termination shape: the first n-k output vectors must have an
  // exactly zero top block.
  for (std::size_t col = 0; col < n - k; ++col)
    for (std::size_t row = 0; row < k; ++row)
      if (red.basis.at(row, col) != 0)
        throw VerificationError(
            "extraction failed: nonzero scaled block in output column " +
            std::to_string(col + 1) + " (K below threshold?)");

  KernelResult result{
      n, k, a,
      IntMatrix(n, n - k), IntMatrix(k, k), IntMatrix(n, k),
      scale, red.trace.swap_count, sub_threshold, red.basis, std::move(red.trace)};
  for (std::size_t col = 0; col < n - k; ++col)
    for (std::size_t row = 0; row < n; ++row)
      result.kernel.at(row, col) = red.basis.at(k + row, col);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t row = 0; row < k; ++row)
      result.scaled_rows.at(row, col) = red.basis.at(row, n - k + col);
    for (std::size_t row = 0; row < n; ++row)
      result.residual.at(row, col) = red.basis.at(k + row, n - k + col);
  }
  return result;
}

RatMatrix extract_row_lattice_basis(const KernelResult& result) {
  const std::size_t k = result.k;
  RatMatrix rows(k, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < k; ++r) {
      const BigInt& m = result.scaled_rows.at(r, c);
      if (!mpz_divisible_p(m.get_mpz_t(), result.K_used.get_mpz_t()))
        throw VerificationError("extraction failed: M not divisible by K");
      rows.at(r, c) = make_rat(m, result.K_used);
    }

  // Every column must be an integer combination of the rows of A. The rows
  // of A generate the same lattice as the pivot columns of the echelon form
  // of A^T, which are lower triangular in pivot order: solve by forward
  // substitution and demand integer coefficients.
  ColumnEchelon ech = integer_column_echelon(result.input.transposed());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<BigRat> y(k);
    for (std::size_t r = 0; r < k; ++r) {
      BigRat rhs = rows.at(r, c);
      for (std::size_t t = 0; t < r; ++t)
        rhs -= BigRat(ech.reduced.at(r, ech.pivot_cols[t])) * y[t];
      y[r] = rhs / BigRat(ech.reduced.at(r, ech.pivot_cols[r]));
    }
    if (!all_integer(y))
      throw VerificationError("extraction failed: column " + std::to_string(c + 1) +
                              " of (1/K)M is not in the row lattice of A");
  }
  return rows;
}

KernelReport verify_kernel(const IntMatrix& a, const IntMatrix& c,
                           const ReductionParams& params) {
  const std::size_t n = a.rows(), k = a.cols();
  KernelReport report;
  if (c.rows() != n || c.cols() != n - k) {
    report.failures.push_back("kernel basis has wrong shape");
    return report;
  }

  report.orthogonal = true;
  for (std::size_t col = 0; col < c.cols(); ++col)
    for (std::size_t row = 0; row < k; ++row) {
      BigInt s = 0;
      for (std::size_t i = 0; i < n; ++i) s += a.at(i, row) * c.at(i, col);
      if (s != 0) report.orthogonal = false;
    }
  if (!report.orthogonal) report.failures.push_back("A^T * C != 0");

  report.full_rank = rank(c) == n - k;
  if (!report.full_rank) report.failures.push_back("C is not full column rank");

  if (report.full_rank) {
    report.lll_reduced = is_lll_reduced(c, params);
    if (!report.lll_reduced) report.failures.push_back("C is not LLL-reduced");
  }

  // Mutual membership against the elimination-based kernel basis.
  if (report.orthogonal && report.full_rank) {
    IntMatrix ref = integer_kernel_basis(a);
    bool equal = true;
    auto member = [](const IntMatrix& basis, const std::vector<BigInt>& v) {
      std::vector<BigRat> rhs(v.begin(), v.end());
      auto x = rational_solve(basis, rhs);
      return x.has_value() && all_integer(*x);
    };
    for (std::size_t col = 0; col < c.cols() && equal; ++col)
      if (!member(ref, c.col(col))) equal = false;
    for (std::size_t col = 0; col < ref.cols() && equal; ++col)
      if (!member(c, ref.col(col))) equal = false;
    report.lattice_equal = equal;
    if (!equal) report.failures.push_back("C does not generate the full kernel lattice");
  }
  return report;
}

SeparationReport verify_output_separation(const IntMatrix& reduced_extended,
                                          std::size_t n, std::size_t k,
                                          const BigInt& scale_k) {
  SeparationReport report;
  GSOState st = gso_compute(reduced_extended);
  if (st.size() != n) {
    report.failures.push_back("reduced basis has wrong column count");
    return report;
  }

  report.separated = true;
  for (std::size_t i = 0; i < n - k && report.separated; ++i)
    for (std::size_t j = n - k; j < n; ++j)
      if (!(st.gs_norm_sq[i] < st.gs_norm_sq[j])) {
        report.separated = false;
        report.failures.push_back("GS norms not separated at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        break;
      }

  // ||b'_{n-k+j}*||^2 >= 2^{1-j} K^2 for j = 1..k.
  report.floor_ok = true;
  const BigRat k_sq(scale_k * scale_k);
  for (std::size_t j = 1; j <= k; ++j) {
    BigRat floor_val = j == 1 ? k_sq : k_sq / BigRat(pow_int(BigInt(2), j - 1));
    if (!(st.gs_norm_sq[n - k + j - 1] >= floor_val)) {
      report.floor_ok = false;
      report.failures.push_back("GS norm floor violated at trailing position " +
                                std::to_string(j));
    }
  }
  return report;
}

}  // namespace latred
