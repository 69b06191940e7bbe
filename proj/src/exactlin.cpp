#include "latred/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace latred {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor_rat(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt round_half_up(const BigRat& q) {
  return floor_rat(q + make_rat(1, 2));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::col(std::size_t c) const {
  return std::vector<BigInt>(data_.begin() + c * rows_, data_.begin() + (c + 1) * rows_);
}

void IntMatrix::set_col(std::size_t c, const std::vector<BigInt>& v) {
  std::copy(v.begin(), v.end(), data_.begin() + c * rows_);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::sub_col_multiple(std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

BigInt norm_sq(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

BigInt dot(const std::vector<BigInt>& u, const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

IntMatrix gram_matrix(const IntMatrix& b) {
  const std::size_t n = b.cols();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      BigInt s = 0;
      for (std::size_t r = 0; r < b.rows(); ++r) s += b.at(r, i) * b.at(r, j);
      g.at(i, j) = s;
      g.at(j, i) = s;
    }
  }
  return g;
}

BigInt matrix_norm_bound(const IntMatrix& a) {
  BigInt best = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    BigInt s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += a.at(r, c) * a.at(r, c);
    best = std::max(best, s);
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += a.at(r, c) * a.at(r, c);
    best = std::max(best, s);
  }
  return best;
}

BigInt det_bareiss(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < n; ++p) {
    if (a.at(p, p) == 0) {
      std::size_t r = p + 1;
      while (r < n && a.at(r, p) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(r, c));
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        BigInt t = a.at(r, c) * a.at(p, p) - a.at(r, p) * a.at(p, c);
        mpz_divexact(a.at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(r, p) = 0;
    }
    prev = a.at(p, p);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  std::size_t rk = 0;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t r = pr;
    while (r < rows && a.at(r, pc) == 0) ++r;
    if (r == rows) continue;
    if (r != pr)
      for (std::size_t c = pc; c < cols; ++c) std::swap(a.at(pr, c), a.at(r, c));
    for (std::size_t rr = pr + 1; rr < rows; ++rr) {
      for (std::size_t c = pc + 1; c < cols; ++c) {
        BigInt t = a.at(rr, c) * a.at(pr, pc) - a.at(rr, pc) * a.at(pr, c);
        mpz_divexact(a.at(rr, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(rr, pc) = 0;
    }
    prev = a.at(pr, pc);
    ++pr;
    ++rk;
  }
  return rk;
}

std::optional<std::vector<BigRat>> rational_solve(const IntMatrix& m,
                                                  const std::vector<BigRat>& c) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (c.size() != rows) throw InputError("dimension mismatch in solve");
  // Gaussian elimination over Q on the augmented system.
  std::vector<std::vector<BigRat>> a(rows, std::vector<BigRat>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t col = 0; col < cols; ++col) a[r][col] = BigRat(m.at(r, col));
    a[r][cols] = c[r];
  }
  std::vector<std::size_t> pivot_row(cols, rows);
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t r = pr;
    while (r < rows && a[r][pc] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[pr], a[r]);
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == pr || a[rr][pc] == 0) continue;
      BigRat f = a[rr][pc] / a[pr][pc];
      for (std::size_t col = pc; col <= cols; ++col) a[rr][col] -= f * a[pr][col];
    }
    pivot_row[pc] = pr;
    ++pr;
  }
  // Inconsistent if a zero row has nonzero rhs; free columns get 0.
  for (std::size_t r = pr; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  std::vector<BigRat> x(cols);
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_row[col] == rows) {
      x[col] = 0;
    } else {
      x[col] = a[pivot_row[col]][cols] / a[pivot_row[col]][col];
    }
  }
  // With free columns set to 0 the solution must still satisfy the system.
  for (std::size_t r = 0; r < rows; ++r) {
    BigRat s = 0;
    for (std::size_t col = 0; col < cols; ++col) s += BigRat(m.at(r, col)) * x[col];
    if (s != c[r]) return std::nullopt;
  }
  return x;
}

bool all_integer(const std::vector<BigRat>& x) {
  for (const auto& q : x)
    if (q.get_den() != 1) return false;
  return true;
}

ColumnEchelon integer_column_echelon(const IntMatrix& g) {
  const std::size_t k = g.rows(), n = g.cols();
  ColumnEchelon res{g, IntMatrix::identity(n), {}};
  std::vector<bool> active(n, true);

  for (std::size_t row = 0; row < k; ++row) {
    // Shrink row entries among active columns by gcd steps until one remains.
    for (;;) {
      std::size_t c0 = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (!active[c] || res.reduced.at(row, c) == 0) continue;
        if (c0 == n || mpz_cmpabs(res.reduced.at(row, c).get_mpz_t(),
                                  res.reduced.at(row, c0).get_mpz_t()) < 0)
          c0 = c;
      }
      if (c0 == n) break;  // row already clear
      bool others = false;
      for (std::size_t c = 0; c < n; ++c) {
        if (!active[c] || c == c0 || res.reduced.at(row, c) == 0) continue;
        others = true;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), res.reduced.at(row, c).get_mpz_t(),
                   res.reduced.at(row, c0).get_mpz_t());
        if (q != 0) {
          res.reduced.sub_col_multiple(c, c0, q);
          res.transform.sub_col_multiple(c, c0, q);
        }
      }
      if (!others) {
        res.pivot_cols.push_back(c0);
        active[c0] = false;
        break;
      }
    }
  }
  return res;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.rows(), k = a.cols();
  if (n < k) throw InputError("not full column rank");
  ColumnEchelon ech = integer_column_echelon(a.transposed());
  if (ech.pivot_cols.size() != k) throw InputError("not full column rank");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ech.pivot_cols) is_pivot[p] = true;
  IntMatrix kernel(n, n - k);
  std::size_t out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    for (std::size_t r = 0; r < n; ++r) kernel.at(r, out) = ech.transform.at(r, c);
    ++out;
  }
  return kernel;
}

}  // namespace latred
