#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <optional>
#include <vector>

namespace latred {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
// Rationals are kept canonical (lowest terms, positive denominator) by GMP.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Invalid input (parse errors, rank deficiency, bad parameter ranges).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structural check on a computed result failed.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical rational from a numerator/denominator pair.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// floor(q) as an integer.
BigInt floor_rat(const BigRat& q);

/// Nearest integer with ties rounded toward +inf: floor(q + 1/2).
BigInt round_half_up(const BigRat& q);

// Dense integer matrix, column-major: columns are the vectors.
// Dimensions are fixed at construction.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  std::vector<BigInt> col(std::size_t c) const;
  void set_col(std::size_t c, const std::vector<BigInt>& v);
  void swap_cols(std::size_t a, std::size_t b);
  /// col_i -= q * col_j
  void sub_col_multiple(std::size_t i, std::size_t j, const BigInt& q);

  IntMatrix transposed() const;
  bool operator==(const IntMatrix& other) const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

// Dense rational matrix (used for extracted row-lattice bases and solves).
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRat& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  const BigRat& at(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

 private:
  std::size_t rows_, cols_;
  std::vector<BigRat> data_;
};

/// Sum of squared entries.
BigInt norm_sq(const std::vector<BigInt>& v);

/// <u, v> for equal-length vectors.
BigInt dot(const std::vector<BigInt>& u, const std::vector<BigInt>& v);

/// B^T * B, exact.
IntMatrix gram_matrix(const IntMatrix& b);

/// Exact max over the squared Euclidean norms of all rows and columns of A.
/// Consumers needing ||A|| take square roots in the log domain.
BigInt matrix_norm_bound(const IntMatrix& a);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
BigInt det_bareiss(const IntMatrix& m);

/// Rank over the rationals, via fraction-free elimination with full pivoting.
std::size_t rank(const IntMatrix& m);

/// Solve M x = c over the rationals for full-column-rank M (possibly
/// overdetermined). Returns nullopt when the system is inconsistent.
std::optional<std::vector<BigRat>> rational_solve(const IntMatrix& m,
                                                  const std::vector<BigRat>& c);

/// True if every entry of x is an integer.
bool all_integer(const std::vector<BigRat>& x);

// Column echelonization of G over Z by unimodular column operations
// (gcd steps). G * transform has the pivot columns lower-triangular in
// pivot order and all other columns zero, so the non-pivot columns of
// `transform` are a basis of ker(G) cap Z^n and the pivot columns of
// G * transform generate the same lattice as the columns of G.
struct ColumnEchelon {
  IntMatrix reduced;                  // G * transform
  IntMatrix transform;                // unimodular, n x n
  std::vector<std::size_t> pivot_cols;  // one per row, in row order
};
ColumnEchelon integer_column_echelon(const IntMatrix& g);

/// Basis of the integer kernel {x in Z^n : A^T x = 0} for a full-column-rank
/// n x k matrix A, by exact fraction-free elimination over Z. The columns
/// are primitive and span the full kernel lattice. Used as the reference
/// result when cross-checking the reduction pipeline.
/// Throws InputError("not full column rank") on rank-deficient input.
IntMatrix integer_kernel_basis(const IntMatrix& a);

}  // namespace latred
