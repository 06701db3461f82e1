#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace repkit {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix over arbitrary-precision integers.  All lattice arithmetic in
// this project runs through this type; there is no floating point anywhere.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  bool is_zero() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator-() const;
  IntMat transpose() const;

  std::vector<Int> row(int i) const;
  std::vector<Int> col(int j) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

  IntMat row_slice(int i0, int i1) const;  // rows [i0, i1)
  IntMat col_slice(int j0, int j1) const;  // cols [j0, j1)
  static IntMat vstack(const IntMat& top, const IntMat& bottom);
  static IntMat hstack(const IntMat& left, const IntMat& right);

  void swap_rows(int i, int k);
  void swap_cols(int j, int k);
  void add_row(int i, int k, const Int& c);  // row_i += c * row_k
  void add_col(int j, int k, const Int& c);  // col_j += c * col_k
  void negate_row(int i);
  void negate_col(int j);

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Smith normal form: left * A * right is diagonal with nonnegative entries
// d_1 | d_2 | ... | d_k followed by zeros.  left and right are unimodular.
struct SnfResult {
  IntMat left;
  std::vector<Int> diag;  // length min(rows, cols)
  IntMat right;
};

// Same data plus the inverses of the transforms, tracked during reduction.
struct SnfDecomposition {
  IntMat left, left_inv;
  std::vector<Int> diag;
  IntMat right, right_inv;
  int rank = 0;  // number of nonzero diagonal entries
};

SnfResult snf(const IntMat& a);
SnfDecomposition snf_full(const IntMat& a);

// Row-style Hermite normal form of the row space: pivots positive, entries
// above each pivot reduced into [0, pivot), zero rows dropped.  The result is
// the canonical basis of the lattice spanned by the rows of `a`.
IntMat hnf_rows(const IntMat& a);

// Expresses v as an integer combination of the rows of an HNF basis, if
// possible.  Returns the coefficient vector (one entry per row).
std::optional<std::vector<Int>> solve_in_hnf(const IntMat& hnf, const std::vector<Int>& v);

Int det_bareiss(const IntMat& a);  // exact determinant of a square matrix

Int binomial(long long n, long long k);

}  // namespace repkit
