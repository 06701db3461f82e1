#include "repkit/intmat.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "repkit/errors.hpp"

namespace repkit {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw BadParameters("ragged row list in matrix construction");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

bool IntMat::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw BadParameters("matrix dimension mismatch in product");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMat::row(int i) const {
  std::vector<Int> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Int> IntMat::col(int j) const {
  std::vector<Int> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw BadParameters("vector length mismatch in apply");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMat IntMat::row_slice(int i0, int i1) const {
  IntMat r(i1 - i0, cols_);
  for (int i = i0; i < i1; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i - i0, j) = at(i, j);
  return r;
}

IntMat IntMat::col_slice(int j0, int j1) const {
  IntMat r(rows_, j1 - j0);
  for (int i = 0; i < rows_; ++i)
    for (int j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
  return r;
}

IntMat IntMat::vstack(const IntMat& top, const IntMat& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw BadParameters("column mismatch in vstack");
  int cols = top.rows() != 0 ? top.cols() : bottom.cols();
  IntMat r(top.rows() + bottom.rows(), cols);
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < cols; ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
  return r;
}

IntMat IntMat::hstack(const IntMat& left, const IntMat& right) {
  if (left.rows() != right.rows()) throw BadParameters("row mismatch in hstack");
  IntMat r(left.rows(), left.cols() + right.cols());
  for (int i = 0; i < left.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) r.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols(); ++j) r.at(i, left.cols() + j) = right.at(i, j);
  }
  return r;
}

void IntMat::swap_rows(int i, int k) {
  if (i == k) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
}

void IntMat::swap_cols(int j, int k) {
  if (j == k) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, k));
}

void IntMat::add_row(int i, int k, const Int& c) {
  for (int j = 0; j < cols_; ++j) at(i, j) += c * at(k, j);
}

void IntMat::add_col(int j, int k, const Int& c) {
  for (int i = 0; i < rows_; ++i) at(i, j) += c * at(i, k);
}

void IntMat::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMat::negate_col(int j) {
  for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

namespace {

// Locates the entry of smallest nonzero absolute value in the submatrix
// starting at (t, t).  Returns false if that submatrix is zero.
bool find_min_pivot(const IntMat& d, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        best = ax;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SnfDecomposition snf_full(const IntMat& a) {
  const int m = a.rows(), n = a.cols();
  IntMat d = a;
  IntMat u = IntMat::identity(m), uinv = IntMat::identity(m);
  IntMat v = IntMat::identity(n), vinv = IntMat::identity(n);

  auto row_swap = [&](int i, int k) {
    d.swap_rows(i, k);
    u.swap_rows(i, k);
    uinv.swap_cols(i, k);
  };
  auto row_add = [&](int i, int k, const Int& c) {
    d.add_row(i, k, c);
    u.add_row(i, k, c);
    uinv.add_col(k, i, -c);
  };
  auto row_neg = [&](int i) {
    d.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  };
  auto col_swap = [&](int j, int k) {
    d.swap_cols(j, k);
    v.swap_cols(j, k);
    vinv.swap_rows(j, k);
  };
  auto col_add = [&](int j, int k, const Int& c) {
    d.add_col(j, k, c);
    v.add_col(j, k, c);
    vinv.add_row(k, j, -c);
  };

  const int nmin = std::min(m, n);
  int t = 0;
  for (; t < nmin; ++t) {
    int pi = t, pj = t;
    if (!find_min_pivot(d, t, pi, pj)) break;
    for (;;) {
      row_swap(t, pi);
      col_swap(t, pj);
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        row_add(i, t, -q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        col_add(j, t, -q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        find_min_pivot(d, t, pi, pj);
        continue;
      }
      // Pivot is now alone in its row and column; force the divisibility
      // chain by folding in any entry the pivot does not divide.
      bool fixed = true;
      for (int i = t + 1; i < m && fixed; ++i)
        for (int j = t + 1; j < n && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_add(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
      find_min_pivot(d, t, pi, pj);
    }
    if (d.at(t, t) < 0) row_neg(t);
  }

  SnfDecomposition out;
  out.left = std::move(u);
  out.left_inv = std::move(uinv);
  out.right = std::move(v);
  out.right_inv = std::move(vinv);
  out.diag.resize(nmin);
  for (int i = 0; i < nmin; ++i) out.diag[i] = d.at(i, i);
  out.rank = t;
  for (int i = 0; i + 1 < out.rank; ++i)
    assert(out.diag[i + 1] % out.diag[i] == 0);
  assert((out.left * a * out.right) == d);
  assert((out.left * out.left_inv) == IntMat::identity(m));
  assert((out.right * out.right_inv) == IntMat::identity(n));
  return out;
}

SnfResult snf(const IntMat& a) {
  SnfDecomposition full = snf_full(a);
  return SnfResult{std::move(full.left), std::move(full.diag), std::move(full.right)};
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMat hnf_rows(const IntMat& a) {
  IntMat h = a;
  const int m = h.rows(), n = h.cols();
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    for (;;) {
      int pivot = -1;
      Int best;
      for (int i = r; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Int ax = abs(h.at(i, c));
        if (pivot < 0 || ax < best) {
          best = ax;
          pivot = i;
        }
      }
      if (pivot < 0) break;
      h.swap_rows(r, pivot);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);
        h.add_row(i, r, -q);
        if (h.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) h.negate_row(r);
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      if (q != 0) h.add_row(i, r, -q);
    }
    ++r;
  }
  return h.row_slice(0, r);
}

std::optional<std::vector<Int>> solve_in_hnf(const IntMat& hnf, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != hnf.cols())
    throw BadParameters("vector length mismatch in solve_in_hnf");
  std::vector<Int> x = v;
  std::vector<Int> coeffs(hnf.rows());
  for (int i = 0; i < hnf.rows(); ++i) {
    int c = 0;
    while (c < hnf.cols() && hnf.at(i, c) == 0) ++c;
    if (c == hnf.cols()) return std::nullopt;  // zero row should not occur
    if (x[c] % hnf.at(i, c) != 0) return std::nullopt;
    Int q = x[c] / hnf.at(i, c);
    coeffs[i] = q;
    if (q != 0)
      for (int j = c; j < hnf.cols(); ++j) x[j] -= q * hnf.at(i, j);
  }
  for (const Int& e : x)
    if (e != 0) return std::nullopt;
  return coeffs;
}

Int det_bareiss(const IntMat& a) {
  if (a.rows() != a.cols()) throw BadParameters("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace repkit
