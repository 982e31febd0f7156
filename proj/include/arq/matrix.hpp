// Dense exact matrices with deterministic Gaussian elimination.
#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "arq/scalar.hpp"

namespace arq {

template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_((size_t)rows * cols) {
    assert(rows >= 0 && cols >= 0);
  }
  Mat(int rows, int cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), d_(std::move(entries)) {
    assert((size_t)rows * cols == d_.size());
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return d_[(size_t)i * cols_ + j];
  }
  const K& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return d_[(size_t)i * cols_ + j];
  }
  const std::vector<K>& data() const { return d_; }

  bool is_zero_mat() const {
    for (const K& x : d_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.d_.size(); ++i)
      if (!(a.d_[i] == b.d_[i])) return false;
    return true;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          K t = aik * b.at(k, j);
          c.at(i, j) += t;
        }
      }
    return c;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c = a;
    for (size_t i = 0; i < c.d_.size(); ++i) c.d_[i] += b.d_[i];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Mat c = a;
    for (size_t i = 0; i < c.d_.size(); ++i) c.d_[i] -= b.d_[i];
    return c;
  }
  Mat operator-() const {
    Mat c = *this;
    for (K& x : c.d_) x = -x;
    return c;
  }
  friend Mat operator*(const K& s, const Mat& a) {
    Mat c = a;
    for (K& x : c.d_) x *= s;
    return c;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<K> row(int i) const {
    std::vector<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  std::vector<K> col(int j) const {
    std::vector<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  static Mat vstack(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.cols_);
    Mat c(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) c.at(a.rows_ + i, j) = b.at(i, j);
    return c;
  }
  static Mat hstack(const Mat& a, const Mat& b) {
    assert(a.rows_ == b.rows_);
    Mat c(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) c.at(i, a.cols_ + j) = b.at(i, j);
    }
    return c;
  }
  static Mat from_row(const std::vector<K>& r) {
    Mat m(1, (int)r.size());
    for (int j = 0; j < m.cols_; ++j) m.at(0, j) = r[j];
    return m;
  }
  static Mat from_col(const std::vector<K>& c) {
    Mat m((int)c.size(), 1);
    for (int i = 0; i < m.rows_; ++i) m.at(i, 0) = c[i];
    return m;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += scalar_str(at(i, j));
      }
      s += "]\n";
    }
    return s;
  }

 private:
  int rows_, cols_;
  std::vector<K> d_;
};

template <class K>
struct RrefResult {
  Mat<K> m;
  int rank = 0;
  std::vector<int> pivots;  // pivot column of row i, for i < rank
};

/// Reduced row echelon form; leftmost-pivot, first-nonzero-row order.
template <class K>
RrefResult<K> rref(Mat<K> m) {
  RrefResult<K> r;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (!is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
    K inv = K(1) / m.at(lead, col);
    for (int j = col; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || is_zero(m.at(i, col))) continue;
      K f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        K t = f * m.at(lead, j);
        m.at(i, j) -= t;
      }
    }
    r.pivots.push_back(col);
    ++lead;
  }
  r.rank = lead;
  r.m = std::move(m);
  return r;
}

template <class K>
int rank_of(const Mat<K>& m) {
  return rref(m).rank;
}

/// Canonical basis (as rows, in RREF) of {x : a x = 0}.
template <class K>
Mat<K> kernel_basis(const Mat<K>& a) {
  RrefResult<K> r = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : r.pivots) is_piv[c] = true;
  int nfree = a.cols() - r.rank;
  Mat<K> ker(nfree, a.cols());
  int row = 0;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    ker.at(row, f) = K(1);
    for (int i = 0; i < r.rank; ++i) ker.at(row, r.pivots[i]) = -r.m.at(i, f);
    ++row;
  }
  // rows are already in echelon shape (unit at the free column), but
  // re-reduce so the result is the canonical RREF basis.
  RrefResult<K> rr = rref(std::move(ker));
  Mat<K> out(rr.rank, a.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = rr.m.at(i, j);
  return out;
}

template <class K>
struct SolveResult {
  bool consistent = false;
  Mat<K> x;       // one solution of a x = b (free variables zero)
  Mat<K> kernel;  // canonical kernel basis of a, rows
};

/// Solve a X = B exactly (X has B.cols() columns).
template <class K>
SolveResult<K> solve(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) throw InternalError("solve: dimension mismatch");
  SolveResult<K> s;
  RrefResult<K> r = rref(Mat<K>::hstack(a, b));
  s.consistent = true;
  for (int i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= a.cols()) s.consistent = false;
  s.kernel = kernel_basis(a);
  if (!s.consistent) return s;
  s.x = Mat<K>(a.cols(), b.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < b.cols(); ++j) s.x.at(r.pivots[i], j) = r.m.at(i, a.cols() + j);
  return s;
}

}  // namespace arq
