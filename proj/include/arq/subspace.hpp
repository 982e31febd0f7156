// Subspaces of K^n with a canonical RREF basis, so equality is syntactic.
#pragma once

#include <vector>

#include "arq/matrix.hpp"

namespace arq {

template <class K>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of m (canonicalized).
  static Subspace from_rows(const Mat<K>& m) {
    Subspace s(m.cols());
    RrefResult<K> r = rref(m);
    Mat<K> b(r.rank, m.cols());
    for (int i = 0; i < r.rank; ++i)
      for (int j = 0; j < m.cols(); ++j) b.at(i, j) = r.m.at(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient) { return from_rows(Mat<K>::identity(ambient)); }
  /// Column space of m, as a subspace of K^rows.
  static Subspace col_space(const Mat<K>& m) { return from_rows(m.transpose()); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat<K>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_zero_space() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Reduce v modulo the basis: the canonical representative of v + this.
  std::vector<K> reduce(std::vector<K> v) const {
    for (int i = 0; i < basis_.rows(); ++i) {
      K f = v[pivots_[i]];
      if (is_zero(f)) continue;
      for (int j = 0; j < ambient_; ++j) {
        K t = f * basis_.at(i, j);
        v[j] -= t;
      }
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    std::vector<K> r = reduce(v);
    for (const K& x : r)
      if (!is_zero(x)) return false;
    return true;
  }
  bool contains(const Subspace& other) const {
    for (int i = 0; i < other.basis_.rows(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    return from_rows(Mat<K>::vstack(a.basis_, b.basis_));
  }

  /// Intersection via the left kernel of the stacked system [U; V].
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    Mat<K> w = Mat<K>::vstack(a.basis_, b.basis_);
    Mat<K> lk = kernel_basis(w.transpose());  // rows (c_a | c_b) with c_a U + c_b V = 0
    Mat<K> rows(lk.rows(), a.ambient_);
    for (int i = 0; i < lk.rows(); ++i)
      for (int r = 0; r < a.basis_.rows(); ++r) {
        const K& c = lk.at(i, r);
        if (is_zero(c)) continue;
        for (int j = 0; j < a.ambient_; ++j) {
          K t = c * a.basis_.at(r, j);
          rows.at(i, j) += t;
        }
      }
    return from_rows(rows);
  }

 private:
  static void check_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw InternalError("subspace: ambient mismatch");
  }
  int ambient_;
  Mat<K> basis_;
  std::vector<int> pivots_;
};

/// Canonical complement of `inner` inside `outer` (inner must be contained in
/// outer): the rows of outer's basis whose pivots are not pivots of inner.
template <class K>
std::vector<std::vector<K>> complement_in(const Subspace<K>& outer, const Subspace<K>& inner) {
  std::vector<bool> taken(outer.ambient(), false);
  for (int c : inner.pivots()) taken[c] = true;
  std::vector<std::vector<K>> out;
  for (int i = 0; i < outer.dim(); ++i)
    if (!taken[outer.pivots()[i]]) out.push_back(outer.basis().row(i));
  return out;
}

}  // namespace arq
