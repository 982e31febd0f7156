// Bound quiver algebras: path basis modulo an admissible relation ideal.
//
// The algebra product follows function composition (p*q defined when
// src(p) = tgt(q)), so a path literal written in traversal order "b.a"
// denotes the element a*b.  Left modules are representations with one
// vector space per vertex and M_alpha : V_src -> V_tgt per arrow.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arq/matrix.hpp"
#include "arq/quiver.hpp"

namespace arq {

template <class K>
struct Relation {
  std::vector<std::pair<K, Path>> terms;  // parallel paths, length >= 2
};

namespace detail {

/// Row space in echelon form with unit pivots; supports canonical reduction.
template <class K>
class EchelonSpace {
 public:
  /// Reduce v by the stored rows (v may be shorter than current width).
  std::vector<K> reduce(std::vector<K> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      int p = pivots_[r];
      if (p >= (int)v.size()) continue;
      K f = v[p];
      if (is_zero(f)) continue;
      const auto& row = rows_[r];
      if (v.size() < row.size()) v.resize(row.size(), K(0));
      for (size_t j = p; j < row.size(); ++j) {
        K t = f * row[j];
        v[j] -= t;
      }
    }
    return v;
  }

  /// Insert v into the space; returns false if it was already in the span.
  bool add(std::vector<K> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) {
        p = (int)j;
        break;
      }
    if (p < 0) return false;
    K inv = K(1) / v[p];
    for (size_t j = p; j < v.size(); ++j) v[j] *= inv;
    // eliminate the new pivot from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      if (p >= (int)row.size()) continue;
      K f = row[p];
      if (is_zero(f)) continue;
      if (row.size() < v.size()) row.resize(v.size(), K(0));
      for (size_t j = p; j < v.size(); ++j) {
        K t = f * v[j];
        row[j] -= t;
      }
    }
    size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool is_pivot(int coord) const {
    return std::binary_search(pivots_.begin(), pivots_.end(), coord);
  }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  std::vector<std::vector<K>> rows_;
  std::vector<int> pivots_;
};

}  // namespace detail

template <class K>
class Algebra : public std::enable_shared_from_this<Algebra<K>> {
 public:
  Quiver quiver;
  FieldDesc field;
  std::vector<Relation<K>> relations;
  std::string name;
  int max_path_len = 32;

  static std::shared_ptr<const Algebra> make(Quiver q, std::vector<Relation<K>> rels,
                                             FieldDesc f, std::string name = "A",
                                             int max_len = 32) {
    auto a = std::shared_ptr<Algebra>(new Algebra);
    a->quiver = std::move(q);
    a->field = f;
    a->relations = std::move(rels);
    a->name = std::move(name);
    a->max_path_len = max_len;
    FieldScope<K> fs(a->field);
    a->build();
    return a;
  }

  int vcount() const { return quiver.vcount(); }
  int acount() const { return quiver.acount(); }
  long long dim() const { return dim_; }
  int nilpotency_bound() const { return nilpotency_; }

  const std::vector<Path>& basis(int src, int tgt) const {
    return basis_[(size_t)src * vcount() + tgt];
  }
  int basis_dim(int src, int tgt) const { return (int)basis(src, tgt).size(); }

  /// Coordinates of the residue class of p over basis(p.src, p.target).
  std::vector<K> nf(const Path& p) const {
    if (!p.valid(quiver)) throw InternalError("nf: invalid path");
    int t = p.target(quiver);
    std::vector<K> out(basis_dim(p.src, t), K(0));
    if (p.length() >= nilpotency_) return out;
    auto it = nf_.find(p.key());
    if (it == nf_.end()) throw InternalError("nf: path not enumerated: " + p.display(quiver));
    return it->second;
  }
  bool is_zero_class(const Path& p) const {
    auto v = nf(p);
    for (const K& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  /// The opposite algebra (arrows and relation paths reversed).  Cached;
  /// op() of the opposite returns this object again.
  std::shared_ptr<const Algebra> op() const {
    if (op_) return op_;
    std::vector<Relation<K>> rrels;
    for (const auto& r : relations) {
      Relation<K> rr;
      for (const auto& [c, p] : r.terms) rr.terms.push_back({c, p.reversed_for(quiver)});
      rrels.push_back(std::move(rr));
    }
    auto o = make(quiver.reversed(), std::move(rrels), field, name + "^op", max_path_len);
    // deliberate shared_ptr cycle: algebra pairs live for the process
    o->op_ = this->shared_from_this();
    op_ = o;
    return op_;
  }

 private:
  Algebra() = default;

  void validate_relations() const {
    for (const auto& r : relations) {
      if (r.terms.empty()) throw InputError("empty relation");
      int s = -1, t = -1;
      for (const auto& [c, p] : r.terms) {
        if (is_zero(c)) throw InputError("zero coefficient in relation");
        if (!p.valid(quiver)) throw InputError("relation path does not compose");
        if (p.length() < 2)
          throw InputError("relation term of length < 2 (ideal not admissible)");
        int pt = p.target(quiver);
        if (s < 0) {
          s = p.src;
          t = pt;
        } else if (s != p.src || t != pt) {
          throw InputError("relation terms are not parallel");
        }
      }
    }
  }

  void build() {
    validate_relations();
    int V = vcount();
    pair_paths_.assign((size_t)V * V, {});
    pair_index_.clear();
    spaces_.assign((size_t)V * V, {});

    int spread = 0;
    for (const auto& r : relations) {
      int mn = 1 << 30, mx = 0;
      for (const auto& [c, p] : r.terms) {
        mn = std::min(mn, p.length());
        mx = std::max(mx, p.length());
      }
      spread = std::max(spread, mx - mn);
    }

    std::vector<std::vector<Path>> by_len;
    size_t total_paths = 0;
    int zero_run_start = -1;
    int ell = 0;
    for (;; ++ell) {
      if (ell > max_path_len)
        throw InputError("algebra dimension not finite within max path length " +
                         std::to_string(max_path_len));
      std::vector<Path> cur;
      if (ell == 0) {
        for (int x = 0; x < V; ++x) cur.push_back(Path{x, {}});
      } else {
        for (const Path& p : by_len[ell - 1]) {
          int t = p.target(quiver);
          for (int a = 0; a < acount(); ++a)
            if (quiver.arrows[a].src == t) cur.push_back(p.then_arrow(a));
        }
        std::sort(cur.begin(), cur.end(),
                  [&](const Path& a, const Path& b) { return path_lex_less(quiver, a, b); });
      }
      total_paths += cur.size();
      if (total_paths > 500000)
        throw ResourceError("path enumeration exceeded resource bound");
      for (const Path& p : cur) {
        int pi = pair_of(p.src, p.target(quiver));
        pair_index_[p.key()] = (int)pair_paths_[pi].size();
        pair_paths_[pi].push_back(p);
      }
      by_len.push_back(cur);

      // relation multiples whose longest term has length ell
      for (const auto& r : relations) {
        int mx = 0, rs = r.terms[0].second.src, rt = r.terms[0].second.target(quiver);
        for (const auto& [c, p] : r.terms) mx = std::max(mx, p.length());
        int rest = ell - mx;
        if (rest < 0) continue;
        for (int a = 0; a <= rest; ++a) {
          int b = rest - a;
          for (const Path& w1 : by_len[a]) {
            if (w1.target(quiver) != rs) continue;
            for (const Path& w2 : by_len[b]) {
              if (w2.src != rt) continue;
              int pi = pair_of(w1.src, w2.target(quiver));
              std::vector<K> row(pair_paths_[pi].size(), K(0));
              for (const auto& [c, p] : r.terms) {
                Path full = w1.then(p).then(w2);
                row[pair_index_.at(full.key())] += c;
              }
              spaces_[pi].add(std::move(row));
            }
          }
        }
      }

      bool all_zero = true;
      for (const Path& p : cur) {
        int pi = pair_of(p.src, p.target(quiver));
        std::vector<K> unit(pair_index_.at(p.key()) + 1, K(0));
        unit.back() = K(1);
        auto red = spaces_[pi].reduce(unit);
        bool z = true;
        for (const K& x : red)
          if (!is_zero(x)) {
            z = false;
            break;
          }
        if (!z) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) {
        if (zero_run_start < 0) zero_run_start = ell;
      } else {
        zero_run_start = -1;
      }
      if (cur.empty()) break;                                       // no longer paths exist
      if (zero_run_start >= 0 && ell - zero_run_start >= spread) break;
    }

    // collect basis = non-pivot paths; all have fully reduced unit vectors
    basis_.assign((size_t)V * V, {});
    dim_ = 0;
    int max_basis_len = -1;
    for (int s = 0; s < V; ++s)
      for (int t = 0; t < V; ++t) {
        int pi = pair_of(s, t);
        for (int i = 0; i < (int)pair_paths_[pi].size(); ++i)
          if (!spaces_[pi].is_pivot(i)) {
            basis_[pi].push_back(pair_paths_[pi][i]);
            max_basis_len = std::max(max_basis_len, pair_paths_[pi][i].length());
          }
        dim_ += (long long)basis_[pi].size();
      }
    nilpotency_ = max_basis_len + 1;

    // normal forms of every enumerated path, over the basis coordinates
    for (int s = 0; s < V; ++s)
      for (int t = 0; t < V; ++t) {
        int pi = pair_of(s, t);
        std::vector<int> to_basis(pair_paths_[pi].size(), -1);
        for (int b = 0; b < (int)basis_[pi].size(); ++b)
          to_basis[pair_index_.at(basis_[pi][b].key())] = b;
        for (int i = 0; i < (int)pair_paths_[pi].size(); ++i) {
          std::vector<K> unit(i + 1, K(0));
          unit.back() = K(1);
          auto red = spaces_[pi].reduce(unit);
          std::vector<K> coords(basis_[pi].size(), K(0));
          for (int j = 0; j < (int)red.size(); ++j)
            if (!is_zero(red[j])) {
              if (to_basis[j] < 0) throw InternalError("nf supported on pivot coordinate");
              coords[to_basis[j]] = red[j];
            }
          nf_[pair_paths_[pi][i].key()] = std::move(coords);
        }
      }
    pair_index_.clear();
    spaces_.clear();
    pair_paths_.clear();
  }

  int pair_of(int s, int t) const { return s * vcount() + t; }

  long long dim_ = 0;
  int nilpotency_ = 1;
  std::vector<std::vector<Path>> basis_;
  std::map<std::string, std::vector<K>> nf_;
  mutable std::shared_ptr<const Algebra> op_;

  // scratch used only during build()
  std::vector<std::vector<Path>> pair_paths_;
  std::map<std::string, int> pair_index_;
  std::vector<detail::EchelonSpace<K>> spaces_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

}  // namespace arq
