// Exhaustive enumeration of subrepresentations over small prime fields.
#pragma once

#include <functional>

#include "arq/rep.hpp"

namespace arq {

struct EnumBounds {
  int max_total_dim = 8;
  long long max_p = 3;
};

namespace detail {

/// All subspaces of F_p^d, each given by its canonical RREF basis, ordered
/// by (dimension, pivot columns, free entries).
inline std::vector<Subspace<Fp>> all_subspaces(int d, long long p) {
  std::vector<Subspace<Fp>> out;
  out.push_back(Subspace<Fp>::zero(d));
  for (int r = 1; r <= d; ++r) {
    // pivot column combinations in lexicographic order
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    for (;;) {
      // free entry positions: (i, j) with j > comb[i], j not a pivot
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_piv(d, false);
      for (int c : comb) is_piv[c] = true;
      for (int i = 0; i < r; ++i)
        for (int j = comb[i] + 1; j < d; ++j)
          if (!is_piv[j]) free_pos.push_back({i, j});
      std::vector<long long> digits(free_pos.size(), 0);
      for (;;) {
        Mat<Fp> m(r, d);
        for (int i = 0; i < r; ++i) m.at(i, comb[i]) = Fp::make(1, p);
        for (size_t k = 0; k < free_pos.size(); ++k)
          m.at(free_pos[k].first, free_pos[k].second) = Fp::make(digits[k], p);
        out.push_back(Subspace<Fp>::from_rows(m));
        size_t k = 0;
        for (; k < free_pos.size(); ++k) {
          if (++digits[k] < p) break;
          digits[k] = 0;
        }
        if (k == free_pos.size()) break;
      }
      // next combination
      int i = r - 1;
      while (i >= 0 && comb[i] == d - r + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace detail

/// Every subrepresentation of M (including 0 and M), deterministic order.
/// Requires F_p with small bounds; over Q the enumeration is infinite.
inline std::vector<SubRep<Fp>> submodule_enumerate(const Representation<Fp>& m,
                                                   EnumBounds bounds = EnumBounds{}) {
  const FieldDesc& f = m.alg->field;
  if (f.rational) throw InputError("submodule_enumerate: field must be F_p");
  if (f.p > bounds.max_p)
    throw ResourceError("submodule_enumerate: p exceeds bound " + std::to_string(bounds.max_p));
  if (m.total_dim() > bounds.max_total_dim)
    throw ResourceError("submodule_enumerate: total dimension exceeds bound " +
                        std::to_string(bounds.max_total_dim));
  FieldScope<Fp> fs(f);
  const Quiver& q = m.alg->quiver;
  int V = q.vcount();
  std::vector<std::vector<Subspace<Fp>>> choices;
  for (int x = 0; x < V; ++x) choices.push_back(detail::all_subspaces(m.dims[x], f.p));

  std::vector<SubRep<Fp>> out;
  std::vector<Subspace<Fp>> picked(V, Subspace<Fp>());
  std::function<void(int)> dfs = [&](int x) {
    if (x == V) {
      out.push_back(SubRep<Fp>{m, picked});
      return;
    }
    for (const auto& u : choices[x]) {
      picked[x] = u;
      bool ok = true;
      for (int a = 0; a < q.acount() && ok; ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        if (s > x || t > x) continue;  // endpoint not chosen yet
        const Subspace<Fp>& us = picked[s];
        const Subspace<Fp>& ut = picked[t];
        for (int i = 0; i < us.dim() && ok; ++i) {
          Mat<Fp> img = m.mats[a] * Mat<Fp>::from_col(us.basis().row(i));
          if (!ut.contains(img.col(0))) ok = false;
        }
      }
      if (ok) dfs(x + 1);
    }
    picked[x] = Subspace<Fp>();
  };
  dfs(0);
  return out;
}

}  // namespace arq
