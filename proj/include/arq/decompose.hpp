// Decomposition into indecomposables and exact isomorphism testing.
//
// Splitting strategy: find a nontrivial idempotent of End/rad by scanning a
// deterministic list of elements for a minimal polynomial with two coprime
// factors (power of x stripped; Yun parts; rational roots over Q; full
// factorization over F_p), build the CRT idempotent, lift it through the
// radical by Newton iteration, and split M along the image.
#pragma once

#include <optional>

#include "arq/endalg.hpp"

namespace arq {

namespace detail {

template <class K>
std::optional<std::pair<Poly<K>, Poly<K>>> coprime_split(const Poly<K>& mu_in);

template <>
inline std::optional<std::pair<Poly<Rational>, Poly<Rational>>> coprime_split(
    const Poly<Rational>& mu_in) {
  using P = Poly<Rational>;
  P mu = mu_in.monic();
  // strip the power of x
  int s = 0;
  while (s <= mu.deg() && is_zero(mu.c[s])) ++s;
  if (s > 0 && s <= mu.deg() && mu.deg() > s) {
    P u = P::monomial(s, Rational(1));
    P v = divmod(mu, u).q;
    return std::make_pair(u, v);
  }
  auto parts = squarefree_parts(mu);
  if (parts.size() >= 2) {
    P u = parts[0].first;
    for (int i = 1; i < parts[0].second; ++i) u = u * parts[0].first;
    P v = divmod(mu, u).q;
    if (u.deg() >= 1 && v.deg() >= 1) return std::make_pair(u, v);
  }
  // single squarefree part: try rational roots
  if (parts.size() == 1 && parts[0].first.deg() >= 2) {
    auto roots = rational_roots(parts[0].first);
    if (!roots.empty()) {
      P lin;
      lin.c = {-roots[0], Rational(1)};
      P u = lin;
      for (int i = 1; i < parts[0].second; ++i) u = u * lin;
      P v = divmod(mu, u).q;
      if (v.deg() >= 1) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

template <>
inline std::optional<std::pair<Poly<Fp>, Poly<Fp>>> coprime_split(const Poly<Fp>& mu_in) {
  using P = Poly<Fp>;
  P mu = mu_in.monic();
  if (mu.deg() < 2) return std::nullopt;
  long long p = fp_context();
  if (p == 0) throw InternalError("coprime_split<Fp>: no field context");
  auto factors = factor_fp(mu, p);
  if (factors.size() < 2) return std::nullopt;
  P u = P::constant(Fp(1));
  for (int i = 0; i < factors[0].second; ++i) u = u * factors[0].first;
  P v = divmod(mu, u).q;
  return std::make_pair(u, v);
}

/// Nontrivial idempotent from a coprime factorization mu(a) = 0, mu = u*v.
template <class K>
std::vector<K> crt_idempotent(const EndAlgebra<K>& e, const std::vector<K>& a, const Poly<K>& u,
                              const Poly<K>& v) {
  Poly<K> s, t, g;
  poly_bezout(u, v, s, t, g);
  if (g.deg() != 0) throw InternalError("crt_idempotent: factors not coprime");
  // e0 = (t*v)(a) is 1 mod u, 0 mod v
  return eval_poly(e, t * v, a);
}

}  // namespace detail

/// End(M)/rad as an algebra in its own right, with the section back to End.
template <class K>
struct SemisimpleQuotient {
  const EndAlgebra<K>* end;
  Subspace<K> rad;
  std::vector<std::vector<K>> basis;               // representatives, End coords
  std::vector<std::vector<std::vector<K>>> table;  // quotient structure constants
  std::vector<K> one;

  int dim() const { return (int)basis.size(); }

  std::vector<K> coords_in_quotient(const std::vector<K>& x) const {
    std::vector<K> red = rad.reduce(x);
    // representatives are pivot-complement rows of the full space: read off
    std::vector<K> out(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) out[i] = red[piv_[i]];
    return out;
  }
  std::vector<K> lift(const std::vector<K>& q) const {
    std::vector<K> x(end->dim(), K(0));
    for (size_t i = 0; i < basis.size(); ++i) {
      if (is_zero(q[i])) continue;
      for (int j = 0; j < end->dim(); ++j) {
        K t = q[i] * basis[i][j];
        x[j] += t;
      }
    }
    return x;
  }
  std::vector<K> mult(const std::vector<K>& a, const std::vector<K>& b) const {
    int n = dim();
    std::vector<K> r(n, K(0));
    for (int i = 0; i < n; ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (is_zero(b[j])) continue;
        K c = a[i] * b[j];
        for (int k = 0; k < n; ++k) {
          K t = c * table[i][j][k];
          r[k] += t;
        }
      }
    }
    return r;
  }

  std::vector<int> piv_;
};

template <class K>
SemisimpleQuotient<K> semisimple_quotient(const EndAlgebra<K>& e, const Subspace<K>& rad) {
  FieldScope<K> fs(e.field);
  SemisimpleQuotient<K> q;
  q.end = &e;
  q.rad = rad;
  auto comp = complement_in(Subspace<K>::full(e.dim()), rad);
  for (auto& row : comp) {
    std::vector<K> red = rad.reduce(row);
    int piv = -1;
    for (int j = 0; j < e.dim(); ++j)
      if (!is_zero(red[j])) {
        piv = j;
        break;
      }
    q.basis.push_back(red);
    q.piv_.push_back(piv);
  }
  int n = q.dim();
  q.table.assign(n, std::vector<std::vector<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      q.table[i][j] = q.coords_in_quotient(e.mult(q.basis[i], q.basis[j]));
  q.one = q.coords_in_quotient(e.one);
  return q;
}

namespace detail {

/// Minimal polynomial inside the quotient algebra.
template <class K>
Poly<K> min_poly_quot(const SemisimpleQuotient<K>& s, const std::vector<K>& a) {
  int n = s.dim();
  std::vector<std::vector<K>> powers;
  powers.push_back(s.one);
  Mat<K> stack(0, n);
  for (int k = 0;; ++k) {
    if (k > n + 1) throw InternalError("min_poly_quot: no dependence");
    if (k > 0) {
      auto sol = solve(stack.transpose(), Mat<K>::from_col(powers[k]));
      if (sol.consistent) {
        Poly<K> mu;
        mu.c.assign(k + 1, K(0));
        mu.c[k] = K(1);
        for (int i = 0; i < k; ++i) mu.c[i] = -sol.x.at(i, 0);
        return mu;
      }
    }
    stack = Mat<K>::vstack(stack, Mat<K>::from_row(powers[k]));
    powers.push_back(s.mult(a, powers[k]));
  }
}

template <class K>
std::vector<K> eval_poly_quot(const SemisimpleQuotient<K>& s, const Poly<K>& f,
                              const std::vector<K>& a) {
  int n = s.dim();
  std::vector<K> r(n, K(0));
  for (int i = f.deg(); i >= 0; --i) {
    r = s.mult(r, a);
    for (int k = 0; k < n; ++k) {
      K t = f.c[i] * s.one[k];
      r[k] += t;
    }
  }
  return r;
}

template <class K>
bool vec_eq(const std::vector<K>& a, const std::vector<K>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}
template <class K>
bool vec_zero(const std::vector<K>& a) {
  for (const K& x : a)
    if (!is_zero(x)) return false;
  return true;
}

/// Scan for a nontrivial idempotent of the semisimple quotient.
template <class K>
std::optional<std::vector<K>> find_quotient_idempotent(const SemisimpleQuotient<K>& s) {
  int n = s.dim();
  std::vector<std::vector<K>> candidates;
  for (int i = 0; i < n; ++i) {
    std::vector<K> e(n, K(0));
    e[i] = K(1);
    candidates.push_back(e);
  }
  long long cmax = is_rational_field<K> ? 3 : std::max<long long>(2, fp_context());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long long c = 1; c < cmax; ++c) {
        std::vector<K> e(n, K(0));
        e[i] = K(1);
        e[j] = K((long)c);
        candidates.push_back(e);
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<K> ei(n, K(0)), ej(n, K(0));
      ei[i] = K(1);
      ej[j] = K(1);
      candidates.push_back(s.mult(ei, ej));
    }
  for (const auto& a : candidates) {
    if (vec_zero(a)) continue;
    Poly<K> mu = min_poly_quot(s, a);
    auto split = coprime_split(mu);
    if (!split) continue;
    Poly<K> su, sv, g;
    poly_bezout(split->first, split->second, su, sv, g);
    if (g.deg() != 0) continue;
    std::vector<K> e0 = eval_poly_quot(s, sv * split->second, a);
    if (vec_zero(e0) || vec_eq(e0, s.one)) continue;
    if (!vec_eq(s.mult(e0, e0), e0)) throw InternalError("quotient idempotent not idempotent");
    return e0;
  }
  return std::nullopt;
}

template <class K>
std::vector<K> unit_vec(int n, int i) {
  std::vector<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

/// Certify that the semisimple quotient is a division algebra (so the module
/// is indecomposable even though dim End/rad > 1).  Exhaustive over small
/// F_p; over Q limited to commutative quotients generated by one element
/// whose minimal polynomial is certifiably irreducible (degree <= 3).
template <class K>
bool certify_division(const SemisimpleQuotient<K>& s) {
  int n = s.dim();
  if constexpr (!is_rational_field<K>) {
    long long p = fp_context();
    double total = 1;
    for (int i = 0; i < n; ++i) total *= (double)p;
    if (total > 65536.0) return false;
    std::vector<long long> digits(n, 0);
    for (;;) {
      std::vector<K> a(n);
      bool zero = true;
      for (int i = 0; i < n; ++i) {
        a[i] = K(digits[i]);
        if (digits[i]) zero = false;
      }
      if (!zero) {
        Mat<K> la(n, n);
        for (int j = 0; j < n; ++j) {
          std::vector<K> ej(n, K(0));
          ej[j] = K(1);
          auto col = s.mult(a, ej);
          for (int i = 0; i < n; ++i) la.at(i, j) = col[i];
        }
        if (rank_of(la) != n) return false;
      }
      int i = 0;
      for (; i < n; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
      if (i == n) return true;
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!vec_eq(s.mult(unit_vec<K>(n, i), unit_vec<K>(n, j)),
                    s.mult(unit_vec<K>(n, j), unit_vec<K>(n, i))))
          return false;  // noncommutative: no cheap certificate
    for (int i = 0; i < n; ++i) {
      Poly<K> mu = min_poly_quot(s, unit_vec<K>(n, i));
      if (mu.deg() != n || n > 3) continue;
      auto parts = squarefree_parts(mu);
      if (parts.size() != 1 || parts[0].second != 1) continue;
      if (rational_roots(mu).empty()) return true;  // irreducible of deg 2 or 3
    }
    return false;
  }
}

}  // namespace detail

/// Split M along a nontrivial idempotent of End(M), if one can be found.
/// Each half comes with its inclusion into M.
template <class K>
std::optional<std::pair<SubQuot<K>, SubQuot<K>>> split_once(const Representation<K>& m,
                                                            const EndWithRadical<K>& ew) {
  FieldScope<K> fs(m.alg->field);
  const EndAlgebra<K>& e = ew.end;
  if (e.dim() - ew.rad.dim() <= 1) return std::nullopt;  // local End: indecomposable
  auto s = semisimple_quotient(e, ew.rad);
  auto ebar = detail::find_quotient_idempotent(s);
  if (!ebar) {
    if (detail::certify_division(s)) return std::nullopt;
    throw ResourceError(
        "decompose: could not find an idempotent of End/rad (consider running over F_p)");
  }
  // lift along the radical: Newton e <- 3e^2 - 2e^3
  std::vector<K> id = s.lift(*ebar);
  for (int it = 0; it < 64; ++it) {
    std::vector<K> sq = e.mult(id, id);
    if (detail::vec_eq(sq, id)) break;
    std::vector<K> cube = e.mult(sq, id);
    for (int k = 0; k < e.dim(); ++k) {
      K three_sq = (K(1) + K(1) + K(1)) * sq[k];
      K two_cu = (K(1) + K(1)) * cube[k];
      id[k] = three_sq - two_cu;
    }
    if (it == 63) throw InternalError("idempotent lift did not converge");
  }
  if (!detail::vec_eq(e.mult(id, id), id)) throw InternalError("lifted element not idempotent");
  std::vector<K> co(e.dim());
  for (int k = 0; k < e.dim(); ++k) co[k] = e.one[k] - id[k];
  Morphism<K> em = e.element(id);
  Morphism<K> cm = e.element(co);
  if (em.is_zero_mor() || cm.is_zero_mor()) throw InternalError("idempotent lift became trivial");
  SubQuot<K> a = sub_to_rep(image_subrep(em));
  SubQuot<K> b = sub_to_rep(image_subrep(cm));
  if (a.rep.total_dim() + b.rep.total_dim() != m.total_dim())
    throw InternalError("idempotent split dimensions do not add up");
  return std::make_pair(std::move(a), std::move(b));
}

/// All indecomposable summands with their embeddings into M, discovery order.
template <class K>
std::vector<std::pair<Representation<K>, Morphism<K>>> decompose_with_embeddings(
    const Representation<K>& m) {
  std::vector<std::pair<Representation<K>, Morphism<K>>> out;
  if (m.is_zero_rep()) return out;
  auto ew = end_with_radical(m);
  auto split = split_once(m, ew);
  if (!split) {
    out.push_back({m, identity_morphism(m)});
    return out;
  }
  for (auto* half : {&split->first, &split->second})
    for (auto& [rep, emb] : decompose_with_embeddings(half->rep))
      out.push_back({rep, compose(half->map, emb)});
  return out;
}

/// All indecomposable summands, in discovery order (not grouped).
template <class K>
std::vector<Representation<K>> decompose_list(const Representation<K>& m) {
  std::vector<Representation<K>> out;
  for (auto& [rep, emb] : decompose_with_embeddings(m)) out.push_back(rep);
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism testing

struct IsoOptions {
  bool assume_indecomposable = false;
  long long grid_cap = 300000;
};

template <class K>
bool is_isomorphic(const Representation<K>& m, const Representation<K>& n,
                   IsoOptions opt = IsoOptions{});

namespace detail {

template <class K>
bool vertexwise_invertible(const Morphism<K>& f) {
  for (size_t x = 0; x < f.f.size(); ++x) {
    if (f.f[x].rows() != f.f[x].cols()) return false;
    if (rank_of(f.f[x]) != f.f[x].rows()) return false;
  }
  return true;
}

/// Exhaustive / grid search for a vertexwise invertible combination.
/// Returns the coefficients if found; sets certified=false when the search
/// space had to be cut.
template <class K>
std::optional<std::vector<K>> invertible_combo_search(const HomBasis<K>& h, long long cap,
                                                      bool& certified) {
  int d = h.dim();
  certified = true;
  if (d == 0) return std::nullopt;
  const Representation<K>& tgt = h.basis[0].tgt;
  FieldScope<K> fs(tgt.alg->field);
  // cheap candidates first: all-ones, then singles
  {
    std::vector<K> ones(d, K(1));
    if (vertexwise_invertible(h.combine(ones))) return ones;
    for (int i = 0; i < d; ++i) {
      std::vector<K> e(d, K(0));
      e[i] = K(1);
      if (vertexwise_invertible(h.combine(e))) return e;
    }
  }
  long long range;  // grid {0..range-1}
  if (is_rational_field<K>) {
    range = tgt.total_dim() + 1;  // degree bound for the determinant polynomial
  } else {
    range = fp_context();
  }
  double total = 1;
  for (int i = 0; i < d; ++i) total *= (double)range;
  if (total > (double)cap) {
    certified = false;
    return std::nullopt;
  }
  std::vector<long long> digits(d, 0);
  for (;;) {
    std::vector<K> c(d);
    bool all_zero = true;
    for (int i = 0; i < d; ++i) {
      c[i] = K((long)digits[i]);
      if (digits[i]) all_zero = false;
    }
    if (!all_zero && vertexwise_invertible(h.combine(c))) return c;
    int i = 0;
    for (; i < d; ++i) {
      if (++digits[i] < range) break;
      digits[i] = 0;
    }
    if (i == d) return std::nullopt;
  }
}

}  // namespace detail

/// Isomorphism witness between representations already known (or expected)
/// to be indecomposable-compatible; nullopt means certified non-isomorphic.
template <class K>
std::optional<Morphism<K>> find_iso(const Representation<K>& m, const Representation<K>& n,
                                    long long cap = 300000) {
  if (m.alg != n.alg || m.dims != n.dims) return std::nullopt;
  if (m.is_zero_rep()) return identity_morphism(m);
  FieldScope<K> fs(m.alg->field);
  HomBasis<K> h = hom_basis(m, n);
  if (h.dim() == 0) return std::nullopt;
  bool certified = true;
  auto combo = detail::invertible_combo_search(h, cap, certified);
  if (combo) return h.combine(*combo);
  if (!certified) throw ResourceError("find_iso: search space too large");
  return std::nullopt;
}

template <class K>
bool is_isomorphic(const Representation<K>& m, const Representation<K>& n, IsoOptions opt) {
  if (m.alg != n.alg) return false;
  if (m.dims != n.dims) return false;
  if (m.is_zero_rep()) return true;
  if (m == n) return true;
  FieldScope<K> fs(m.alg->field);
  HomBasis<K> h = hom_basis(m, n);
  if (h.dim() == 0) return false;
  bool certified = true;
  if (detail::invertible_combo_search(h, opt.grid_cap, certified)) return true;
  if (certified) return false;
  if (opt.assume_indecomposable)
    throw ResourceError("is_isomorphic: search space too large for indecomposable pair");
  // decide via decompositions
  auto pm = decompose_list(m);
  auto pn = decompose_list(n);
  if (pm.size() != pn.size()) return false;
  std::vector<bool> used(pn.size(), false);
  IsoOptions sub{true, opt.grid_cap};
  for (const auto& a : pm) {
    bool found = false;
    for (size_t j = 0; j < pn.size(); ++j) {
      if (used[j]) continue;
      if (is_isomorphic(a, pn[j], sub)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Indecomposable summands grouped by isomorphism class with multiplicities.
template <class K>
std::vector<std::pair<Representation<K>, int>> decompose(const Representation<K>& m) {
  std::vector<std::pair<Representation<K>, int>> out;
  for (auto& part : decompose_list(m)) {
    bool found = false;
    for (auto& [rep, mult] : out)
      if (is_isomorphic(rep, part, IsoOptions{true, 300000})) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.push_back({part, 1});
  }
  return out;
}

}  // namespace arq
