// Endomorphism algebras: structure constants, minimal polynomials and the
// exact Jacobson radical (trace form in char 0 or p > dim; the Friedl-Ronyai
// iterated trace forms for small p).
#pragma once

#include <vector>

#include "arq/poly.hpp"
#include "arq/rep.hpp"

namespace arq {

template <class K>
struct EndAlgebra {
  FieldDesc field;
  HomBasis<K> hom;
  std::vector<std::vector<std::vector<K>>> table;  // table[i][j] = coords of B_i o B_j
  std::vector<K> one;                              // coords of the identity

  int dim() const { return hom.dim(); }

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

  /// Matrix of left multiplication by the element with the given coords.
  Mat<K> left_mult_matrix(const std::vector<K>& a) const {
    int n = dim();
    Mat<K> m(n, n);
    for (int j = 0; j < n; ++j) {
      std::vector<K> ej(n, K(0));
      ej[j] = K(1);
      std::vector<K> col = mult(a, ej);
      for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  Morphism<K> element(const std::vector<K>& coords) const { return hom.combine(coords); }
};

template <class K>
EndAlgebra<K> make_end(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  EndAlgebra<K> e;
  e.field = m.alg->field;
  e.hom = hom_basis(m, m);
  int n = e.hom.dim();
  e.table.assign(n, std::vector<std::vector<K>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e.table[i][j] = e.hom.coords_of(compose(e.hom.basis[i], e.hom.basis[j]));
  e.one = e.hom.coords_of(identity_morphism(m));
  return e;
}

template <class K>
K mat_trace(const Mat<K>& m) {
  K t = K(0);
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

/// Minimal polynomial of an algebra element (via its regular representation).
template <class K>
Poly<K> min_poly(const EndAlgebra<K>& e, const std::vector<K>& a) {
  FieldScope<K> fs(e.field);
  int n = e.dim();
  std::vector<std::vector<K>> powers;  // coords of a^k
  powers.push_back(e.one);
  Mat<K> stack(0, n);
  for (int k = 0;; ++k) {
    if (k > n + 1) throw InternalError("min_poly: no dependence found");
    // is powers[k] in the span of the previous ones?
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
    powers.push_back(e.mult(a, powers[k]));
  }
}

/// Evaluate a polynomial at an algebra element.
template <class K>
std::vector<K> eval_poly(const EndAlgebra<K>& e, const Poly<K>& f, const std::vector<K>& a) {
  FieldScope<K> fs(e.field);
  int n = e.dim();
  std::vector<K> r(n, K(0));
  for (int i = f.deg(); i >= 0; --i) {
    r = e.mult(r, a);
    for (int k = 0; k < n; ++k) {
      K t = f.c[i] * e.one[k];
      r[k] += t;
    }
  }
  return r;
}

namespace detail {

/// Dickson trace-form radical: valid in char 0 or char p > dim.
template <class K>
Subspace<K> radical_trace_form(const EndAlgebra<K>& e) {
  int n = e.dim();
  std::vector<Mat<K>> lm;
  for (int i = 0; i < n; ++i) {
    std::vector<K> ei(n, K(0));
    ei[i] = K(1);
    lm.push_back(e.left_mult_matrix(ei));
  }
  Mat<K> form(n, n);  // form[k][j] = Tr(L_{B_j B_k})
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) form.at(k, j) = mat_trace(lm[j] * lm[k]);
  return Subspace<K>::from_rows(kernel_basis(form));
}

/// Friedl-Ronyai radical over a prime field F_p (any p).  Iteratively cuts
/// A(i) = {x in A(i-1) : Tr((xy)^{p^{i-1}}) = 0 mod p^i for all y in A(i-1)},
/// where the traces are taken over integer lifts of the regular
/// representation; x -> Tr((xy)^{p^{i-1}})/p^{i-1} mod p is F_p-linear on
/// A(i-1), and A(k) = Rad for p^{k-1} <= dim < p^k.
inline Subspace<Fp> radical_small_p(const EndAlgebra<Fp>& e, long long p) {
  int n = e.dim();
  Subspace<Fp> r = Subspace<Fp>::full(n);
  mpz_class pi(1);        // p^{i-1}
  mpz_class pmod((long)p);  // p^i
  for (long long pk = 1; pk <= n; pk *= p, pi *= (long)p, pmod *= (long)p) {
    if (r.dim() == 0) break;
    int d = r.dim();
    std::vector<Mat<Rational>> lift;  // integer lifts of left multiplication
    for (int i = 0; i < d; ++i) {
      std::vector<Fp> bi(n, Fp(0));
      for (int c = 0; c < n; ++c) bi[c] = r.basis().at(i, c);
      Mat<Fp> lm = e.left_mult_matrix(bi);
      Mat<Rational> zm(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) zm.at(a, b) = Rational((long)Fp::norm(lm.at(a, b).v, p));
      lift.push_back(std::move(zm));
    }
    Mat<Fp> cond(d, d);  // cond[y][x] = Tr((X Y)^{p^{i-1}}) / p^{i-1} mod p
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) {
        Mat<Rational> prod = lift[x] * lift[y];
        Mat<Rational> pw = Mat<Rational>::identity(n);
        for (long long q = 0; q < pk; ++q) pw = pw * prod;
        Rational t = mat_trace(pw);
        mpz_class num = t.get_num();
        if (num % pi != 0) throw InternalError("radical_small_p: trace congruence violated");
        mpz_class quo = num / pi;
        mpz_class rem = quo % (long)p;
        if (rem < 0) rem += (long)p;
        cond.at(y, x) = Fp::make(rem.get_si(), p);
      }
    Mat<Fp> ker = kernel_basis(cond);  // coefficients over the current basis
    Mat<Fp> rows(ker.rows(), n);
    for (int i = 0; i < ker.rows(); ++i)
      for (int c = 0; c < d; ++c) {
        const Fp& f = ker.at(i, c);
        if (is_zero(f)) continue;
        for (int j = 0; j < n; ++j) {
          Fp t = f * r.basis().at(c, j);
          rows.at(i, j) += t;
        }
      }
    r = Subspace<Fp>::from_rows(rows);
  }
  return r;
}

template <class K>
Subspace<K> radical_impl(const EndAlgebra<K>& e) {
  return radical_trace_form(e);
}
template <>
inline Subspace<Fp> radical_impl<Fp>(const EndAlgebra<Fp>& e) {
  long long p = e.field.p;
  if (p == 0 || p > e.dim()) return radical_trace_form(e);
  return radical_small_p(e, p);
}

}  // namespace detail

/// Jacobson radical of End(M), as a subspace in hom-basis coordinates.
/// Verified: the result is closed under multiplication and nilpotent.
template <class K>
Subspace<K> radical_end(const EndAlgebra<K>& e) {
  FieldScope<K> fs(e.field);
  Subspace<K> r = detail::radical_impl(e);
  // cheap structural verification (catches an invalid characteristic case)
  int n = e.dim();
  std::vector<std::vector<K>> cur;
  for (int i = 0; i < r.dim(); ++i) {
    std::vector<K> v(n);
    for (int j = 0; j < n; ++j) v[j] = r.basis().at(i, j);
    cur.push_back(v);
  }
  for (int iter = 0; iter < n + 1 && !cur.empty(); ++iter) {
    Mat<K> next(0, n);
    for (const auto& u : cur)
      for (int i = 0; i < r.dim(); ++i) {
        std::vector<K> b(n);
        for (int j = 0; j < n; ++j) b[j] = r.basis().at(i, j);
        next = Mat<K>::vstack(next, Mat<K>::from_row(e.mult(u, b)));
      }
    auto sp = Subspace<K>::from_rows(next);
    cur.clear();
    for (int i = 0; i < sp.dim(); ++i) {
      std::vector<K> v(n);
      for (int j = 0; j < n; ++j) v[j] = sp.basis().at(i, j);
      cur.push_back(v);
    }
    if (!r.contains(sp)) throw InternalError("radical_end: not an ideal");
  }
  if (!cur.empty()) throw InternalError("radical_end: radical candidate not nilpotent");
  return r;
}

/// End(M) together with its radical; enforces the characteristic policy.
template <class K>
struct EndWithRadical {
  EndAlgebra<K> end;
  Subspace<K> rad;
};

template <class K>
EndWithRadical<K> end_with_radical(const Representation<K>& m) {
  EndWithRadical<K> r;
  r.end = make_end(m);
  r.rad = radical_end(r.end);
  return r;
}

}  // namespace arq
