// Dense univariate polynomials over the exact scalars; only what the
// idempotent machinery needs (gcd, Yun squarefree parts, small-field
// factorization by trial division, rational roots).
#pragma once

#include <vector>

#include "arq/scalar.hpp"

namespace arq {

template <class K>
struct Poly {
  std::vector<K> c;  // c[i] * x^i, no trailing zeros

  int deg() const { return (int)c.size() - 1; }
  bool is_zero_poly() const { return c.empty(); }
  static Poly zero() { return {}; }
  static Poly constant(const K& k) {
    Poly p;
    if (!is_zero(k)) p.c = {k};
    return p;
  }
  static Poly monomial(int d, const K& k) {
    Poly p;
    p.c.assign(d + 1, K(0));
    p.c[d] = k;
    p.trim();
    return p;
  }
  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  const K& lead() const { return c.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) {
        K t = a.c[i] * b.c[j];
        r.c[i + j] += t;
      }
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }

  Poly monic() const {
    Poly r = *this;
    if (r.is_zero_poly()) return r;
    K inv = K(1) / r.lead();
    for (K& x : r.c) x *= inv;
    return r;
  }
  Poly derivative() const {
    Poly r;
    if (deg() < 1) return r;
    r.c.assign(deg(), K(0));
    for (int i = 1; i <= deg(); ++i) {
      K m = K(0);
      for (int j = 0; j < i; ++j) m += K(1);  // i as a field element
      r.c[i - 1] = c[i] * m;
    }
    r.trim();
    return r;
  }
};

template <class K>
struct PolyDivMod {
  Poly<K> q, r;
};

template <class K>
PolyDivMod<K> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero_poly()) throw InternalError("poly division by zero");
  Poly<K> r = a, q;
  q.c.assign(std::max(0, a.deg() - b.deg() + 1), K(0));
  K linv = K(1) / b.lead();
  while (!r.is_zero_poly() && r.deg() >= b.deg()) {
    int d = r.deg() - b.deg();
    K f = r.lead() * linv;
    q.c[d] += f;
    for (int i = 0; i <= b.deg(); ++i) {
      K t = f * b.c[i];
      r.c[i + d] -= t;
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class K>
bool divides(const Poly<K>& b, const Poly<K>& a) {
  return divmod(a, b).r.is_zero_poly();
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero_poly()) {
    Poly<K> r = divmod(a, b).r;
    a = b;
    b = r;
  }
  return a.monic();
}

/// s*a + t*b = gcd(a,b) (monic).
template <class K>
void poly_bezout(const Poly<K>& a, const Poly<K>& b, Poly<K>& s, Poly<K>& t, Poly<K>& g) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(K(1)), s1;
  Poly<K> t0, t1 = Poly<K>::constant(K(1));
  while (!r1.is_zero_poly()) {
    auto dm = divmod(r0, r1);
    Poly<K> r2 = dm.r;
    Poly<K> s2 = s0 - dm.q * s1;
    Poly<K> t2 = t0 - dm.q * t1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  K inv = K(1) / r0.lead();
  g = r0.monic();
  s = s0 * Poly<K>::constant(inv);
  t = t0 * Poly<K>::constant(inv);
}

/// Yun's squarefree decomposition (characteristic zero): f = prod g_i^i.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_parts(const Poly<K>& f0) {
  Poly<K> f = f0.monic();
  std::vector<std::pair<Poly<K>, int>> out;
  if (f.deg() <= 0) return out;
  Poly<K> fp = f.derivative();
  Poly<K> c = poly_gcd(f, fp);
  Poly<K> w = divmod(f, c).q;
  Poly<K> y = divmod(fp, c).q;
  int k = 1;
  while (w.deg() > 0) {
    Poly<K> z = y - w.derivative();
    Poly<K> g = poly_gcd(w, z);
    if (g.deg() > 0) out.push_back({g, k});
    w = divmod(w, g).q;
    y = divmod(z, g).q;
    ++k;
  }
  return out;
}

/// Full factorization over F_p by trial division (tiny fields only).
inline std::vector<std::pair<Poly<Fp>, int>> factor_fp(Poly<Fp> f, long long p) {
  std::vector<std::pair<Poly<Fp>, int>> out;
  f = f.monic();
  auto record = [&](const Poly<Fp>& g) {
    for (auto& [h, m] : out)
      if (h == g) {
        ++m;
        return;
      }
    out.push_back({g, 1});
  };
  for (int d = 1; f.deg() > 1 && d <= f.deg() / 2; ++d) {
    double count = 1;
    for (int i = 0; i < d; ++i) count *= (double)p;
    if (count > 100000.0) throw ResourceError("factor_fp: field/degree too large");
    std::vector<long long> digits(d, 0);
    bool done = false;
    while (!done) {
      Poly<Fp> g;
      g.c.assign(d + 1, Fp(0));
      for (int i = 0; i < d; ++i) g.c[i] = Fp::make(digits[i], p);
      g.c[d] = Fp::make(1, p);
      while (f.deg() >= d && divides(g, f)) {
        record(g);
        f = divmod(f, g).q;
      }
      int i = 0;
      for (; i < d; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
      done = (i == d);
    }
  }
  if (f.deg() >= 1) record(f);
  return out;
}

template <class K>
K poly_eval(const Poly<K>& f, const K& x) {
  K r = K(0);
  for (int i = f.deg(); i >= 0; --i) {
    K t = r * x;
    r = t + f.c[i];
  }
  return r;
}

/// All rational roots of a nonzero rational polynomial (exact; divisor
/// enumeration is capped, so callers treat this as best-effort).
inline std::vector<Rational> rational_roots(const Poly<Rational>& f) {
  std::vector<Rational> roots;
  if (f.deg() <= 0) return roots;
  // clear denominators
  mpz_class den(1);
  for (const Rational& q : f.c) den = den / gcd(den, q.get_den()) * q.get_den();
  std::vector<mpz_class> c;
  for (const Rational& q : f.c) {
    Rational t = q * Rational(den);
    c.push_back(t.get_num());
  }
  int lo = 0;
  while (lo < (int)c.size() && c[lo] == 0) ++lo;
  if (lo > 0) roots.push_back(Rational(0));
  mpz_class a0 = abs(c[lo]), an = abs(c.back());
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    if (n == 0) return ds;
    mpz_class bound = 1000000;
    for (mpz_class d = 1; d * d <= n && d <= bound; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    return ds;
  };
  for (const mpz_class& pnum : divisors(a0))
    for (const mpz_class& qden : divisors(an))
      for (int sign : {1, -1}) {
        Rational cand(sign * pnum, qden);
        cand.canonicalize();
        bool seen = false;
        for (const Rational& r : roots)
          if (r == cand) seen = true;
        if (seen) continue;
        if (is_zero(poly_eval(f, cand))) roots.push_back(cand);
      }
  return roots;
}

}  // namespace arq
