// Exact ground-field scalars: arbitrary-precision rationals and prime fields.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arq {

struct ArqError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : ArqError {
  using ArqError::ArqError;
};
struct ResourceError : ArqError {
  using ArqError::ArqError;
};
// A computation that cannot continue without breaking an internal invariant.
struct InternalError : ArqError {
  using ArqError::ArqError;
};

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }
inline std::string scalar_str(const Rational& x) { return x.get_str(); }

/// Active modulus for newly synthesized F_p constants (identity matrices,
/// pivots, ...).  Set with FpScope while working over a concrete F_p algebra;
/// mixing two attached moduli is a hard error rather than a silent wrong sum.
inline long long& fp_context() {
  thread_local long long mod = 0;
  return mod;
}

struct FpScope {
  long long saved;
  explicit FpScope(long long p) : saved(fp_context()) { fp_context() = p; }
  ~FpScope() { fp_context() = saved; }
  FpScope(const FpScope&) = delete;
};

/// Element of F_p with runtime modulus.  A value with p == 0 is an integer
/// constant created outside any FpScope; it unifies with the modulus of the
/// first attached element it meets in an arithmetic operation.
struct Fp {
  long long v = 0;
  long long p = 0;

  Fp() : v(0), p(fp_context()) {}
  Fp(long long n) : p(fp_context()) { v = norm(n, p); }
  Fp(long n) : p(fp_context()) { v = norm((long long)n, p); }
  Fp(int n) : p(fp_context()) { v = norm((long long)n, p); }
  static Fp make(long long n, long long mod) {
    Fp x;
    x.p = mod;
    x.v = norm(n, mod);
    return x;
  }
  static long long norm(long long n, long long mod) {
    if (mod == 0) return n;
    long long r = n % mod;
    return r < 0 ? r + mod : r;
  }

  static long long join(long long a, long long b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw InternalError("Fp: mixed moduli");
    return a;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long m = join(a.p, b.p);
    return make(norm(a.v, m) + norm(b.v, m), m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long m = join(a.p, b.p);
    return make(norm(a.v, m) - norm(b.v, m), m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long m = join(a.p, b.p);
    if (m == 0) return Fp(a.v * b.v);
    __int128 t = (__int128)norm(a.v, m) * norm(b.v, m);
    return make((long long)(t % m), m);
  }
  Fp operator-() const { return p ? make(-v, p) : Fp(-v); }
  Fp inv() const {
    if (p == 0) {
      if (v == 1 || v == -1) return *this;
      throw InternalError("Fp: inverse of unattached non-unit");
    }
    // extended Euclid
    long long a = v, m = p, x0 = 1, x1 = 0;
    if (a == 0) throw InternalError("Fp: division by zero");
    long long b = m;
    while (b) {
      long long q = a / b;
      long long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1 && a != -1) throw InternalError("Fp: modulus not prime?");
    if (a == -1) x0 = -x0;
    return make(x0, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  friend bool operator==(const Fp& a, const Fp& b) {
    long long m = (a.p && b.p) ? a.p : (a.p ? a.p : b.p);
    return norm(a.v, m) == norm(b.v, m);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline bool is_zero(const Fp& x) { return x.p ? x.v == 0 : x.v == 0; }
inline bool is_one(const Fp& x) { return x == Fp(1); }
inline std::string scalar_str(const Fp& x) {
  return std::to_string(x.p ? x.v : Fp::norm(x.v, 0));
}

/// Which field an algebra instance lives over.
struct FieldDesc {
  bool rational = true;
  long long p = 0;

  std::string name() const { return rational ? "Q" : "F" + std::to_string(p); }
};

template <class K>
K make_scalar(const FieldDesc& f, long long n);
template <>
inline Rational make_scalar<Rational>(const FieldDesc&, long long n) {
  return Rational((long)n);
}
template <>
inline Fp make_scalar<Fp>(const FieldDesc& f, long long n) {
  return Fp::make(n, f.p);
}

/// num/den as a field element (den invertible; for F_p reduced mod p).
template <class K>
K make_fraction(const FieldDesc& f, long long num, long long den);
template <>
inline Rational make_fraction<Rational>(const FieldDesc&, long long num, long long den) {
  Rational r((long)num, (long)den);
  r.canonicalize();
  return r;
}
template <>
inline Fp make_fraction<Fp>(const FieldDesc& f, long long num, long long den) {
  return Fp::make(num, f.p) / Fp::make(den, f.p);
}

template <class K>
constexpr bool is_rational_field = false;
template <>
inline constexpr bool is_rational_field<Rational> = true;

/// RAII field context: a no-op over Q, sets the F_p modulus otherwise.
template <class K>
struct FieldScope {
  explicit FieldScope(const FieldDesc&) {}
};
template <>
struct FieldScope<Fp> {
  FpScope scope;
  explicit FieldScope(const FieldDesc& f) : scope(f.p) {}
};

}  // namespace arq
