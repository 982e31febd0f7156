#include <catch2/catch_amalgamated.hpp>

#include "arq/matrix.hpp"
#include "arq/subspace.hpp"

using namespace arq;

namespace {

// deterministic small-entry matrices for property checks
struct Lcg {
  unsigned long long s;
  explicit Lcg(unsigned long long seed) : s(seed) {}
  int next(int lo, int hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + (int)((s >> 33) % (unsigned)(hi - lo + 1));
  }
};

template <class K>
Mat<K> random_mat(Lcg& g, int r, int c, const FieldDesc& f) {
  Mat<K> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = make_scalar<K>(f, g.next(-3, 3));
  return m;
}

Mat<Rational> qmat(int r, int c, std::vector<long> v) {
  Mat<Rational> m(r, c);
  int k = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(v[k++]);
  return m;
}

}  // namespace

TEST_CASE("rref identity and dependent rows") {
  Mat<Rational> id = Mat<Rational>::identity(2);
  auto r = rref(id);
  CHECK(r.rank == 2);
  CHECK(r.m == id);

  auto r2 = rref(qmat(2, 2, {2, 4, 1, 2}));
  CHECK(r2.rank == 1);
  CHECK(r2.m == qmat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref over F2") {
  FieldDesc f{false, 2};
  Mat<Fp> m(2, 2);
  m.at(0, 0) = make_scalar<Fp>(f, 1);
  m.at(0, 1) = make_scalar<Fp>(f, 1);
  m.at(1, 0) = make_scalar<Fp>(f, 1);
  m.at(1, 1) = make_scalar<Fp>(f, 2);  // = 0 mod 2
  CHECK(rref(m).rank == 2);
}

TEST_CASE("rref is idempotent") {
  Lcg g(7);
  FieldDesc q;
  for (int t = 0; t < 30; ++t) {
    Mat<Rational> m = random_mat<Rational>(g, g.next(0, 5), g.next(0, 5), q);
    auto r1 = rref(m);
    auto r2 = rref(r1.m);
    CHECK(r1.m == r2.m);
    CHECK(r1.rank == r2.rank);
  }
  FieldDesc f3{false, 3};
  for (int t = 0; t < 30; ++t) {
    Mat<Fp> m = random_mat<Fp>(g, g.next(0, 5), g.next(0, 5), f3);
    auto r1 = rref(m);
    auto r2 = rref(r1.m);
    CHECK(r1.m == r2.m);
  }
}

TEST_CASE("solve basic cases") {
  Mat<Rational> id = Mat<Rational>::identity(3);
  Mat<Rational> b = qmat(3, 1, {5, -2, 7});
  auto s = solve(id, b);
  REQUIRE(s.consistent);
  CHECK(s.x == b);
  CHECK(s.kernel.rows() == 0);

  auto s0 = solve(Mat<Rational>::zero(2, 2), Mat<Rational>::zero(2, 1));
  REQUIRE(s0.consistent);
  CHECK(s0.x == Mat<Rational>::zero(2, 1));
  CHECK(s0.kernel.rows() == 2);

  auto s1 = solve(qmat(1, 2, {1, 1}), qmat(1, 1, {1}));
  REQUIRE(s1.consistent);
  CHECK(s1.x == qmat(2, 1, {1, 0}));
  REQUIRE(s1.kernel.rows() == 1);
  // kernel spanned by (1, -1)
  CHECK(s1.kernel == qmat(1, 2, {1, -1}));

  auto bad = solve(qmat(2, 1, {0, 0}), qmat(2, 1, {1, 0}));
  CHECK(!bad.consistent);
}

TEST_CASE("solve exactness on random instances") {
  Lcg g(13);
  FieldDesc q;
  for (int t = 0; t < 40; ++t) {
    int n = g.next(1, 5), m = g.next(1, 5);
    Mat<Rational> a = random_mat<Rational>(g, n, m, q);
    Mat<Rational> x = random_mat<Rational>(g, m, 2, q);
    Mat<Rational> b = a * x;
    auto s = solve(a, b);
    REQUIRE(s.consistent);
    CHECK(a * s.x == b);
    for (int i = 0; i < s.kernel.rows(); ++i) {
      Mat<Rational> v = Mat<Rational>::from_col(s.kernel.row(i));
      CHECK((a * v).is_zero_mat());
    }
  }
}

TEST_CASE("subspace sum/intersect basics") {
  Mat<Rational> e12 = qmat(2, 3, {1, 0, 0, 0, 1, 0});
  Mat<Rational> e23 = qmat(2, 3, {0, 1, 0, 0, 0, 1});
  auto u = Subspace<Rational>::from_rows(e12);
  auto v = Subspace<Rational>::from_rows(e23);
  CHECK(sum(u, Subspace<Rational>::zero(3)) == u);
  CHECK(intersect(u, u) == u);
  auto w = intersect(u, v);
  CHECK(w.dim() == 1);
  CHECK(w.basis() == qmat(1, 3, {0, 1, 0}));
}

TEST_CASE("dimension formula on random subspaces") {
  Lcg g(101);
  FieldDesc q;
  FieldDesc f2{false, 2};
  for (int t = 0; t < 40; ++t) {
    int n = g.next(1, 5);
    auto u = Subspace<Rational>::from_rows(random_mat<Rational>(g, g.next(0, 4), n, q));
    auto v = Subspace<Rational>::from_rows(random_mat<Rational>(g, g.next(0, 4), n, q));
    auto s = sum(u, v);
    auto i = intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + i.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
  }
  for (int t = 0; t < 40; ++t) {
    int n = g.next(1, 5);
    auto u = Subspace<Fp>::from_rows(random_mat<Fp>(g, g.next(0, 4), n, f2));
    auto v = Subspace<Fp>::from_rows(random_mat<Fp>(g, g.next(0, 4), n, f2));
    CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
  }
}

TEST_CASE("complement_in yields a complement") {
  Lcg g(55);
  FieldDesc q;
  for (int t = 0; t < 30; ++t) {
    int n = g.next(1, 5);
    auto u = Subspace<Rational>::from_rows(random_mat<Rational>(g, g.next(0, 4), n, q));
    auto w = Subspace<Rational>::from_rows(random_mat<Rational>(g, g.next(0, 3), n, q));
    auto outer = sum(u, w);
    auto comp = complement_in(outer, u);
    CHECK((int)comp.size() == outer.dim() - u.dim());
    Mat<Rational> all = u.basis();
    for (auto& r : comp) all = Mat<Rational>::vstack(all, Mat<Rational>::from_row(r));
    CHECK(Subspace<Rational>::from_rows(all) == outer);
    CHECK(rref(all).rank == outer.dim());
  }
}

TEST_CASE("Fp arithmetic") {
  FieldDesc f5{false, 5};
  Fp a = make_scalar<Fp>(f5, 3), b = make_scalar<Fp>(f5, 4);
  CHECK(a * b == make_scalar<Fp>(f5, 2));
  CHECK(a + b == make_scalar<Fp>(f5, 2));
  CHECK((a / b) * b == a);
  CHECK(-a == make_scalar<Fp>(f5, 2));
  // unattached constants unify on contact
  Fp one(1);
  CHECK(one * a == a);
  CHECK(one + make_scalar<Fp>(f5, 4) == make_scalar<Fp>(f5, 0));
}
