#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "arq/parse.hpp"
#include "arq/rep.hpp"

using namespace arq;

namespace {

const char* A2 = R"(field Q
vertex 1 2
arrow a 1 2
)";

const char* EX21 = R"(# Example 2.1: five vertices, bound by a killed length-2 composite
field Q
vertex 1 2 3 4 5
arrow a 2 3
arrow alpha 4 3
arrow gamma 5 4
arrow beta 1 4
relation beta.alpha
)";

const char* EX37 = R"(field Q
vertex 1 2 3
arrow a 2 1
arrow b 3 2
arrow c 3 1
)";

template <class K>
AlgebraPtr<K> mk(const std::string& text) {
  return build_algebra<K>(parse_algebra_text(text));
}

// Independent oracle: enumerate all paths of an acyclic quiver by DFS and
// count those avoiding every forbidden consecutive label pattern (covers the
// monomial relations used in these fixtures).
int count_paths_avoiding(const Quiver& q, const std::vector<std::vector<std::string>>& forbidden) {
  int count = 0;
  std::function<void(int, std::vector<std::string>&)> dfs = [&](int at,
                                                                std::vector<std::string>& labs) {
    for (const auto& f : forbidden)
      if (labs.size() >= f.size() && std::equal(f.begin(), f.end(), labs.end() - f.size())) return;
    ++count;
    for (int a = 0; a < q.acount(); ++a)
      if (q.arrows[a].src == at) {
        labs.push_back(q.arrows[a].label);
        dfs(q.arrows[a].tgt, labs);
        labs.pop_back();
      }
  };
  for (int x = 0; x < q.vcount(); ++x) {
    std::vector<std::string> labs;
    dfs(x, labs);
  }
  return count;
}

}  // namespace

TEST_CASE("A2 algebra basis") {
  auto a = mk<Rational>(A2);
  CHECK(a->dim() == 3);  // e1, e2, a
  CHECK(a->nilpotency_bound() == 2);
  CHECK(a->basis_dim(0, 1) == 1);
  CHECK(a->basis_dim(1, 0) == 0);
}

TEST_CASE("Example 2.1 algebra") {
  auto a = mk<Rational>(EX21);
  // oracle: paths of the quiver avoiding the killed composite beta.alpha
  int expect = count_paths_avoiding(a->quiver, {{"beta", "alpha"}});
  CHECK(expect == 10);
  CHECK(a->dim() == expect);

  const Quiver& q = a->quiver;
  Path killed{q.vertex_index.at("1"), {q.arrow_index.at("beta"), q.arrow_index.at("alpha")}};
  CHECK(a->is_zero_class(killed));
  Path alive{q.vertex_index.at("5"), {q.arrow_index.at("gamma"), q.arrow_index.at("alpha")}};
  CHECK(!a->is_zero_class(alive));

  // e_x reduces to itself
  Path e1{0, {}};
  auto v = a->nf(e1);
  REQUIRE(v.size() == 1);
  CHECK(is_one(v[0]));
}

TEST_CASE("Example 3.7 algebra (no relations)") {
  auto a = mk<Rational>(EX37);
  CHECK(a->dim() == 7);  // 3 idempotents, 3 arrows, 1 length-2 path
  int expect = count_paths_avoiding(a->quiver, {});
  CHECK(expect == 7);
  const Quiver& q = a->quiver;
  Path p32{q.vertex_index.at("3"), {q.arrow_index.at("b"), q.arrow_index.at("a")}};
  auto v = a->nf(p32);
  int nonzero = 0;
  for (auto& x : v)
    if (!is_zero(x)) ++nonzero;
  CHECK(nonzero == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(mk<Rational>("field Q\nvertex 1\narrow a 1 2\n"), InputError);
  CHECK_THROWS_AS(mk<Rational>("field Q\nvertex 1 2\narrow a 1 2\nrelation a\n"), InputError);
  // a.b does not compose (b starts at 2, reached vertex is 2 only after a)
  CHECK_THROWS_AS(mk<Rational>("field Q\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\n"
                               "relation b.a\n"),
                  InputError);
  CHECK_THROWS_AS(mk<Rational>("vertex 1\n"), InputError);
  CHECK_THROWS_AS(mk<Rational>("field F 4\nvertex 1\n"), InputError);
  // non-parallel relation
  CHECK_THROWS_AS(mk<Rational>("field Q\nvertex 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 2 4\n"
                               "relation a.b + a.c\n"),
                  InputError);
}

TEST_CASE("infinite dimensional input rejected") {
  CHECK_THROWS_AS(mk<Rational>("field Q\nvertex 1\narrow l 1 1\n"), InputError);
  // admissible power relation makes it finite
  auto a = mk<Rational>("field Q\nvertex 1\narrow l 1 1\nrelation l.l\n");
  CHECK(a->dim() == 2);
  CHECK(a->nilpotency_bound() == 2);
}

TEST_CASE("mixed-length relation (non-monomial)") {
  // a length-1 term breaks admissibility and is rejected
  CHECK_THROWS_AS(
      mk<Rational>("field Q\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\nrelation a.b - c\n"),
      InputError);
  // lengths 2 and 3 in one relation are fine
  auto a = mk<Rational>(
      "field Q\nvertex 1 2 3 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 1 3\n"
      "relation a.b.c - d.c\n");
  // 12 paths, one identification
  CHECK(a->dim() == 11);
  const Quiver& q = a->quiver;
  Path abc{0, {q.arrow_index.at("a"), q.arrow_index.at("b"), q.arrow_index.at("c")}};
  Path dc{0, {q.arrow_index.at("d"), q.arrow_index.at("c")}};
  CHECK(!a->is_zero_class(abc));
  CHECK(a->nf(abc) == a->nf(dc));
}

TEST_CASE("canonical modules over A2") {
  auto a = mk<Rational>(A2);
  auto p1 = projective(a, 0);
  auto p2 = projective(a, 1);
  auto s1 = simple(a, 0);
  auto s2 = simple(a, 1);
  CHECK(p1.dims == std::vector<int>{1, 1});
  CHECK(p2.dims == std::vector<int>{0, 1});
  CHECK(s2 == p2);
  CHECK(s1.dims == std::vector<int>{1, 0});
  CHECK(is_valid_rep(p1));
  CHECK(is_valid_rep(p2));

  auto i1 = injective(a, 0);
  auto i2 = injective(a, 1);
  CHECK(i1.dims == std::vector<int>{1, 0});
  CHECK(i2.dims == std::vector<int>{1, 1});

  // dual is an involution on the nose
  CHECK(dual(dual(p1)) == p1);
}

TEST_CASE("projective dimensions sum to dim A") {
  for (const char* txt : {A2, EX21, EX37}) {
    auto a = mk<Rational>(txt);
    long long total = 0;
    for (int x = 0; x < a->vcount(); ++x) {
      auto p = projective(a, x);
      CHECK(is_valid_rep(p));
      total += p.total_dim();
    }
    CHECK(total == a->dim());
  }
}

TEST_CASE("rad of projective and top") {
  auto a = mk<Rational>(EX21);
  for (int x = 0; x < a->vcount(); ++x) {
    auto sub = rad_of_projective(a, x);
    CHECK(is_arrow_stable(sub));
    CHECK(sub == radical_subrep(sub.ambient));
    auto top = quotient_by(sub);
    CHECK(top.rep.dims == simple(a, x).dims);  // P_x / rad P_x = S_x
  }
}

TEST_CASE("injective of Example 3.7 matches path counts into the vertex") {
  auto a = mk<Rational>(EX37);
  auto i1 = injective(a, 0);  // vertex "1"
  // paths into 1: e_1; a from 2; c and a.b from 3
  CHECK(i1.dims == std::vector<int>{1, 1, 2});
  CHECK(is_valid_rep(i1));
}

TEST_CASE("canonical modules over F_p") {
  auto d = parse_algebra_text(EX21);
  d.field = FieldDesc{false, 2};
  auto a = build_algebra<Fp>(d);
  CHECK(a->dim() == 10);
  for (int x = 0; x < a->vcount(); ++x) {
    CHECK(is_valid_rep(projective(a, x)));
    CHECK(is_valid_rep(injective(a, x)));
  }
}
