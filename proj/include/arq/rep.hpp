// Representations of a bound quiver algebra and their morphisms.
#pragma once

#include <algorithm>
#include <vector>

#include "arq/algebra.hpp"
#include "arq/subspace.hpp"

namespace arq {

template <class K>
struct Representation {
  AlgebraPtr<K> alg;
  std::vector<int> dims;      // per vertex
  std::vector<Mat<K>> mats;   // per arrow, shape d_tgt x d_src

  int dim_at(int x) const { return dims[x]; }
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  bool is_zero_rep() const { return total_dim() == 0; }

  std::string dim_str() const {
    std::string s = "[";
    for (size_t i = 0; i < dims.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(dims[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.alg == b.alg && a.dims == b.dims && a.mats == b.mats;
  }
};

template <class K>
Representation<K> zero_rep(const AlgebraPtr<K>& alg) {
  Representation<K> r;
  r.alg = alg;
  r.dims.assign(alg->vcount(), 0);
  for (int a = 0; a < alg->acount(); ++a) r.mats.push_back(Mat<K>(0, 0));
  return r;
}

/// Matrix by which the path acts on the representation (traversal order).
template <class K>
Mat<K> path_matrix(const Representation<K>& m, const Path& p) {
  FieldScope<K> fs(m.alg->field);
  const Quiver& q = m.alg->quiver;
  Mat<K> acc = Mat<K>::identity(m.dims[p.src]);
  for (int a : p.arrows) acc = m.mats[a] * acc;
  (void)q;
  return acc;
}

template <class K>
bool is_valid_rep(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  const Quiver& q = m.alg->quiver;
  if ((int)m.dims.size() != q.vcount() || (int)m.mats.size() != q.acount()) return false;
  for (int a = 0; a < q.acount(); ++a)
    if (m.mats[a].rows() != m.dims[q.arrows[a].tgt] || m.mats[a].cols() != m.dims[q.arrows[a].src])
      return false;
  for (const auto& r : m.alg->relations) {
    const Path& p0 = r.terms[0].second;
    Mat<K> acc(m.dims[p0.target(q)], m.dims[p0.src]);
    for (const auto& [c, p] : r.terms) acc = acc + c * path_matrix(m, p);
    if (!acc.is_zero_mat()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// morphisms

template <class K>
struct Morphism {
  Representation<K> src, tgt;
  std::vector<Mat<K>> f;  // per vertex, shape tgt.dims[x] x src.dims[x]

  bool is_zero_mor() const {
    for (const auto& m : f)
      if (!m.is_zero_mat()) return false;
    return true;
  }
};

template <class K>
Morphism<K> identity_morphism(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  Morphism<K> f{m, m, {}};
  for (int d : m.dims) f.f.push_back(Mat<K>::identity(d));
  return f;
}

template <class K>
Morphism<K> zero_morphism(const Representation<K>& src, const Representation<K>& tgt) {
  Morphism<K> f{src, tgt, {}};
  for (size_t x = 0; x < src.dims.size(); ++x) f.f.push_back(Mat<K>(tgt.dims[x], src.dims[x]));
  return f;
}

template <class K>
bool is_morphism(const Morphism<K>& m) {
  FieldScope<K> fs(m.src.alg->field);
  const Quiver& q = m.src.alg->quiver;
  if (m.src.alg != m.tgt.alg) return false;
  for (int a = 0; a < q.acount(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    if (!(m.f[t] * m.src.mats[a] == m.tgt.mats[a] * m.f[s])) return false;
  }
  return true;
}

/// g after f (f first).
template <class K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
  if (!(f.tgt == g.src)) throw InternalError("compose: middle representations differ");
  Morphism<K> h{f.src, g.tgt, {}};
  for (size_t x = 0; x < f.f.size(); ++x) h.f.push_back(g.f[x] * f.f[x]);
  return h;
}

template <class K>
Morphism<K> mor_add(const Morphism<K>& a, const Morphism<K>& b) {
  Morphism<K> c = a;
  for (size_t x = 0; x < c.f.size(); ++x) c.f[x] = c.f[x] + b.f[x];
  return c;
}

template <class K>
Morphism<K> mor_scale(const K& s, const Morphism<K>& a) {
  Morphism<K> c = a;
  for (auto& m : c.f) m = s * m;
  return c;
}

template <class K>
std::vector<K> mor_flatten(const Morphism<K>& m) {
  std::vector<K> v;
  for (const auto& mat : m.f)
    for (const K& x : mat.data()) v.push_back(x);
  return v;
}

// ---------------------------------------------------------------------------
// Hom spaces: canonical basis of the commutation equations' solution space.

template <class K>
struct HomBasis {
  std::vector<Morphism<K>> basis;
  std::vector<int> pivots;  // pivot coordinate of each basis element
  int total_vars = 0;

  int dim() const { return (int)basis.size(); }

  /// Coordinates of a morphism lying in the span of the basis.
  std::vector<K> coords_of(const Morphism<K>& m) const {
    std::vector<K> flat = mor_flatten(m);
    std::vector<K> c(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) c[i] = flat[pivots[i]];
    return c;
  }

  Morphism<K> combine(const std::vector<K>& coeff) const {
    if (coeff.size() != basis.size()) throw InternalError("combine: coefficient count");
    if (basis.empty()) throw InternalError("combine: empty basis");
    Morphism<K> m = zero_morphism(basis[0].src, basis[0].tgt);
    for (size_t i = 0; i < basis.size(); ++i)
      if (!is_zero(coeff[i])) m = mor_add(m, mor_scale(coeff[i], basis[i]));
    return m;
  }
};

template <class K>
HomBasis<K> hom_basis(const Representation<K>& m, const Representation<K>& n) {
  if (m.alg != n.alg) throw InternalError("hom_basis: different algebras");
  FieldScope<K> fs(m.alg->field);
  const Quiver& q = m.alg->quiver;
  int V = q.vcount();
  std::vector<int> off(V + 1, 0);
  for (int x = 0; x < V; ++x) off[x + 1] = off[x] + n.dims[x] * m.dims[x];
  int vars = off[V];
  int eqs = 0;
  for (int a = 0; a < q.acount(); ++a) eqs += n.dims[q.arrows[a].tgt] * m.dims[q.arrows[a].src];

  Mat<K> sys(eqs, vars);
  int row = 0;
  for (int a = 0; a < q.acount(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    // f_t * M_a - N_a * f_s = 0, entry (i, l): i < n.dims[t], l < m.dims[s]
    for (int i = 0; i < n.dims[t]; ++i)
      for (int l = 0; l < m.dims[s]; ++l) {
        for (int j = 0; j < m.dims[t]; ++j)
          sys.at(row, off[t] + i * m.dims[t] + j) += m.mats[a].at(j, l);
        for (int j = 0; j < n.dims[s]; ++j)
          sys.at(row, off[s] + j * m.dims[s] + l) -= n.mats[a].at(i, j);
        ++row;
      }
  }

  Mat<K> ker = kernel_basis(sys);
  HomBasis<K> h;
  h.total_vars = vars;
  for (int r = 0; r < ker.rows(); ++r) {
    Morphism<K> f{m, n, {}};
    for (int x = 0; x < V; ++x) {
      Mat<K> fx(n.dims[x], m.dims[x]);
      for (int i = 0; i < n.dims[x]; ++i)
        for (int j = 0; j < m.dims[x]; ++j) fx.at(i, j) = ker.at(r, off[x] + i * m.dims[x] + j);
      f.f.push_back(std::move(fx));
    }
    h.basis.push_back(std::move(f));
    for (int c = 0; c < vars; ++c)
      if (!is_zero(ker.at(r, c))) {
        h.pivots.push_back(c);
        break;
      }
  }
  return h;
}

// ---------------------------------------------------------------------------
// subrepresentations

template <class K>
struct SubRep {
  Representation<K> ambient;
  std::vector<Subspace<K>> spaces;  // per vertex, row vectors in K^{d_x}

  int total_dim() const {
    int s = 0;
    for (const auto& u : spaces) s += u.dim();
    return s;
  }
  bool is_full() const {
    for (size_t x = 0; x < spaces.size(); ++x)
      if (spaces[x].dim() != ambient.dims[x]) return false;
    return true;
  }
  bool is_zero_sub() const { return total_dim() == 0; }

  friend bool operator==(const SubRep& a, const SubRep& b) {
    return a.ambient == b.ambient && a.spaces == b.spaces;
  }
};

template <class K>
SubRep<K> zero_subrep(const Representation<K>& m) {
  SubRep<K> s{m, {}};
  for (int d : m.dims) s.spaces.push_back(Subspace<K>::zero(d));
  return s;
}

template <class K>
SubRep<K> full_subrep(const Representation<K>& m) {
  SubRep<K> s{m, {}};
  for (int d : m.dims) s.spaces.push_back(Subspace<K>::full(d));
  return s;
}

template <class K>
bool subrep_contains(const SubRep<K>& a, const SubRep<K>& b) {
  for (size_t x = 0; x < a.spaces.size(); ++x)
    if (!a.spaces[x].contains(b.spaces[x])) return false;
  return true;
}

template <class K>
SubRep<K> subrep_sum(const SubRep<K>& a, const SubRep<K>& b) {
  SubRep<K> s{a.ambient, {}};
  for (size_t x = 0; x < a.spaces.size(); ++x) s.spaces.push_back(sum(a.spaces[x], b.spaces[x]));
  return s;
}

template <class K>
SubRep<K> subrep_intersect(const SubRep<K>& a, const SubRep<K>& b) {
  SubRep<K> s{a.ambient, {}};
  for (size_t x = 0; x < a.spaces.size(); ++x)
    s.spaces.push_back(intersect(a.spaces[x], b.spaces[x]));
  return s;
}

template <class K>
bool is_arrow_stable(const SubRep<K>& s) {
  const Quiver& q = s.ambient.alg->quiver;
  for (int a = 0; a < q.acount(); ++a) {
    const Subspace<K>& u = s.spaces[q.arrows[a].src];
    const Subspace<K>& v = s.spaces[q.arrows[a].tgt];
    for (int i = 0; i < u.dim(); ++i) {
      Mat<K> img = s.ambient.mats[a] * Mat<K>::from_col(u.basis().row(i));
      if (!v.contains(img.col(0))) return false;
    }
  }
  return true;
}

/// Close the per-vertex spaces under the arrow action.
template <class K>
SubRep<K> arrow_closure(const Representation<K>& m, std::vector<Subspace<K>> spaces) {
  FieldScope<K> fs(m.alg->field);
  const Quiver& q = m.alg->quiver;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < q.acount(); ++a) {
      int s = q.arrows[a].src, t = q.arrows[a].tgt;
      if (spaces[s].dim() == 0) continue;
      Mat<K> img = m.mats[a] * spaces[s].basis().transpose();  // d_t x dim
      Subspace<K> added = sum(spaces[t], Subspace<K>::col_space(img));
      if (added != spaces[t]) {
        spaces[t] = added;
        changed = true;
      }
    }
  }
  return SubRep<K>{m, std::move(spaces)};
}

/// Smallest subrepresentation containing the images of the given morphisms.
template <class K>
SubRep<K> sub_generated(const Representation<K>& m, const std::vector<Morphism<K>>& gens) {
  FieldScope<K> fs(m.alg->field);
  std::vector<Subspace<K>> spaces;
  for (int d : m.dims) spaces.push_back(Subspace<K>::zero(d));
  for (const auto& g : gens) {
    if (!(g.tgt == m)) throw InternalError("sub_generated: generator target mismatch");
    for (size_t x = 0; x < spaces.size(); ++x)
      spaces[x] = sum(spaces[x], Subspace<K>::col_space(g.f[x]));
  }
  return arrow_closure(m, std::move(spaces));
}

/// rad M = sum of the images of all arrows.
template <class K>
SubRep<K> radical_subrep(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  const Quiver& q = m.alg->quiver;
  std::vector<Subspace<K>> spaces;
  for (int d : m.dims) spaces.push_back(Subspace<K>::zero(d));
  for (int a = 0; a < q.acount(); ++a)
    spaces[q.arrows[a].tgt] = sum(spaces[q.arrows[a].tgt], Subspace<K>::col_space(m.mats[a]));
  return arrow_closure(m, std::move(spaces));  // closure is a no-op here
}

/// soc M: largest subrepresentation on which all arrows act by zero.
template <class K>
SubRep<K> socle_subrep(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  const Quiver& q = m.alg->quiver;
  SubRep<K> s{m, {}};
  for (int x = 0; x < q.vcount(); ++x) {
    Mat<K> stacked(0, m.dims[x]);
    for (int a = 0; a < q.acount(); ++a)
      if (q.arrows[a].src == x) stacked = Mat<K>::vstack(stacked, m.mats[a]);
    s.spaces.push_back(Subspace<K>::from_rows(kernel_basis(stacked)));
  }
  return s;
}

/// Standalone representation of a subrepresentation, with its inclusion.
template <class K>
struct SubQuot {
  Representation<K> rep;
  Morphism<K> map;  // inclusion (for subs) or projection (for quotients)
};

template <class K>
SubQuot<K> sub_to_rep(const SubRep<K>& s) {
  FieldScope<K> fs(s.ambient.alg->field);
  const Representation<K>& m = s.ambient;
  const Quiver& q = m.alg->quiver;
  Representation<K> r;
  r.alg = m.alg;
  for (const auto& u : s.spaces) r.dims.push_back(u.dim());
  std::vector<Mat<K>> incl;  // d_x x u_x
  for (size_t x = 0; x < s.spaces.size(); ++x) incl.push_back(s.spaces[x].basis().transpose());
  for (int a = 0; a < q.acount(); ++a) {
    int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
    auto sol = solve(incl[tv], m.mats[a] * incl[sv]);
    if (!sol.consistent) throw InternalError("sub_to_rep: family not arrow-stable");
    r.mats.push_back(sol.x);
  }
  Morphism<K> inc{r, m, incl};
  return {std::move(r), std::move(inc)};
}

/// Quotient of M by an arrow-stable family, with the projection.
template <class K>
SubQuot<K> quotient_by(const SubRep<K>& s) {
  FieldScope<K> fs(s.ambient.alg->field);
  const Representation<K>& m = s.ambient;
  const Quiver& q = m.alg->quiver;
  std::vector<Mat<K>> proj, sect;
  Representation<K> r;
  r.alg = m.alg;
  for (size_t x = 0; x < s.spaces.size(); ++x) {
    const Subspace<K>& u = s.spaces[x];
    int n = m.dims[(int)x], k = u.dim();
    std::vector<bool> is_piv(n, false);
    for (int c : u.pivots()) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < n; ++c)
      if (!is_piv[c]) free.push_back(c);
    Mat<K> p((int)free.size(), n);
    for (int j = 0; j < (int)free.size(); ++j) {
      p.at(j, free[j]) = K(1);
      for (int i = 0; i < k; ++i) p.at(j, u.pivots()[i]) = -u.basis().at(i, free[j]);
    }
    Mat<K> sec(n, (int)free.size());
    for (int j = 0; j < (int)free.size(); ++j) sec.at(free[j], j) = K(1);
    proj.push_back(std::move(p));
    sect.push_back(std::move(sec));
    r.dims.push_back((int)free.size());
  }
  for (int a = 0; a < q.acount(); ++a) {
    int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
    r.mats.push_back(proj[tv] * m.mats[a] * sect[sv]);
  }
  Morphism<K> pr{m, r, proj};
  return {std::move(r), std::move(pr)};
}

// ---------------------------------------------------------------------------
// kernel / image / cokernel

template <class K>
SubQuot<K> kernel(const Morphism<K>& f) {
  FieldScope<K> fs(f.src.alg->field);
  SubRep<K> s{f.src, {}};
  for (size_t x = 0; x < f.f.size(); ++x)
    s.spaces.push_back(Subspace<K>::from_rows(kernel_basis(f.f[x])));
  return sub_to_rep(s);
}

template <class K>
SubRep<K> image_subrep(const Morphism<K>& f) {
  SubRep<K> s{f.tgt, {}};
  for (size_t x = 0; x < f.f.size(); ++x) s.spaces.push_back(Subspace<K>::col_space(f.f[x]));
  return s;
}

template <class K>
SubQuot<K> image(const Morphism<K>& f) {
  return sub_to_rep(image_subrep(f));
}

template <class K>
SubQuot<K> cokernel(const Morphism<K>& f) {
  return quotient_by(image_subrep(f));
}

// ---------------------------------------------------------------------------
// direct sums

template <class K>
struct DirectSum {
  Representation<K> rep;
  std::vector<Morphism<K>> incl;
  std::vector<Morphism<K>> proj;
};

template <class K>
DirectSum<K> direct_sum(const std::vector<Representation<K>>& parts, const AlgebraPtr<K>& alg) {
  FieldScope<K> fs(alg->field);
  DirectSum<K> d;
  d.rep.alg = alg;
  int V = alg->vcount();
  d.rep.dims.assign(V, 0);
  std::vector<std::vector<int>> off(parts.size(), std::vector<int>(V, 0));
  for (size_t i = 0; i < parts.size(); ++i)
    for (int x = 0; x < V; ++x) {
      off[i][x] = d.rep.dims[x];
      d.rep.dims[x] += parts[i].dims[x];
    }
  const Quiver& q = alg->quiver;
  for (int a = 0; a < q.acount(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    Mat<K> m(d.rep.dims[t], d.rep.dims[s]);
    for (size_t i = 0; i < parts.size(); ++i)
      for (int r = 0; r < parts[i].dims[t]; ++r)
        for (int c = 0; c < parts[i].dims[s]; ++c)
          m.at(off[i][t] + r, off[i][s] + c) = parts[i].mats[a].at(r, c);
    d.rep.mats.push_back(std::move(m));
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    Morphism<K> in{parts[i], d.rep, {}}, pr{d.rep, parts[i], {}};
    for (int x = 0; x < V; ++x) {
      Mat<K> mi(d.rep.dims[x], parts[i].dims[x]), mp(parts[i].dims[x], d.rep.dims[x]);
      for (int r = 0; r < parts[i].dims[x]; ++r) {
        mi.at(off[i][x] + r, r) = K(1);
        mp.at(r, off[i][x] + r) = K(1);
      }
      in.f.push_back(std::move(mi));
      pr.f.push_back(std::move(mp));
    }
    d.incl.push_back(std::move(in));
    d.proj.push_back(std::move(pr));
  }
  return d;
}

// ---------------------------------------------------------------------------
// canonical modules

/// P_x: at vertex y the span of basis classes of paths x ~> y; arrows act by
/// post-composition.
template <class K>
Representation<K> projective(const AlgebraPtr<K>& alg, int x) {
  FieldScope<K> fs(alg->field);
  const Quiver& q = alg->quiver;
  if (x < 0 || x >= q.vcount()) throw InputError("projective: unknown vertex");
  Representation<K> r;
  r.alg = alg;
  for (int y = 0; y < q.vcount(); ++y) r.dims.push_back(alg->basis_dim(x, y));
  for (int a = 0; a < q.acount(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    Mat<K> m(r.dims[t], r.dims[s]);
    const auto& bs = alg->basis(x, s);
    for (int j = 0; j < (int)bs.size(); ++j) {
      std::vector<K> col = alg->nf(bs[j].then_arrow(a));
      for (int i = 0; i < r.dims[t]; ++i) m.at(i, j) = col[i];
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

template <class K>
Representation<K> simple(const AlgebraPtr<K>& alg, int x) {
  if (x < 0 || x >= alg->vcount()) throw InputError("simple: unknown vertex");
  Representation<K> r = zero_rep(alg);
  r.dims[x] = 1;
  const Quiver& q = alg->quiver;
  for (int a = 0; a < q.acount(); ++a)
    r.mats[a] = Mat<K>(r.dims[q.arrows[a].tgt], r.dims[q.arrows[a].src]);
  return r;
}

/// D: representations of A <-> representations of A^op, by transposing.
template <class K>
Representation<K> dual(const Representation<K>& m) {
  Representation<K> r;
  r.alg = m.alg->op();
  r.dims = m.dims;
  r.mats.resize(m.mats.size());
  for (size_t a = 0; a < m.mats.size(); ++a) r.mats[a] = m.mats[a].transpose();
  return r;
}

template <class K>
Representation<K> injective(const AlgebraPtr<K>& alg, int x) {
  if (x < 0 || x >= alg->vcount()) throw InputError("injective: unknown vertex");
  return dual(projective(alg->op(), x));
}

/// rad P_x as a subrepresentation (classes of paths of length >= 1).
template <class K>
SubRep<K> rad_of_projective(const AlgebraPtr<K>& alg, int x) {
  FieldScope<K> fs(alg->field);
  Representation<K> p = projective(alg, x);
  SubRep<K> s{p, {}};
  for (int y = 0; y < alg->vcount(); ++y) {
    const auto& b = alg->basis(x, y);
    Mat<K> rows(0, (int)b.size());
    for (int i = 0; i < (int)b.size(); ++i)
      if (b[i].length() >= 1) {
        Mat<K> u(1, (int)b.size());
        u.at(0, i) = K(1);
        rows = Mat<K>::vstack(rows, u);
      }
    s.spaces.push_back(Subspace<K>::from_rows(rows));
  }
  return s;
}

/// Morphism P_x -> M determined by the image of the generator e_x.
template <class K>
Morphism<K> morphism_from_generator(const AlgebraPtr<K>& alg, int x, const Representation<K>& m,
                                    const std::vector<K>& gen_image) {
  FieldScope<K> fs(alg->field);
  Representation<K> p = projective(alg, x);
  if ((int)gen_image.size() != m.dims[x])
    throw InternalError("morphism_from_generator: bad generator image");
  Morphism<K> f{p, m, {}};
  Mat<K> v = Mat<K>::from_col(gen_image);
  for (int y = 0; y < alg->vcount(); ++y) {
    const auto& b = alg->basis(x, y);
    Mat<K> fy(m.dims[y], (int)b.size());
    for (int j = 0; j < (int)b.size(); ++j) {
      Mat<K> col = path_matrix(m, b[j]) * v;
      for (int i = 0; i < m.dims[y]; ++i) fy.at(i, j) = col.at(i, 0);
    }
    f.f.push_back(std::move(fy));
  }
  return f;
}

}  // namespace arq
