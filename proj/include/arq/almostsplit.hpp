// Almost split sequences, built as the socle class of Ext^1(M, tau M) under
// the right End(M)-action and verified by a finite exact test.
#pragma once

#include "arq/artrans.hpp"
#include "arq/decompose.hpp"

namespace arq {

template <class K>
struct AlmostSplitSeq {
  Representation<K> left;    // tau M
  Representation<K> middle;
  Representation<K> right;   // M
  Morphism<K> u;             // left -> middle
  Morphism<K> v;             // middle -> right
};

/// Does t with v o t = h exist?  (lifting through v)
template <class K>
bool lifts_through(const Morphism<K>& v, const Morphism<K>& h) {
  FieldScope<K> fs(v.src.alg->field);
  HomBasis<K> hme = hom_basis(h.src, v.src);
  HomBasis<K> hmm = hom_basis(h.src, v.tgt);
  if (hmm.dim() == 0) return h.is_zero_mor();
  Mat<K> op(hmm.dim(), hme.dim());
  for (int j = 0; j < hme.dim(); ++j) {
    auto c = hmm.coords_of(compose(v, hme.basis[j]));
    for (int i = 0; i < hmm.dim(); ++i) op.at(i, j) = c[i];
  }
  return solve(op, Mat<K>::from_col(hmm.coords_of(h))).consistent;
}

/// Exactness of 0 -> N -u-> E -v-> M -> 0.
template <class K>
bool is_short_exact(const Morphism<K>& u, const Morphism<K>& v) {
  if (!(u.tgt == v.src)) return false;
  if (!is_morphism(u) || !is_morphism(v)) return false;
  if (!compose(v, u).is_zero_mor()) return false;
  for (size_t x = 0; x < u.f.size(); ++x) {
    if (rank_of(u.f[x]) != u.src.dims[x]) return false;               // mono
    if (rank_of(v.f[x]) != v.tgt.dims[x]) return false;               // epi
    if (u.src.dims[x] + v.tgt.dims[x] != u.tgt.dims[x]) return false; // middle size
  }
  return true;
}

/// The finite almost-split test: exact, non-split, and every h in a basis of
/// rad End(M) lifts through v (the Ext class is killed by rad End(M)).
template <class K>
bool is_almost_split(const AlmostSplitSeq<K>& s) {
  FieldScope<K> fs(s.right.alg->field);
  if (!is_short_exact(s.u, s.v)) return false;
  // indecomposable ends
  for (const Representation<K>* end : {&s.left, &s.right}) {
    auto ew = end_with_radical(*end);
    if (ew.end.dim() - ew.rad.dim() != 1) return false;
  }
  if (lifts_through(s.v, identity_morphism(s.right))) return false;  // split
  auto ew = end_with_radical(s.right);
  for (int i = 0; i < ew.rad.dim(); ++i) {
    std::vector<K> c(ew.end.dim());
    for (int j = 0; j < ew.end.dim(); ++j) c[j] = ew.rad.basis().at(i, j);
    if (!lifts_through(s.v, ew.end.hom.combine(c))) return false;
  }
  return true;
}

/// The Auslander-Reiten sequence 0 -> tau M -> E -> M -> 0.
template <class K>
AlmostSplitSeq<K> almost_split_sequence_ending_at(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  if (m.is_zero_rep()) throw InputError("almost split sequence: zero module");
  Representation<K> n = tau(m);
  if (n.is_zero_rep()) throw InputError("almost split sequence: module is projective");

  ProjPresentation<K> pres = minimal_proj_presentation(m);
  const Representation<K>& kerrep = pres.syzygy;
  const Morphism<K>& kappa = pres.syzygy_incl;   // K -> P0
  const Morphism<K>& d0 = pres.p0.cover;         // P0 -> M

  // Ext^1(M, N) = Hom(K, N) / im(Hom(P0, N) -> Hom(K, N))
  HomBasis<K> hkn = hom_basis(kerrep, n);
  HomBasis<K> hpn = hom_basis(pres.p0.p, n);
  Mat<K> res(hpn.dim(), hkn.dim());
  for (int i = 0; i < hpn.dim(); ++i) {
    auto c = hkn.coords_of(compose(hpn.basis[i], kappa));
    for (int j = 0; j < hkn.dim(); ++j) res.at(i, j) = c[j];
  }
  Subspace<K> imres = Subspace<K>::from_rows(res);
  auto ext_rows = complement_in(Subspace<K>::full(hkn.dim()), imres);
  int ext_dim = (int)ext_rows.size();
  if (ext_dim == 0) throw InternalError("Ext^1(M, tau M) vanished for non-projective M");
  std::vector<int> ext_pos;  // coordinates carrying the complement (unit rows)
  {
    std::vector<bool> piv(hkn.dim(), false);
    for (int c : imres.pivots()) piv[c] = true;
    for (int c = 0; c < hkn.dim(); ++c)
      if (!piv[c]) ext_pos.push_back(c);
  }
  auto to_ext = [&](std::vector<K> coords) {
    coords = imres.reduce(coords);
    std::vector<K> e(ext_dim);
    for (int i = 0; i < ext_dim; ++i) e[i] = coords[ext_pos[i]];
    return e;
  };

  // right End(M)-action on Ext via lifts h0 : P0 -> P0, restricted to K
  auto ewm = end_with_radical(m);
  HomBasis<K> hpp = hom_basis(pres.p0.p, pres.p0.p);
  HomBasis<K> hpm = hom_basis(pres.p0.p, m);
  Mat<K> liftop(hpm.dim(), hpp.dim());
  for (int j = 0; j < hpp.dim(); ++j) {
    auto c = hpm.coords_of(compose(d0, hpp.basis[j]));
    for (int i = 0; i < hpm.dim(); ++i) liftop.at(i, j) = c[i];
  }
  auto lift_endo = [&](const Morphism<K>& h) {
    auto sol = solve(liftop, Mat<K>::from_col(hpm.coords_of(compose(h, d0))));
    if (!sol.consistent) throw InternalError("endomorphism does not lift to the cover");
    Morphism<K> h0 = hpp.combine(sol.x.col(0));
    // restrict to the syzygy
    Morphism<K> hk = zero_morphism(kerrep, kerrep);
    Morphism<K> h0k = compose(h0, kappa);
    for (size_t x = 0; x < hk.f.size(); ++x) {
      auto s = solve(kappa.f[x], h0k.f[x]);
      if (!s.consistent) throw InternalError("lift does not preserve the syzygy");
      hk.f[x] = s.x;
    }
    if (!is_morphism(hk)) throw InternalError("restricted lift is not a morphism");
    return hk;
  };

  // socle: Ext classes killed by every radical endomorphism
  Mat<K> cut(0, ext_dim);
  for (int r = 0; r < ewm.rad.dim(); ++r) {
    std::vector<K> hc(ewm.end.dim());
    for (int j = 0; j < ewm.end.dim(); ++j) hc[j] = ewm.rad.basis().at(r, j);
    Morphism<K> h1 = lift_endo(ewm.end.hom.combine(hc));
    Mat<K> rh(ext_dim, ext_dim);
    for (int e = 0; e < ext_dim; ++e) {
      Morphism<K> phi = hkn.combine(ext_rows[e]);
      auto img = to_ext(hkn.coords_of(compose(phi, h1)));
      for (int i = 0; i < ext_dim; ++i) rh.at(i, e) = img[i];
    }
    cut = Mat<K>::vstack(cut, rh);
  }
  Mat<K> soc = cut.rows() ? kernel_basis(cut) : Mat<K>::identity(ext_dim);
  if (soc.rows() != 1)
    throw InternalError("Ext socle is not one-dimensional (expected for indecomposable M)");
  std::vector<K> cls(ext_dim);
  for (int i = 0; i < ext_dim; ++i) cls[i] = soc.at(0, i);
  std::vector<K> phicoords(hkn.dim(), K(0));
  for (int i = 0; i < ext_dim; ++i)
    for (int j = 0; j < hkn.dim(); ++j) {
      K t = cls[i] * ext_rows[i][j];
      phicoords[j] += t;
    }
  Morphism<K> phi = hkn.combine(phicoords);

  // pushout of 0 -> K -> P0 -> M -> 0 along phi : K -> N
  auto b = direct_sum<K>({n, pres.p0.p}, m.alg);
  Morphism<K> mu = mor_add(compose(b.incl[0], phi), mor_scale(K(-1), compose(b.incl[1], kappa)));
  auto co = cokernel(mu);
  Morphism<K> u = compose(co.map, b.incl[0]);
  // v : E -> M induced by (0, d0)
  Morphism<K> w = compose(d0, b.proj[1]);
  Morphism<K> v = zero_morphism(co.rep, m);
  for (size_t x = 0; x < v.f.size(); ++x) {
    auto s = solve(co.map.f[x].transpose(), w.f[x].transpose());
    if (!s.consistent) throw InternalError("pushout: induced map inconsistent");
    v.f[x] = s.x.transpose();
  }

  AlmostSplitSeq<K> seq{n, co.rep, m, u, v};
  if (!is_almost_split(seq)) throw InternalError("constructed sequence failed verification");
  return seq;
}

}  // namespace arq
