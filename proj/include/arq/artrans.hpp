// The Auslander-Reiten translations: Tr via Hom(-, A) applied to a minimal
// presentation, tau = D Tr and tau^- = Tr D.
#pragma once

#include "arq/presentation.hpp"

namespace arq {

namespace detail {

/// Residue class of the reversed path, in the opposite algebra's basis.
template <class K>
std::vector<K> op_class(const AlgebraPtr<K>& alg, const Path& p) {
  return alg->op()->nf(p.reversed_for(alg->quiver));
}

}  // namespace detail

/// Tr M, a representation of the opposite algebra.
template <class K>
Representation<K> transpose(const Representation<K>& m) {
  const AlgebraPtr<K>& alg = m.alg;
  FieldScope<K> fs(alg->field);
  AlgebraPtr<K> op = alg->op();
  if (m.is_zero_rep()) return zero_rep(op);
  ProjPresentation<K> pres = minimal_proj_presentation(m);
  if (pres.p1.p.is_zero_rep()) return zero_rep(op);  // projective modules

  const std::vector<int>& xs = pres.p0.vertices;  // P0 = + P_{x_i}
  const std::vector<int>& ys = pres.p1.vertices;  // P1 = + P_{y_j}

  // d1's component P_{y_j} -> P_{x_i} is right multiplication by an element
  // a_ij spanned by paths x_i ~> y_j; read it off the generator image.
  // Over A^op these become the components of g : + P^op_{x_i} -> + P^op_{y_j}.
  std::vector<Representation<K>> op_projs;
  for (int x : xs) op_projs.push_back(projective(op, x));
  auto ds = direct_sum(op_projs, op);

  int nsum0 = (int)xs.size();
  std::vector<Representation<K>> op_tgt_projs;
  for (int y : ys) op_tgt_projs.push_back(projective(op, y));
  auto dt = direct_sum(op_tgt_projs, op);
  Morphism<K> g = zero_morphism(ds.rep, dt.rep);

  for (int j = 0; j < (int)ys.size(); ++j) {
    int y = ys[j];
    // generator image of the j-th component of d1, a vector in P0 at vertex y
    Morphism<K> comp = compose(pres.d1, pres.p1.incl[j]);
    // comp.f[y] column of the generator e_y (index of e_y in basis(y, y))
    int egen = -1;
    {
      const auto& by = m.alg->basis(y, y);
      for (int i = 0; i < (int)by.size(); ++i)
        if (by[i].length() == 0) egen = i;
    }
    if (egen < 0) throw InternalError("transpose: missing idempotent basis class");
    std::vector<K> img = comp.f[y].col(egen);
    // split img into blocks over the summands of P0 and transfer to A^op
    int off = 0;
    for (int i = 0; i < nsum0; ++i) {
      int x = xs[i];
      const auto& bxy = m.alg->basis(x, y);
      std::vector<K> block(img.begin() + off, img.begin() + off + (int)bxy.size());
      off += (int)bxy.size();
      // element sum_c block[c] * (path x ~> y); opposite class lives in
      // basis^op(y, x), i.e. the component of g : P^op_x -> P^op_y at ...
      std::vector<K> opvec(op->basis_dim(y, x), K(0));
      for (int c = 0; c < (int)bxy.size(); ++c) {
        if (is_zero(block[c])) continue;
        std::vector<K> oc = detail::op_class(m.alg, bxy[c]);
        for (size_t t = 0; t < oc.size(); ++t) {
          K v = block[c] * oc[t];
          opvec[t] += v;
        }
      }
      // morphism P^op_{x_i} -> P^op_{y_j} with generator image opvec,
      // then assembled into the direct sums
      Morphism<K> cm = morphism_from_generator(op, x, op_tgt_projs[j], opvec);
      g = mor_add(g, compose(compose(dt.incl[j], cm), ds.proj[i]));
    }
  }
  return cokernel(g).rep;
}

/// tau M = D Tr M (zero iff M is projective).
template <class K>
Representation<K> tau(const Representation<K>& m) {
  return dual(transpose(m));
}

/// tau^- M = Tr D M (zero iff M is injective).
template <class K>
Representation<K> tau_minus(const Representation<K>& m) {
  return transpose(dual(m));
}

}  // namespace arq
