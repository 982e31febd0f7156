// Projective covers and minimal projective presentations.
#pragma once

#include "arq/rep.hpp"

namespace arq {

template <class K>
struct ProjCover {
  Representation<K> p;            // direct sum of indecomposable projectives
  Morphism<K> cover;              // p ->> m
  std::vector<int> vertices;      // one entry per indecomposable summand
  std::vector<Morphism<K>> incl;  // inclusions P_{x_i} -> p
};

template <class K>
ProjCover<K> projective_cover(const Representation<K>& m) {
  FieldScope<K> fs(m.alg->field);
  const AlgebraPtr<K>& alg = m.alg;
  ProjCover<K> out;
  auto rad = radical_subrep(m);
  auto top = quotient_by(rad);
  // generators: one preimage of each top basis vector, per vertex
  std::vector<std::pair<int, std::vector<K>>> gens;
  for (int x = 0; x < alg->vcount(); ++x) {
    int t = top.rep.dims[x];
    if (t == 0) continue;
    auto sec = solve(top.map.f[x], Mat<K>::identity(t));
    if (!sec.consistent) throw InternalError("projective_cover: projection has no section");
    for (int j = 0; j < t; ++j) {
      out.vertices.push_back(x);
      gens.push_back({x, sec.x.col(j)});
    }
  }
  std::vector<Representation<K>> parts;
  std::vector<Morphism<K>> comps;
  for (auto& [x, v] : gens) {
    comps.push_back(morphism_from_generator(alg, x, m, v));
    parts.push_back(comps.back().src);
  }
  auto ds = direct_sum(parts, alg);
  out.p = ds.rep;
  out.incl = ds.incl;
  Morphism<K> cover = zero_morphism(ds.rep, m);
  for (size_t i = 0; i < comps.size(); ++i)
    cover = mor_add(cover, compose(comps[i], ds.proj[i]));
  // surjectivity, by Nakayama
  for (int x = 0; x < alg->vcount(); ++x)
    if (rank_of(cover.f[x]) != m.dims[x]) throw InternalError("projective_cover: not onto");
  out.cover = std::move(cover);
  return out;
}

/// Minimal presentation P1 --d1--> P0 --d0--> M -> 0, with the syzygy
/// K = ker d0 and its inclusion kept for Ext computations.
template <class K>
struct ProjPresentation {
  Representation<K> m;
  ProjCover<K> p0;
  Representation<K> syzygy;   // ker d0
  Morphism<K> syzygy_incl;    // ker d0 -> P0
  ProjCover<K> p1;            // cover of the syzygy (p1.p = 0 when M is projective)
  Morphism<K> d1;             // P1 -> P0
};

template <class K>
ProjPresentation<K> minimal_proj_presentation(const Representation<K>& m) {
  if (m.is_zero_rep()) throw InternalError("minimal_proj_presentation: zero module");
  FieldScope<K> fs(m.alg->field);
  ProjPresentation<K> out;
  out.m = m;
  out.p0 = projective_cover(m);
  auto ker = kernel(out.p0.cover);
  out.syzygy = ker.rep;
  out.syzygy_incl = ker.map;
  if (ker.rep.is_zero_rep()) {
    out.p1.p = zero_rep(m.alg);
    out.p1.cover = zero_morphism(out.p1.p, ker.rep);
    out.d1 = zero_morphism(out.p1.p, out.p0.p);
  } else {
    out.p1 = projective_cover(ker.rep);
    out.d1 = compose(ker.map, out.p1.cover);
  }
  return out;
}

}  // namespace arq
