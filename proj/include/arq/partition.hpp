// The Auslander-Smalo postprojective partition over a window, traces of the
// layers, and certification bookkeeping for truncated windows.
#pragma once

#include <set>

#include "arq/artrans.hpp"
#include "arq/radtable.hpp"

namespace arq {

/// tau-periodicity certificate: tau^k M = M for some 1 <= k <= bound.  A
/// tau-periodic module cannot be postprojective.
template <class K>
bool tau_periodic(const Representation<K>& m, int bound = 8) {
  Representation<K> cur = m;
  for (int k = 1; k <= bound; ++k) {
    cur = tau(cur);
    if (cur.is_zero_rep()) return false;  // hit a projective
    if (cur.dims == m.dims && is_isomorphic(cur, m)) return true;
  }
  return false;
}

template <class K>
struct PartitionTable {
  static constexpr int kInf = 1 << 28;
  static constexpr int kUnknown = -1;

  const Window<K>* w = nullptr;
  std::vector<int> layer;                 // per module
  std::vector<std::vector<int>> layers;   // finite layers, module indices
  std::vector<char> layer_cert;           // per finite layer
  std::vector<char> pinf_cert;            // per module (tau-periodicity)
  bool emptied = false;                   // the cover iteration exhausted the window

  int computed_layers() const { return (int)layers.size(); }
  bool layer_certified(int i) const { return i < (int)layer_cert.size() && layer_cert[i]; }
};

/// The modules of C not generated by the rest of C (the minimal-cover layer).
template <class K>
std::vector<int> split_projectives(const Window<K>& w, const HomTable<K>& homs,
                                   const std::vector<int>& c) {
  FieldScope<K> fs(w.alg->field);
  std::vector<int> out;
  for (int m : c) {
    std::vector<Morphism<K>> gens;
    for (int x : c) {
      if (x == m) continue;
      for (const auto& b : homs.at(x, m).basis) gens.push_back(b);
    }
    auto sub = sub_generated(w.mods[m], gens);
    if (!sub.is_full()) out.push_back(m);
  }
  return out;
}

template <class K>
PartitionTable<K> make_partition(const Window<K>& w, const HomTable<K>& homs, int max_layer = 0,
                                 int tau_bound = 8) {
  FieldScope<K> fs(w.alg->field);
  if (max_layer <= 0) max_layer = w.size() + 1;
  PartitionTable<K> pt;
  pt.w = &w;
  pt.layer.assign(w.size(), PartitionTable<K>::kUnknown);
  pt.pinf_cert.assign(w.size(), 0);

  // Mutual-generation fixed point, first: if every member of a set S is
  // generated by add(S minus itself), no member can ever be a split
  // projective, so all of S lies in P_inf.  Window generation is a lower
  // bound, so the surviving set is certified.  (This covers ray tubes,
  // where tau-orbits run into the extension projective and tau-periodicity
  // cannot fire.)  Certified modules stay in the remainder as generators.
  {
    std::vector<int> cand(w.size());
    for (int i = 0; i < w.size(); ++i) cand[i] = i;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < cand.size(); ++k) {
        int m = cand[k];
        std::vector<Morphism<K>> gens;
        for (int x : cand) {
          if (x == m) continue;
          for (const auto& b : homs.at(x, m).basis) gens.push_back(b);
        }
        if (!sub_generated(w.mods[m], gens).is_full()) {
          cand.erase(cand.begin() + k);
          changed = true;
          break;
        }
      }
    }
    for (int m : cand) {
      pt.pinf_cert[m] = 1;
      pt.layer[m] = PartitionTable<K>::kInf;
    }
  }

  std::vector<int> c(w.size());
  for (int i = 0; i < w.size(); ++i) c[i] = i;
  for (;;) {
    int assigned_before = 0;
    for (int m : c)
      if (pt.layer[m] == PartitionTable<K>::kUnknown) ++assigned_before;
    if (assigned_before == 0 || (int)pt.layers.size() >= max_layer) break;
    auto p = split_projectives(w, homs, c);
    std::vector<int> layer_members;
    for (int m : p)
      if (!pt.pinf_cert[m]) layer_members.push_back(m);  // P_inf modules stay as generators
    if (layer_members.empty()) break;
    for (int m : layer_members) pt.layer[m] = (int)pt.layers.size();
    pt.layers.push_back(layer_members);
    std::vector<int> rest;
    for (int m : c)
      if (pt.layer[m] == PartitionTable<K>::kUnknown || pt.pinf_cert[m]) rest.push_back(m);
    c = rest;
  }
  bool any_unknown = false;
  for (int i = 0; i < w.size(); ++i)
    if (pt.layer[i] == PartitionTable<K>::kUnknown) any_unknown = true;
  pt.emptied = !any_unknown && std::none_of(pt.pinf_cert.begin(), pt.pinf_cert.end(),
                                            [](char x) { return x != 0; });

  // P_0 must be exactly the indecomposable projectives
  {
    std::set<int> p0(pt.layers.empty() ? std::set<int>{}
                                       : std::set<int>(pt.layers[0].begin(), pt.layers[0].end()));
    for (int i = 0; i < w.size(); ++i) {
      bool proj = false;
      for (int x = 0; x < w.alg->vcount() && !proj; ++x)
        if (is_isomorphic(w.mods[i], projective(w.alg, x))) proj = true;
      if (proj != (p0.count(i) > 0))
        throw InternalError("partition: layer 0 is not the set of projectives");
    }
  }

  // residual unknown modules: certify P_inf membership by tau-periodicity
  for (int m = 0; m < w.size(); ++m)
    if (pt.layer[m] == PartitionTable<K>::kUnknown && tau_periodic(w.mods[m], tau_bound)) {
      pt.pinf_cert[m] = 1;
      pt.layer[m] = PartitionTable<K>::kInf;
    }

  // layer certification
  pt.layer_cert.assign(pt.layers.size(), 0);
  for (int n = 0; n < (int)pt.layers.size(); ++n) {
    if (w.complete) {
      pt.layer_cert[n] = 1;
      continue;
    }
    bool ok = true;
    for (int b = 0; b < w.size(); ++b) {
      if (!w.boundary[b]) continue;
      int lb = pt.layer[b];
      if (lb == PartitionTable<K>::kInf) continue;
      if (lb == PartitionTable<K>::kUnknown) lb = (int)pt.layers.size();
      if (lb <= n) ok = false;  // window layers are certified lower bounds
    }
    pt.layer_cert[n] = ok ? 1 : 0;
  }
  return pt;
}

// ---------------------------------------------------------------------------
// traces

template <class K>
struct TraceResult {
  SubRep<K> sub;
  bool certified = false;
};

/// Submodule of M generated by the images of all morphisms from the set.
template <class K>
SubRep<K> trace_of_set(const Window<K>& w, const HomTable<K>& homs, const std::vector<int>& set,
                       int m) {
  FieldScope<K> fs(w.alg->field);
  std::vector<Morphism<K>> gens;
  for (int x : set)
    for (const auto& b : homs.at(x, m).basis) gens.push_back(b);
  return sub_generated(w.mods[m], gens);
}

template <class K>
TraceResult<K> trace_layer(const Window<K>& w, const HomTable<K>& homs,
                           const PartitionTable<K>& pt, int i, int m) {
  std::vector<int> set = i < pt.computed_layers() ? pt.layers[i] : std::vector<int>{};
  bool cert = i < pt.computed_layers() ? pt.layer_certified(i) : (w.complete && pt.emptied);
  return TraceResult<K>{trace_of_set(w, homs, set, m), cert};
}

/// Descending trace chain tr_{P_0}(M) >= tr_{P_1}(M) >= ...; on a complete
/// window one empty layer past the last computed one (the true chain tail).
template <class K>
std::vector<TraceResult<K>> trace_chain(const Window<K>& w, const HomTable<K>& homs,
                                        const PartitionTable<K>& pt, int m) {
  std::vector<TraceResult<K>> chain;
  int top = pt.computed_layers() + ((w.complete && pt.emptied) ? 1 : 0);
  for (int i = 0; i < top; ++i) {
    chain.push_back(trace_layer(w, homs, pt, i, m));
    if (chain.size() >= 2 &&
        !subrep_contains(chain[chain.size() - 2].sub, chain.back().sub))
      throw InternalError("trace chain failed to descend");
  }
  return chain;
}

/// tr_{P_infty}(M): the chain value at the deepest computed layer, certified
/// when (a) the window is complete and the chain ran past every nonempty
/// layer, or (b) the chain is constant for `stability` layers and the value
/// is already generated by certified-P_inf modules.
template <class K>
TraceResult<K> trace_infty(const Window<K>& w, const HomTable<K>& homs,
                           const PartitionTable<K>& pt, int m, int stability = 2) {
  auto chain = trace_chain(w, homs, pt, m);
  TraceResult<K> out;
  if (chain.empty()) {
    out.sub = zero_subrep(w.mods[m]);
    out.certified = w.complete;
    return out;
  }
  out.sub = chain.back().sub;
  out.certified = false;
  if (w.complete && pt.emptied) {
    out.certified = true;
    return out;
  }
  int constant = 1;
  for (int i = (int)chain.size() - 2; i >= 0 && chain[i].sub == out.sub; --i) ++constant;
  if (constant >= stability) {
    std::vector<int> pinf;
    for (int i = 0; i < w.size(); ++i)
      if (pt.pinf_cert[i]) pinf.push_back(i);
    SubRep<K> lower = trace_of_set(w, homs, pinf, m);
    if (lower == out.sub) out.certified = true;  // lower bound meets upper bound
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class K>
struct PostprojContext {
  const Window<K>* w = nullptr;
  const HomTable<K>* homs = nullptr;
  PartitionTable<K> pt;
  int stability = 2;

  TraceResult<K> tr_infty(int m) const { return trace_infty(*w, *homs, pt, m, stability); }
};

template <class K>
PostprojContext<K> make_postproj_context(const Window<K>& w, const HomTable<K>& homs,
                                         int max_layer = 0, int stability = 2, int tau_bound = 8) {
  PostprojContext<K> ctx;
  ctx.w = &w;
  ctx.homs = &homs;
  ctx.pt = make_partition(w, homs, max_layer, tau_bound);
  ctx.stability = stability;
  return ctx;
}

struct PostprojAnswer {
  bool value = false;
  bool certified = false;
  std::string route;
};

/// Postprojectivity of a window module: finite layer membership first, the
/// trace criterion as the cross-check/fallback.
template <class K>
PostprojAnswer is_postprojective(const PostprojContext<K>& ctx, int m) {
  const PartitionTable<K>& pt = ctx.pt;
  if (pt.layer[m] >= 0 && pt.layer[m] != PartitionTable<K>::kInf)
    return {true, pt.layer_certified(pt.layer[m]), "finite layer " + std::to_string(pt.layer[m])};
  if (pt.layer[m] == PartitionTable<K>::kInf)
    return {false, true, "tau-periodic, certified P_inf"};
  auto t = ctx.tr_infty(m);
  if (t.sub.is_full()) return {false, true, "tr_{P_inf}(M) = M"};
  return {true, t.certified, "tr_{P_inf}(M) != M"};
}

/// Same test for a module that need not sit in the window.
template <class K>
PostprojAnswer is_postprojective(const PostprojContext<K>& ctx, const Representation<K>& m,
                                 int tau_bound = 8) {
  int idx = ctx.w->find(m);
  if (idx >= 0) return is_postprojective(ctx, idx);
  if (tau_periodic(m, tau_bound)) return {false, true, "tau-periodic, certified P_inf"};
  return {false, false, "outside the window"};
}

}  // namespace arq
