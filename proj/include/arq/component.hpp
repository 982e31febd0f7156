// AR component graphs: knitting from the projectives and local exploration
// via almost split sequences.
#pragma once

#include <map>
#include <set>

#include "arq/almostsplit.hpp"

namespace arq {

template <class K>
struct ArNode {
  int id = -1;
  Representation<K> rep;
  std::string name;
  bool projective = false;
  bool injective = false;
  int proj_vertex = -1;
  int slice = 0;        // tau^- generation during knitting
  int tau_to = -1;      // id of tau(this), when known
  int tau_minus_to = -1;
  bool meshed = false;     // knit: AR sequence starting here is recorded
  bool explored = false;   // explore: both neighbor sides expanded
  bool boundary = false;
  bool knit_built = false;  // reached by slice knitting from the projectives
};

/// AR sequence assembled by knitting, with the middle's direct-sum layout.
template <class K>
struct Mesh {
  int src = -1, tgt = -1;               // tau tgt = src
  std::vector<int> copy_nodes;          // node id per middle summand copy
  DirectSum<K> middle;
  Morphism<K> g;  // src -> middle (source map)
  Morphism<K> v;  // middle -> tgt
};

struct KnitOptions {
  int depth = 6;
  bool verify_meshes = true;  // is_almost_split + DTr cross-check per mesh
  int max_nodes = 400;
};

template <class K>
struct ARComponentGraph {
  AlgebraPtr<K> alg;
  std::vector<ArNode<K>> nodes;
  std::map<std::pair<int, int>, int> arrows;  // (from, to) -> multiplicity
  std::map<int, Mesh<K>> meshes;              // by source node
  bool complete = false;
  int depth = 0;

  int find_node(const Representation<K>& r) const {
    for (const auto& nd : nodes)
      if (nd.rep.dims == r.dims && is_isomorphic(nd.rep, r)) return nd.id;
    return -1;
  }
  const ArNode<K>& node(int id) const { return nodes[id]; }
  ArNode<K>& node(int id) { return nodes[id]; }

  std::vector<int> preds(int id) const {
    std::vector<int> out;
    for (const auto& [k, mult] : arrows)
      if (k.second == id) out.push_back(k.first);
    return out;
  }
  std::vector<int> succs(int id) const {
    std::vector<int> out;
    for (const auto& [k, mult] : arrows)
      if (k.first == id) out.push_back(k.second);
    return out;
  }

  /// Connected component (arrows + tau links) containing the node.
  std::vector<int> component_of(int id) const {
    std::vector<int> stack{id}, out;
    std::set<int> seen{id};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      auto visit = [&](int y) {
        if (y >= 0 && !seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      };
      for (const auto& [k, mult] : arrows) {
        if (k.first == x) visit(k.second);
        if (k.second == x) visit(k.first);
      }
      visit(nodes[x].tau_to);
      visit(nodes[x].tau_minus_to);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

template <class K>
int ensure_node(ARComponentGraph<K>& g, const Representation<K>& rep) {
  int id = g.find_node(rep);
  if (id >= 0) return id;
  if ((int)g.nodes.size() >= 400) throw ResourceError("component graph exceeded node bound");
  ArNode<K> nd;
  nd.id = (int)g.nodes.size();
  nd.rep = rep;
  for (int x = 0; x < g.alg->vcount(); ++x) {
    if (nd.proj_vertex < 0 && is_isomorphic(rep, projective(g.alg, x))) {
      nd.projective = true;
      nd.proj_vertex = x;
    }
    if (!nd.injective && is_isomorphic(rep, injective(g.alg, x))) nd.injective = true;
  }
  g.nodes.push_back(std::move(nd));
  return g.nodes.back().id;
}

/// Assign display names: P/I/S matches first, then tau^- orbits of
/// projectives, then M<id>.
template <class K>
void name_nodes(ARComponentGraph<K>& g) {
  for (auto& nd : g.nodes) {
    if (nd.projective) {
      nd.name = "P" + g.alg->quiver.vertices[nd.proj_vertex];
      continue;
    }
    if (nd.injective) {
      for (int x = 0; x < g.alg->vcount(); ++x)
        if (is_isomorphic(nd.rep, injective(g.alg, x))) {
          nd.name = "I" + g.alg->quiver.vertices[x];
          break;
        }
      if (!nd.name.empty()) continue;
    }
    bool named = false;
    for (int x = 0; x < g.alg->vcount() && !named; ++x)
      if (nd.rep.dims == simple(g.alg, x).dims && is_isomorphic(nd.rep, simple(g.alg, x))) {
        nd.name = "S" + g.alg->quiver.vertices[x];
        named = true;
      }
    if (named) continue;
    // tau^- orbit of a projective
    int k = 0, at = nd.id;
    while (at >= 0 && !g.nodes[at].projective && k <= (int)g.nodes.size()) {
      at = g.nodes[at].tau_to;
      ++k;
    }
    if (at >= 0 && g.nodes[at].projective) {
      std::string pw = k == 1 ? "" : "^" + std::to_string(k);
      nd.name = "tauminus" + pw + " P" + g.alg->quiver.vertices[g.nodes[at].proj_vertex];
      continue;
    }
    nd.name = "M" + std::to_string(nd.id);
  }
}

}  // namespace detail

/// Knit the component(s) containing the projectives, slice by slice.
template <class K>
ARComponentGraph<K> knit(const AlgebraPtr<K>& alg, KnitOptions opt = KnitOptions{}) {
  FieldScope<K> fs(alg->field);
  ARComponentGraph<K> g;
  g.alg = alg;
  g.depth = opt.depth;
  if (opt.depth < 1) throw InputError("knit: depth must be >= 1");

  struct Dep {  // one copy of an indecomposable summand of rad P
    Representation<K> rep;
    Morphism<K> emb;  // rep -> P
    int node = -1;
  };
  std::map<int, std::vector<Dep>> rad_deps;  // projective node -> copies

  for (int x = 0; x < alg->vcount(); ++x) detail::ensure_node(g, projective(alg, x));
  int nproj = (int)g.nodes.size();
  for (auto& nd : g.nodes) nd.knit_built = true;
  for (int p = 0; p < nproj; ++p) {
    auto sub = rad_of_projective(alg, g.nodes[p].proj_vertex);
    auto radp = sub_to_rep(sub);
    std::vector<Dep> deps;
    for (auto& [rep, emb] : decompose_with_embeddings(radp.rep))
      deps.push_back(Dep{rep, compose(radp.map, emb), -1});
    rad_deps[p] = std::move(deps);
  }

  // match unresolved rad-P summands against a node, recording the arrow
  auto match_node = [&](int id) {
    for (auto& [p, deps] : rad_deps)
      for (auto& d : deps)
        if (d.node < 0 && d.rep.dims == g.nodes[id].rep.dims &&
            is_isomorphic(d.rep, g.nodes[id].rep)) {
          d.node = id;
          g.arrows[{id, p}] += 1;
        }
  };
  for (int id = 0; id < nproj; ++id) match_node(id);

  auto resolved = [&](int id) { return g.nodes[id].injective || g.nodes[id].meshed; };

  // predecessors whose meshes feed the mesh of `id`
  auto dep_nodes = [&](int id) {
    std::vector<int> out;
    if (g.nodes[id].projective) {
      for (const Dep& d : rad_deps[id]) out.push_back(d.node);  // -1 when unseen
    } else {
      for (const auto& [k, mult] : g.arrows)
        if (k.second == id)
          for (int c = 0; c < mult; ++c) out.push_back(k.first);
    }
    return out;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (int id = 0; id < (int)g.nodes.size(); ++id) {
      if (g.nodes[id].meshed || g.nodes[id].injective || g.nodes[id].slice >= opt.depth) continue;
      bool ready = true;
      for (int d : dep_nodes(id))
        if (d < 0 || !resolved(d)) ready = false;
      if (!ready) continue;
      const Representation<K> mrep = g.nodes[id].rep;  // node storage may reallocate
      const int mslice = g.nodes[id].slice;

      // assemble the source map M -> E
      std::vector<int> copy_nodes;
      std::vector<Representation<K>> parts;
      std::vector<Morphism<K>> comps;
      // (a) projectives P with M a summand of rad P
      for (int p = 0; p < nproj; ++p)
        for (const Dep& d : rad_deps[p])
          if (d.node == id) {
            auto w = find_iso(mrep, d.rep);
            if (!w) throw InternalError("knit: recorded summand no longer matches");
            copy_nodes.push_back(p);
            parts.push_back(g.nodes[p].rep);
            comps.push_back(compose(d.emb, *w));
          }
      // (b) tau^- of non-injective predecessors
      for (int n : g.preds(id)) {
        if (g.nodes[n].injective) continue;
        const Mesh<K>& mesh = g.meshes.at(n);
        for (size_t c = 0; c < mesh.copy_nodes.size(); ++c)
          if (mesh.copy_nodes[c] == id) {
            copy_nodes.push_back(mesh.tgt);
            parts.push_back(g.nodes[mesh.tgt].rep);
            comps.push_back(compose(mesh.v, mesh.middle.incl[c]));
          }
      }
      Mesh<K> mesh;
      mesh.src = id;
      mesh.copy_nodes = copy_nodes;
      mesh.middle = direct_sum(parts, alg);
      mesh.g = zero_morphism(mrep, mesh.middle.rep);
      for (size_t c = 0; c < comps.size(); ++c)
        mesh.g = mor_add(mesh.g, compose(mesh.middle.incl[c], comps[c]));
      for (size_t x = 0; x < mesh.g.f.size(); ++x)
        if (rank_of(mesh.g.f[x]) != mrep.dims[x])
          throw InternalError("knit: source map of a non-injective module is not mono");
      auto co = cokernel(mesh.g);
      mesh.v = co.map;

      int nid = g.find_node(co.rep);
      if (nid >= 0) throw InternalError("knit: mesh cokernel duplicates node " + g.nodes[nid].name);
      nid = detail::ensure_node(g, co.rep);
      mesh.tgt = nid;
      g.nodes[nid].knit_built = true;
      g.nodes[nid].slice = mslice + 1;
      g.nodes[nid].tau_to = id;
      g.nodes[id].tau_minus_to = nid;
      for (size_t c = 0; c < copy_nodes.size(); ++c) g.arrows[{copy_nodes[c], nid}] += 1;

      if (opt.verify_meshes) {
        // mesh orientation: 0 -> M -> E -> tau^- M -> 0 ends at tau^- M
        if (!is_almost_split(AlmostSplitSeq<K>{mrep, mesh.middle.rep, co.rep, mesh.g, mesh.v}))
          throw InternalError("knit: mesh failed the almost-split verification");
        if (!is_isomorphic(tau(co.rep), mrep))
          throw InternalError("knit: DTr disagrees with the mesh translate");
      }

      g.meshes[id] = std::move(mesh);
      match_node(nid);
      g.nodes[id].meshed = true;
      progress = true;
    }
  }

  for (auto& nd : g.nodes) nd.boundary = !nd.meshed && !nd.injective;
  g.complete = true;
  for (auto& nd : g.nodes)
    if (nd.boundary) g.complete = false;
  detail::name_nodes(g);
  return g;
}

/// Grow the graph around a seed by almost split sequences, r mesh layers.
template <class K>
void explore_component(ARComponentGraph<K>& g, const Representation<K>& seed, int radius) {
  FieldScope<K> fs(g.alg->field);
  std::vector<int> frontier{detail::ensure_node(g, seed)};
  for (int level = 0; level < radius && !frontier.empty(); ++level) {
    std::vector<int> next;
    for (int id : frontier) {
      if (g.nodes[id].explored || g.nodes[id].meshed) continue;
      // predecessors
      if (g.nodes[id].projective) {
        auto radp = sub_to_rep(rad_of_projective(g.alg, g.nodes[id].proj_vertex));
        for (auto& [rep, mult] : decompose(radp.rep)) {
          int y = detail::ensure_node(g, rep);
          g.arrows[{y, id}] = mult;
          next.push_back(y);
        }
      } else {
        auto ass = almost_split_sequence_ending_at(g.nodes[id].rep);
        int t = detail::ensure_node(g, ass.left);
        g.nodes[id].tau_to = t;
        g.nodes[t].tau_minus_to = id;
        next.push_back(t);
        for (auto& [rep, mult] : decompose(ass.middle)) {
          int y = detail::ensure_node(g, rep);
          g.arrows[{y, id}] = mult;
          g.arrows[{t, y}] = mult;
          next.push_back(y);
        }
      }
      // successors
      if (g.nodes[id].injective) {
        auto quo = quotient_by(socle_subrep(g.nodes[id].rep));
        if (!quo.rep.is_zero_rep())
          for (auto& [rep, mult] : decompose(quo.rep)) {
            int y = detail::ensure_node(g, rep);
            g.arrows[{id, y}] = mult;
            next.push_back(y);
          }
      } else {
        Representation<K> tm = tau_minus(g.nodes[id].rep);
        auto ass = almost_split_sequence_ending_at(tm);
        int t = detail::ensure_node(g, ass.right);
        g.nodes[id].tau_minus_to = t;
        g.nodes[t].tau_to = id;
        next.push_back(t);
        for (auto& [rep, mult] : decompose(ass.middle)) {
          int y = detail::ensure_node(g, rep);
          g.arrows[{id, y}] = mult;
          g.arrows[{y, t}] = mult;
          next.push_back(y);
        }
      }
      g.nodes[id].explored = true;
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = next;
  }
  for (auto& nd : g.nodes) nd.boundary = !nd.meshed && !nd.explored && !nd.injective;
  detail::name_nodes(g);
}

/// Standalone exploration around one module.
template <class K>
ARComponentGraph<K> explore_component(const AlgebraPtr<K>& alg, const Representation<K>& seed,
                                      int radius) {
  ARComponentGraph<K> g;
  g.alg = alg;
  g.depth = radius;
  explore_component(g, seed, radius);
  return g;
}

/// Knit from the projectives, then explore around any projective whose mesh
/// stayed blocked (its component is not reachable by knitting alone).
template <class K>
ARComponentGraph<K> build_graph(const AlgebraPtr<K>& alg, int depth, bool verify = true) {
  auto g = knit(alg, KnitOptions{depth, verify, 400});
  for (int id = 0; id < (int)g.nodes.size(); ++id)
    if (g.nodes[id].projective && !g.nodes[id].meshed && !g.nodes[id].injective) {
      Representation<K> seed = g.nodes[id].rep;
      explore_component(g, seed, depth);
    }
  return g;
}

/// No projective or injective among the explored nodes; the answer carries
/// the explored-radius qualifier via `qualified`.
template <class K>
bool is_regular_component(const ARComponentGraph<K>& g, const std::vector<int>& comp,
                          bool* qualified = nullptr) {
  if (comp.empty()) throw InputError("is_regular_component: empty component");
  bool q = false;
  for (int id : comp) {
    if (g.nodes[id].boundary) q = true;
    if (g.nodes[id].projective || g.nodes[id].injective) {
      if (qualified) *qualified = q;
      return false;
    }
  }
  if (qualified) *qualified = q;
  return true;
}

}  // namespace arq
