// One-stop assembly of the objects most commands need: graph, window, Hom
// and rad tables, partition context.  The window and Hom table live behind
// unique_ptrs so the internal cross-references survive moves.
#pragma once

#include <memory>

#include "arq/parse.hpp"
#include "arq/theorems.hpp"

namespace arq {

struct SessionOptions {
  int depth = 6;
  int max_layer = 0;   // 0: window size + 1
  int stability = 2;
  int bound = 0;       // degree bound; 0: 2 * window size
  int tau_bound = 8;
  bool verify_meshes = true;
  bool need_rad = true;
};

template <class K>
struct Session {
  AlgebraPtr<K> alg;
  ARComponentGraph<K> graph;
  std::unique_ptr<Window<K>> window_p;
  std::unique_ptr<HomTable<K>> homs_p;
  RadTable<K> rad;
  PostprojContext<K> ctx;
  SessionOptions opt;

  const Window<K>& window() const { return *window_p; }
  const HomTable<K>& homs() const { return *homs_p; }

  int find_module(const std::string& id) const {
    std::string name = id;
    for (auto& c : name)
      if (c == '_') c = ' ';
    for (int i = 0; i < window().size(); ++i)
      if (window().names[i] == name || window().names[i] == id) return i;
    return -1;
  }
};

template <class K>
Session<K> make_session(const AlgebraPtr<K>& alg, SessionOptions opt = SessionOptions{}) {
  Session<K> s;
  s.opt = opt;
  s.alg = alg;
  s.graph = build_graph(alg, opt.depth, opt.verify_meshes);
  s.window_p = std::make_unique<Window<K>>(window_from_graph(s.graph));
  s.homs_p = std::make_unique<HomTable<K>>(hom_table(*s.window_p));
  if (opt.need_rad) s.rad = rad_table(*s.window_p, *s.homs_p, opt.bound);
  s.ctx = make_postproj_context(*s.window_p, *s.homs_p, opt.max_layer, opt.stability,
                                opt.tau_bound);
  return s;
}

template <class K>
Session<K> make_session(const AlgebraDesc& desc, SessionOptions opt = SessionOptions{}) {
  return make_session(build_algebra<K>(desc), opt);
}

}  // namespace arq
