// Degrees of irreducible morphisms and the machine checks of the structural
// statements (P-discreteness, arrow-layer scans, path existence, the trace
// lemmas, the degree/postprojectivity biconditional and its consequences).
#pragma once

#include <optional>
#include <queue>
#include <set>

#include "arq/partition.hpp"
#include "arq/submodules.hpp"

namespace arq {

enum class CheckStatus { Pass, Fail, Qualified, PreconditionUnmet };

inline const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Qualified: return "qualified";
    default: return "precondition-unmet";
  }
}

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::vector<std::string> witnesses;
};

// ---------------------------------------------------------------------------
// degrees

struct DegreeResult {
  enum Kind { Finite, Infinite, AtLeast } kind = AtLeast;
  int n = 0;  // the degree (Finite) or the certified lower bound (AtLeast)
  bool certified = false;
  std::string route;

  std::string str() const {
    switch (kind) {
      case Finite:
        return std::to_string(n) + (certified ? " (certified; " : " (uncertified; ") + route + ")";
      case Infinite:
        return std::string("infinity") + (certified ? " (certified; " : " (uncertified; ") + route +
               ")";
      default:
        return ">= " + std::to_string(n) + " (uncertified; " + route + ")";
    }
  }
};

template <class K>
bool is_mono(const Morphism<K>& f) {
  for (size_t x = 0; x < f.f.size(); ++x)
    if (rank_of(f.f[x]) != f.src.dims[x]) return false;
  return true;
}
template <class K>
bool is_epi(const Morphism<K>& f) {
  for (size_t x = 0; x < f.f.size(); ++x)
    if (rank_of(f.f[x]) != f.tgt.dims[x]) return false;
  return true;
}

/// Largest 1 <= k <= cap with g in the window rad^k (0 if not even in rad).
template <class K>
int membership_level(const RadTable<K>& t, int i, int j, const Morphism<K>& g, int cap) {
  int best = 0;
  for (int k = 1; k <= cap && k <= t.levels; ++k) {
    if (in_rad(t, i, j, g, k))
      best = k;
    else
      break;
  }
  if (best == t.levels && t.stable) return cap;  // stable tail: membership at every level
  return best;
}

/// d_r(f) via the cokernel criterion, with the Theorem 3.1 route on
/// truncated windows (hypothesis: tr_{P_inf}(N) = 0 certified).
template <class K>
DegreeResult degree_right(const Morphism<K>& f, const RadTable<K>& t,
                          const PostprojContext<K>& ctx, int bound = 0) {
  const Window<K>& w = *t.w;
  if (bound <= 0) bound = 2 * w.size();
  if (!is_mono(f)) throw InputError("degree_right: morphism is not mono; use degree_left");
  int j = w.find(f.tgt);
  if (j < 0) throw InputError("degree_right: target not in window");
  auto co = cokernel(f);
  if (decompose(co.rep).size() != 1)
    throw InputError("degree_right: cokernel decomposable; decompose first");

  int cidx = w.find(co.rep);
  int lvl = 0;
  if (cidx >= 0) {
    lvl = membership_level(t, j, cidx, co.map, bound);
    if (lvl >= 1 && lvl < bound && !in_rad(t, j, cidx, co.map, lvl + 1)) {
      if (w.complete) return {DegreeResult::Finite, lvl, true, "rad table (complete window)"};
      if (lvl == 1 && is_irreducible_exact(co.map))
        return {DegreeResult::Finite, 1, true, "sink-map irreducibility of coker"};
    }
  }

  // Theorem 3.1 route: d_r(f) < inf iff Coker f postprojective
  auto tr = ctx.tr_infty(j);
  if (tr.certified && tr.sub.is_zero_sub()) {
    PostprojAnswer pp = cidx >= 0 ? is_postprojective(ctx, cidx)
                                  : is_postprojective(ctx, co.rep);
    if (pp.certified && !pp.value)
      return {DegreeResult::Infinite, 0, true, "thm31: Coker not postprojective (" + pp.route + ")"};
    if (pp.certified && pp.value)
      return {DegreeResult::Finite, std::max(lvl, 1), false,
              "thm31: Coker postprojective; value from window memberships"};
  }
  if (lvl >= 1) return {DegreeResult::AtLeast, lvl, false, "window membership only"};
  return {DegreeResult::AtLeast, 1, false, "cokernel map lies in rad"};
}

/// d_l(f) via the dual kernel criterion (no theorem route: the preinjective
/// side is out of scope).
template <class K>
DegreeResult degree_left(const Morphism<K>& f, const RadTable<K>& t, int bound = 0) {
  const Window<K>& w = *t.w;
  if (bound <= 0) bound = 2 * w.size();
  if (!is_epi(f)) throw InputError("degree_left: morphism is not epi; use degree_right");
  int i = w.find(f.src);
  if (i < 0) throw InputError("degree_left: source not in window");
  auto ke = kernel(f);
  if (decompose(ke.rep).size() != 1)
    throw InputError("degree_left: kernel decomposable; decompose first");
  int kidx = w.find(ke.rep);
  if (kidx < 0) return {DegreeResult::AtLeast, 1, false, "kernel not in window"};
  int lvl = membership_level(t, kidx, i, ke.map, bound);
  if (lvl >= 1 && lvl < bound && !in_rad(t, kidx, i, ke.map, lvl + 1)) {
    if (w.complete) return {DegreeResult::Finite, lvl, true, "rad table (complete window)"};
    if (lvl == 1 && is_irreducible_exact(ke.map))
      return {DegreeResult::Finite, 1, true, "sink-map irreducibility of kernel inclusion"};
  }
  return {DegreeResult::AtLeast, std::max(lvl, 1), false, "window membership only"};
}

// ---------------------------------------------------------------------------
// P-discreteness and the arrow scans

template <class K>
struct DiscreteReport {
  CheckReport report;
  bool value = true;  // no violation found among the decidable comparisons
  int witness_module = -1;
  int witness_layer = -1;
};

/// tr_{P_{i+1}}(M) = tr_{P_inf}(M) for every M of finite layer i in the
/// component.  A violation is only asserted when both traces are certified
/// (the window trace of an uncertified layer is merely a lower bound).
template <class K>
DiscreteReport<K> check_discrete(const ARComponentGraph<K>& g, const std::vector<int>& comp,
                                 const PostprojContext<K>& ctx) {
  const Window<K>& w = *ctx.w;
  DiscreteReport<K> out;
  out.report.id = "discrete";
  bool all_cert = true;
  for (int id : comp) {
    int m = id;  // window indices coincide with node ids
    int lay = ctx.pt.layer[m];
    if (lay < 0 || lay == PartitionTable<K>::kInf) continue;
    auto tnext = trace_layer(w, *ctx.homs, ctx.pt, lay + 1, m);
    auto tinf = ctx.tr_infty(m);
    if (!tnext.certified || !tinf.certified) {
      all_cert = false;
      continue;
    }
    if (!(tnext.sub == tinf.sub)) {
      out.value = false;
      out.report.status = CheckStatus::Fail;
      out.witness_module = m;
      out.witness_layer = lay;
      out.report.detail = "tr_{P_" + std::to_string(lay + 1) + "}(" + w.names[m] +
                          ") != tr_{P_inf}(" + w.names[m] + ")";
      out.report.witnesses.push_back(w.names[m] + " in P_" + std::to_string(lay) +
                                     ": tr_{P_{i+1}} has dimension " +
                                     std::to_string(tnext.sub.total_dim()) + ", tr_{P_inf} has " +
                                     std::to_string(tinf.sub.total_dim()));
      return out;
    }
  }
  out.report.status = all_cert ? CheckStatus::Pass : CheckStatus::Qualified;
  out.report.detail =
      all_cert ? "P-discrete" : "P-discrete on every certified comparison within the window";
  return out;
}

/// Prop 2.4(b): no arrow M -> N with layer(M) = j, layer(N) = i, i < j < inf.
template <class K>
CheckReport check_prop24(const ARComponentGraph<K>& g, const std::vector<int>& comp,
                         const PostprojContext<K>& ctx, bool p_discrete) {
  CheckReport r;
  r.id = "prop24";
  std::set<int> in_comp(comp.begin(), comp.end());
  for (const auto& [k, mult] : g.arrows) {
    if (!in_comp.count(k.first) || !in_comp.count(k.second)) continue;
    int lj = ctx.pt.layer[k.first], li = ctx.pt.layer[k.second];
    if (lj < 0 || li < 0 || lj == PartitionTable<K>::kInf || li == PartitionTable<K>::kInf)
      continue;
    if (li < lj)
      r.witnesses.push_back("arrow " + ctx.w->names[k.first] + " (P_" + std::to_string(lj) +
                            ") -> " + ctx.w->names[k.second] + " (P_" + std::to_string(li) + ")");
  }
  if (!p_discrete) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "component not P-discrete; " + std::to_string(r.witnesses.size()) +
               " descending arrows reported";
  } else if (r.witnesses.empty()) {
    r.status = CheckStatus::Pass;
    r.detail = "no arrow descends to a strictly smaller finite layer";
  } else {
    r.status = CheckStatus::Fail;
    r.detail = "descending arrow in a P-discrete component";
  }
  return r;
}

/// Theorem 2.3: no arrow M -> N with layer(M) = i, layer(N) = j, i+1 < j < inf.
template <class K>
CheckReport check_thm23(const ARComponentGraph<K>& g, const std::vector<int>& comp,
                        const PostprojContext<K>& ctx, bool p_discrete) {
  CheckReport r;
  r.id = "thm23";
  std::set<int> in_comp(comp.begin(), comp.end());
  for (const auto& [k, mult] : g.arrows) {
    if (!in_comp.count(k.first) || !in_comp.count(k.second)) continue;
    int li = ctx.pt.layer[k.first], lj = ctx.pt.layer[k.second];
    if (li < 0 || lj < 0 || li == PartitionTable<K>::kInf || lj == PartitionTable<K>::kInf)
      continue;
    if (li + 1 < lj)
      r.witnesses.push_back("arrow " + ctx.w->names[k.first] + " (P_" + std::to_string(li) +
                            ") -> " + ctx.w->names[k.second] + " (P_" + std::to_string(lj) + ")");
  }
  if (!p_discrete) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "component not P-discrete; " + std::to_string(r.witnesses.size()) +
               " layer-skipping arrows reported";
  } else if (r.witnesses.empty()) {
    r.status = CheckStatus::Pass;
    r.detail = "no arrow skips a layer";
  } else {
    r.status = CheckStatus::Fail;
    r.detail = "layer-skipping arrow in a P-discrete component";
  }
  return r;
}

// ---------------------------------------------------------------------------
// paths of irreducible morphisms

template <class K>
struct PathSearch {
  bool found = false;
  std::vector<int> nodes;
  bool certified = false;  // composite certified outside rad^inf
  std::string certificate;
};

/// BFS through postprojective nodes from layer-j sources to M (Lemma 2.2),
/// certifying the composite against rad^inf via the table or Prop 1.1.
template <class K>
PathSearch<K> find_postprojective_path(const ARComponentGraph<K>& g, int from, int to,
                                       const RadTable<K>& t, const PostprojContext<K>& ctx) {
  PathSearch<K> out;
  const Window<K>& w = *t.w;
  auto postproj = [&](int id) {
    int l = ctx.pt.layer[id];
    return l >= 0 && l != PartitionTable<K>::kInf;
  };
  if (!postproj(from) || !postproj(to)) return out;
  std::map<int, int> prev;
  std::queue<int> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == to) break;
    for (const auto& [k, mult] : g.arrows)
      if (k.first == x && postproj(k.second) && !prev.count(k.second)) {
        prev[k.second] = x;
        q.push(k.second);
      }
  }
  if (!prev.count(to)) return out;
  std::vector<int> path;
  for (int at = to; at != from; at = prev[at]) path.push_back(at);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  out.found = true;
  out.nodes = path;
  if (path.size() == 1) {
    out.certified = true;
    out.certificate = "empty path";
    return out;
  }
  // realize the composite with the canonical irreducible maps
  Morphism<K> comp = irreducible_maps(t, path[0], path[1])[0];
  for (size_t s = 2; s < path.size(); ++s)
    comp = compose(irreducible_maps(t, path[s - 1], path[s])[0], comp);
  int len = (int)path.size() - 1;
  if (t.stable && w.complete && !in_rad(t, from, to, comp, t.levels)) {
    out.certified = true;
    out.certificate = "composite in rad^" + std::to_string(len) + " \\ rad^inf (complete window)";
    return out;
  }
  // Prop 1.1: Im(comp) not inside tr_{P_inf}(to) forces comp outside rad^inf
  auto tr = ctx.tr_infty(to);
  if (tr.certified && !subrep_contains(tr.sub, image_subrep(comp))) {
    out.certified = true;
    out.certificate = "image not inside tr_{P_inf} (Prop 1.1)";
  }
  return out;
}

/// Corollary 2.6: a layerwise path P_0 -> P_1 -> ... -> P_i = M exists and
/// the BFS distance from the projectives equals the layer.
template <class K>
CheckReport check_cor26(const ARComponentGraph<K>& g, const std::vector<int>& comp,
                        const PostprojContext<K>& ctx, bool p_discrete) {
  CheckReport r;
  r.id = "cor26";
  if (!p_discrete) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "component not P-discrete";
    return r;
  }
  std::set<int> in_comp(comp.begin(), comp.end());
  // BFS distance from all projectives
  std::map<int, int> dist;
  std::queue<int> q;
  for (int id : comp)
    if (g.nodes[id].projective) {
      dist[id] = 0;
      q.push(id);
    }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (const auto& [k, mult] : g.arrows)
      if (k.first == x && in_comp.count(k.second) && !dist.count(k.second)) {
        dist[k.second] = dist[x] + 1;
        q.push(k.second);
      }
  }
  // layerwise paths: node of layer i reachable from layer i-1 by one arrow
  for (int id : comp) {
    int lay = ctx.pt.layer[id];
    if (lay < 0 || lay == PartitionTable<K>::kInf) continue;
    if (!dist.count(id) || dist[id] != lay) {
      r.status = CheckStatus::Fail;
      r.witnesses.push_back(ctx.w->names[id] + ": distance " +
                            (dist.count(id) ? std::to_string(dist[id]) : "inf") + " != layer " +
                            std::to_string(lay));
      continue;
    }
    if (lay == 0) continue;
    bool step = false;
    for (const auto& [k, mult] : g.arrows)
      if (k.second == id && in_comp.count(k.first) && ctx.pt.layer[k.first] == lay - 1) step = true;
    if (!step) {
      r.status = CheckStatus::Fail;
      r.witnesses.push_back(ctx.w->names[id] + ": no arrow from layer " + std::to_string(lay - 1));
    }
  }
  if (r.status == CheckStatus::Pass) {
    bool cert = true;
    for (int n = 0; n < ctx.pt.computed_layers(); ++n)
      if (!ctx.pt.layer_certified(n)) cert = false;
    if (!cert) r.status = CheckStatus::Qualified;
    r.detail = "graph distance from the projectives equals the layer index";
  } else {
    r.detail = "distance/layer mismatch";
  }
  return r;
}

// ---------------------------------------------------------------------------
// trace lemmas on complete windows

template <class K>
CheckReport check_lemma12(const RadTable<K>& t, const PostprojContext<K>& ctx) {
  CheckReport r;
  r.id = "lemma12";
  const Window<K>& w = *t.w;
  if (!w.complete || !t.stable) {
    r.status = CheckStatus::Qualified;
    r.detail = "window incomplete: Hom(P, N) = rad^i only verifiable as membership";
    return r;
  }
  for (int p : ctx.pt.layers.empty() ? std::vector<int>{} : ctx.pt.layers[0])
    for (int n = 0; n < w.size(); ++n) {
      int i = ctx.pt.layer[n];
      if (i <= 0 || i == PartitionTable<K>::kInf) continue;
      if (!t.rad(p, n, std::min(i, t.levels)).is_full()) {
        r.status = CheckStatus::Fail;
        r.witnesses.push_back("Hom(" + w.names[p] + ", " + w.names[n] + ") != rad^" +
                              std::to_string(i));
      }
    }
  if (r.status == CheckStatus::Pass) r.detail = "Hom(P, N) = rad^i(P, N) for P in P_0, N in P_i";
  return r;
}

template <class K>
CheckReport check_prop11(const RadTable<K>& t, const PostprojContext<K>& ctx) {
  CheckReport r;
  r.id = "prop11";
  const Window<K>& w = *t.w;
  if (!w.complete || !t.stable) {
    r.status = CheckStatus::Qualified;
    r.detail = "window incomplete";
    return r;
  }
  for (int i = 0; i < w.size(); ++i)
    for (int j = 0; j < w.size(); ++j) {
      auto pp = is_postprojective(ctx, j);
      if (!pp.value) continue;
      auto tr = ctx.tr_infty(j);
      for (const auto& f : t.homs->at(i, j).basis) {
        if (subrep_contains(tr.sub, image_subrep(f))) continue;
        if (in_rad(t, i, j, f, t.levels)) {
          r.status = CheckStatus::Fail;
          r.witnesses.push_back("Hom(" + w.names[i] + ", " + w.names[j] +
                                "): image escapes tr_{P_inf} but the map lies in rad^inf");
        }
      }
    }
  if (r.status == CheckStatus::Pass)
    r.detail = "Im f not inside tr_{P_inf}(N) forces f outside rad^inf, all hom basis elements";
  return r;
}

// ---------------------------------------------------------------------------
// Theorem 3.1 / Corollary 3.2

template <class K>
CheckReport check_thm31(const Morphism<K>& f, const RadTable<K>& t,
                        const PostprojContext<K>& ctx, int bound = 0) {
  CheckReport r;
  r.id = "thm31";
  const Window<K>& w = *t.w;
  int j = w.find(f.tgt);
  if (j < 0) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "target not in window";
    return r;
  }
  auto tr = ctx.tr_infty(j);
  if (!tr.certified || !tr.sub.is_zero_sub()) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "tr_{P_inf}(N) = 0 not certified";
    return r;
  }
  DegreeResult d = degree_right(f, t, ctx, bound);
  auto co = cokernel(f);
  PostprojAnswer pp = is_postprojective(ctx, co.rep);
  int ci = w.find(co.rep);
  if (ci >= 0) pp = is_postprojective(ctx, ci);
  bool dr_finite = d.kind == DegreeResult::Finite;
  bool dr_inf = d.kind == DegreeResult::Infinite;
  r.witnesses.push_back("d_r(f) = " + d.str());
  r.witnesses.push_back(std::string("Coker f postprojective: ") + (pp.value ? "yes" : "no") +
                        (pp.certified ? " (certified, " : " (uncertified, ") + pp.route + ")");
  if ((dr_finite || dr_inf) && pp.certified) {
    bool ok = (dr_finite && pp.value) || (dr_inf && !pp.value);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = ok ? "biconditional holds" : "biconditional violated";
    if (d.route.rfind("thm31", 0) == 0)
      r.detail += "; degree side decided by the theorem (window incomplete)";
    else
      r.detail += "; both sides computed independently";
  } else {
    r.status = CheckStatus::Qualified;
    r.detail = "one side uncertified";
  }
  return r;
}

/// Corollary 3.2: the same biconditional inside a pi-component.
template <class K>
CheckReport check_cor32(const Morphism<K>& f, const ARComponentGraph<K>& g,
                        const std::vector<int>& comp, const RadTable<K>& t,
                        const PostprojContext<K>& ctx, int bound = 0) {
  CheckReport r;
  r.id = "cor32";
  // pi-component: every node postprojective.  A node passes if its finite
  // layer is certified, its tr_{P_inf} vanishes certifiedly, or it was built
  // by slice knitting from the projectives (preprojective-component modules
  // are postprojective).
  for (int id : comp) {
    int lay = ctx.pt.layer[id];
    bool ok = (lay >= 0 && lay != PartitionTable<K>::kInf && ctx.pt.layer_certified(lay)) ||
              g.nodes[id].knit_built;
    if (!ok) {
      auto tr = ctx.tr_infty(id);
      ok = tr.certified && tr.sub.is_zero_sub();
    }
    if (!ok) {
      r.status = CheckStatus::PreconditionUnmet;
      r.detail = "not certified a pi-component: " + ctx.w->names[id] +
                 " has no postprojectivity certificate";
      return r;
    }
  }
  r = check_thm31(f, t, ctx, bound);
  r.id = "cor32";
  return r;
}

// ---------------------------------------------------------------------------
// P_inf-simplicity (over F_p) and the regular-component statements

struct PInfSimpleResult {
  bool value = false;
  bool certified = false;
  std::string detail;
  int add_pn = -1;  // smallest n with every nontrivial submodule in add P^n
};

/// Every nontrivial submodule of M is postprojective (exhaustive over F_p).
inline PInfSimpleResult is_p_infty_simple(const Representation<Fp>& m,
                                          const PostprojContext<Fp>& ctx,
                                          EnumBounds bounds = EnumBounds{}) {
  PInfSimpleResult out;
  auto pp_m = is_postprojective(ctx, m);
  if (!(pp_m.certified && !pp_m.value)) {
    out.detail = "module is not certified to lie in P_inf";
    return out;
  }
  auto subs = submodule_enumerate(m, bounds);
  out.value = true;
  out.certified = true;
  for (const auto& s : subs) {
    if (s.is_zero_sub() || s.is_full()) continue;
    auto rep = sub_to_rep(s).rep;
    for (const auto& [part, mult] : decompose(rep)) {
      auto pp = is_postprojective(ctx, part);
      if (!pp.certified) {
        out.certified = false;
        out.detail = "a submodule summand escaped certification: " + part.dim_str();
      } else if (!pp.value) {
        out.value = false;
        out.detail = "offending submodule summand " + part.dim_str() + " (" + pp.route + ")";
        return out;
      } else {
        int idx = ctx.w->find(part);
        if (idx >= 0 && ctx.pt.layer[idx] >= 0 && ctx.pt.layer[idx] != PartitionTable<Fp>::kInf)
          out.add_pn = std::max(out.add_pn, ctx.pt.layer[idx]);
      }
    }
  }
  if (out.detail.empty())
    out.detail = "all proper nonzero submodules postprojective, inside add P^" +
                 std::to_string(out.add_pn);
  return out;
}

// field bridge Q -> F_p for the Theorem 3.4 route

inline std::optional<Fp> reduce_scalar_mod_p(const Rational& q, long long p) {
  mpz_class den = q.get_den() % (long)p;
  if (den == 0) return std::nullopt;
  mpz_class num = q.get_num() % (long)p;
  Fp a = Fp::make(num.get_si(), p);
  Fp b = Fp::make(den.get_si(), p);
  return a / b;
}

inline std::optional<Representation<Fp>> reduce_rep_mod_p(const Representation<Rational>& m,
                                                          const AlgebraPtr<Fp>& alg) {
  FieldScope<Fp> fs(alg->field);
  Representation<Fp> r;
  r.alg = alg;
  r.dims = m.dims;
  for (const auto& mat : m.mats) {
    Mat<Fp> rm(mat.rows(), mat.cols());
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j) {
        auto v = reduce_scalar_mod_p(mat.at(i, j), alg->field.p);
        if (!v) return std::nullopt;
        rm.at(i, j) = *v;
      }
    r.mats.push_back(std::move(rm));
  }
  if (!is_valid_rep(r)) return std::nullopt;
  return r;
}

inline std::optional<Morphism<Fp>> reduce_morphism_mod_p(const Morphism<Rational>& f,
                                                         const AlgebraPtr<Fp>& alg) {
  auto src = reduce_rep_mod_p(f.src, alg);
  auto tgt = reduce_rep_mod_p(f.tgt, alg);
  if (!src || !tgt) return std::nullopt;
  FieldScope<Fp> fs(alg->field);
  Morphism<Fp> r{*src, *tgt, {}};
  for (const auto& mat : f.f) {
    Mat<Fp> rm(mat.rows(), mat.cols());
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j) {
        auto v = reduce_scalar_mod_p(mat.at(i, j), alg->field.p);
        if (!v) return std::nullopt;
        rm.at(i, j) = *v;
      }
    r.f.push_back(std::move(rm));
  }
  if (!is_morphism(r)) return std::nullopt;
  if (!is_mono(r)) return std::nullopt;  // the reduction must stay a monomorphism
  return r;
}

/// Prop 3.3 operational test: within a regular component, a P_inf-simple
/// module sits at the mouth: the AR sequence ending at it has an
/// indecomposable middle term (plus tau-periodicity for tubes).
template <class K>
CheckReport check_prop33(const Representation<K>& m, const ARComponentGraph<K>& g,
                         const std::vector<int>& comp) {
  CheckReport r;
  r.id = "prop33";
  bool qualified = false;
  if (!is_regular_component(g, comp, &qualified)) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "component not regular within the explored radius";
    return r;
  }
  auto seq = almost_split_sequence_ending_at(m);
  auto parts = decompose(seq.middle);
  bool mouth = parts.size() == 1 && parts[0].second == 1;
  bool periodic = tau_periodic(m);
  r.witnesses.push_back("middle term has " + std::to_string(parts.size()) +
                        " iso-classes of summands");
  r.witnesses.push_back(periodic ? "tau-periodic" : "not tau-periodic within bound");
  if (mouth && periodic) {
    r.status = qualified ? CheckStatus::Qualified : CheckStatus::Pass;
    r.detail = "simple regular by the mouth criterion";
  } else {
    r.status = CheckStatus::Fail;
    r.detail = "mouth criterion violated";
  }
  return r;
}

/// Theorem 3.4 (body form): irreducible mono, tr_{P_inf}(N) = 0 certified,
/// d_r(f) = inf certified; then Coker f is P_inf-simple, checked over F_p.
template <class K>
CheckReport check_thm34(const Morphism<K>& f, const RadTable<K>& t, const PostprojContext<K>& ctx,
                        const Representation<Fp>& coker_fp, const PostprojContext<Fp>& ctx_fp,
                        EnumBounds bounds = EnumBounds{}) {
  CheckReport r;
  r.id = "thm34";
  const Window<K>& w = *t.w;
  int j = w.find(f.tgt);
  auto tr = j >= 0 ? ctx.tr_infty(j) : TraceResult<K>{};
  if (j < 0 || !tr.certified || !tr.sub.is_zero_sub()) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "tr_{P_inf}(N) = 0 not certified";
    return r;
  }
  DegreeResult d = degree_right(f, t, ctx);
  if (!(d.kind == DegreeResult::Infinite && d.certified)) {
    r.status = CheckStatus::PreconditionUnmet;
    r.detail = "d_r(f) = inf not certified (" + d.str() + ")";
    return r;
  }
  auto ps = is_p_infty_simple(coker_fp, ctx_fp, bounds);
  r.witnesses.push_back("d_r(f) = " + d.str());
  r.witnesses.push_back("P_inf-simplicity over F_p: " + ps.detail);
  if (ps.certified && ps.value) {
    r.status = CheckStatus::Pass;
    r.detail = "Coker f is P_inf-simple (checked over F_" +
               std::to_string(ctx_fp.w->alg->field.p) + ")";
  } else if (!ps.certified) {
    r.status = CheckStatus::Qualified;
    r.detail = ps.detail;
  } else {
    r.status = CheckStatus::Fail;
    r.detail = ps.detail;
  }
  return r;
}

}  // namespace arq
