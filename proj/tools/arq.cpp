// arq: Auslander-Reiten machinery for bound quiver algebras over Q and F_p.
//
// Subcommands: algebra-check, knit, partition, trace, degree, verify,
// submodules.  Exit codes: 0 all checks pass, 1 a check failed, 2 input
// error, 3 resource or certification bound hit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "arq/report.hpp"

using namespace arq;

namespace {

struct Cli {
  std::string file;
  std::string field;
  int depth = 6;
  int max_layer = 0;
  int stability = 2;
  int bound = 0;
  int max_dim = 8;
  std::string json_path, dot_path;
  std::string module_id, from_id, to_id, check = "all";
  int layer = -1;
  bool infty = false;
  bool all_irreducibles = false;
  std::string cmd;
};

AlgebraDesc load_desc(const Cli& c) {
  std::ifstream in(c.file);
  if (!in) throw InputError("cannot open " + c.file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string name = c.file;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  AlgebraDesc d = parse_algebra_text(text, name);
  if (!c.field.empty()) {
    if (c.field == "Q") {
      d.field = FieldDesc{true, 0};
    } else if (c.field[0] == 'F') {
      long long p = std::stoll(c.field.substr(1));
      if (!detail::is_prime(p)) throw InputError("--field: " + c.field + " is not prime");
      d.field = FieldDesc{false, p};
    } else {
      throw InputError("--field must be Q or F<p>");
    }
  }
  return d;
}

void emit(const Cli& c, const Json& j) {
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    out << j.dump(2) << "\n";
  }
}

int status_exit(const std::vector<CheckReport>& checks) {
  bool fail = false, qual = false;
  for (const auto& r : checks) {
    if (r.status == CheckStatus::Fail) fail = true;
    if (r.status == CheckStatus::Qualified) qual = true;
  }
  if (fail) return 1;
  if (qual) return 3;
  return 0;
}

SessionOptions session_options(const Cli& c) {
  SessionOptions o;
  o.depth = c.depth;
  o.max_layer = c.max_layer;
  o.stability = c.stability;
  o.bound = c.bound;
  o.verify_meshes = false;  // the test suites run the expensive cross-checks
  return o;
}

template <class K>
int cmd_algebra_check(const Cli& c, const AlgebraDesc& desc) {
  auto alg = build_algebra<K>(desc);
  std::cout << "algebra " << alg->name << " over " << alg->field.name() << "\n";
  std::cout << "dim_k A = " << alg->dim() << "\n";
  std::cout << "nilpotency bound = " << alg->nilpotency_bound() << "\n";
  for (int x = 0; x < alg->vcount(); ++x) {
    std::cout << "P" << alg->quiver.vertices[x] << " dims " << projective(alg, x).dim_str()
              << "  I" << alg->quiver.vertices[x] << " dims "
              << injective(alg, x).dim_str() << "\n";
  }
  if (!c.json_path.empty()) {
    Json j;
    j["algebra"] = {{"name", alg->name},
                    {"field", alg->field.name()},
                    {"dim", alg->dim()},
                    {"nilpotency_bound", alg->nilpotency_bound()}};
    emit(c, j);
  }
  return 0;
}

template <class K>
int cmd_knit(const Cli& c, const AlgebraDesc& desc) {
  auto s = make_session<K>(desc, session_options(c));
  std::cout << "window: " << s.window().size() << " modules, "
            << (s.window().complete ? "complete" : "boundary present") << "\n";
  for (int i = 0; i < s.window().size(); ++i)
    std::cout << "  " << s.window().names[i] << " " << s.window().mods[i].dim_str() << " slice "
              << s.graph.nodes[i].slice << (s.window().boundary[i] ? " (boundary)" : "") << "\n";
  if (!c.dot_path.empty()) {
    std::ofstream out(c.dot_path);
    out << to_dot(s);
  }
  emit(c, session_to_json(s));
  return 0;
}

template <class K>
int cmd_partition(const Cli& c, const AlgebraDesc& desc) {
  auto opt = session_options(c);
  opt.need_rad = false;
  auto s = make_session<K>(desc, opt);
  const auto& pt = s.ctx.pt;
  for (int n = 0; n < pt.computed_layers(); ++n) {
    std::cout << "P_" << n << (pt.layer_certified(n) ? "" : " (within window)") << ":";
    for (int m : pt.layers[n]) std::cout << " " << s.window().names[m];
    std::cout << "\n";
  }
  std::vector<std::string> inf, unknown;
  for (int i = 0; i < s.window().size(); ++i) {
    if (pt.layer[i] == PartitionTable<K>::kInf) inf.push_back(s.window().names[i]);
    if (pt.layer[i] == PartitionTable<K>::kUnknown) unknown.push_back(s.window().names[i]);
  }
  std::cout << "P_inf (certified):";
  for (auto& n : inf) std::cout << " " << n;
  std::cout << "\n";
  if (!unknown.empty()) {
    std::cout << "unclassified within window:";
    for (auto& n : unknown) std::cout << " " << n;
    std::cout << "\n";
  }
  emit(c, session_to_json(s));
  return 0;
}

template <class K>
int cmd_trace(const Cli& c, const AlgebraDesc& desc) {
  auto opt = session_options(c);
  opt.need_rad = false;
  auto s = make_session<K>(desc, opt);
  int m = s.find_module(c.module_id);
  if (m < 0) throw InputError("unknown module id: " + c.module_id);
  TraceResult<K> t;
  std::string which;
  if (c.infty) {
    t = s.ctx.tr_infty(m);
    which = "tr_{P_inf}";
  } else {
    if (c.layer < 0) throw InputError("trace: give --layer i or --infty");
    t = trace_layer(s.window(), s.homs(), s.ctx.pt, c.layer, m);
    which = "tr_{P_" + std::to_string(c.layer) + "}";
  }
  std::cout << which << "(" << s.window().names[m] << ") dims [";
  for (size_t x = 0; x < t.sub.spaces.size(); ++x)
    std::cout << (x ? "," : "") << t.sub.spaces[x].dim();
  std::cout << "] " << (t.certified ? "(certified)" : "(within window)") << "\n";
  return 0;
}

template <class K>
int cmd_degree(const Cli& c, const AlgebraDesc& desc) {
  auto s = make_session<K>(desc, session_options(c));
  int i = s.find_module(c.from_id), j = s.find_module(c.to_id);
  if (i < 0 || j < 0) throw InputError("unknown module id");
  auto irr = irreducible_maps(s.rad, i, j);
  if (irr.empty()) throw InputError("no irreducible maps " + c.from_id + " -> " + c.to_id);
  size_t count = c.all_irreducibles ? irr.size() : 1;
  for (size_t k = 0; k < count; ++k) {
    const auto& f = irr[k];
    if (is_mono(f)) {
      auto d = degree_right(f, s.rad, s.ctx, c.bound);
      std::cout << "d_r(" << s.window().names[i] << " -> " << s.window().names[j]
                << ") = " << d.str() << "\n";
    } else if (is_epi(f)) {
      auto d = degree_left(f, s.rad, c.bound);
      std::cout << "d_l(" << s.window().names[i] << " -> " << s.window().names[j]
                << ") = " << d.str() << "\n";
    } else {
      std::cout << "irreducible map " << k << " is neither mono nor epi\n";
    }
  }
  return 0;
}

template <class K>
int cmd_submodules(const Cli& c, const AlgebraDesc& desc) {
  auto opt = session_options(c);
  opt.need_rad = false;
  auto s = make_session<K>(desc, opt);
  int m = s.find_module(c.module_id);
  if (m < 0) throw InputError("unknown module id: " + c.module_id);
  if constexpr (is_rational_field<K>) {
    throw InputError("submodule enumeration requires F_p (use --field F2)");
  } else {
    EnumBounds b;
    b.max_total_dim = c.max_dim;
    auto subs = submodule_enumerate(s.window().mods[m], b);
    std::cout << subs.size() << " submodules of " << s.window().names[m] << "\n";
    for (auto& sub : subs) {
      std::cout << "  [";
      for (size_t x = 0; x < sub.spaces.size(); ++x)
        std::cout << (x ? "," : "") << sub.spaces[x].dim();
      std::cout << "]\n";
    }
  }
  return 0;
}

// The degree-theorem scans share the list of irreducible monos of the graph.
template <class K>
std::vector<Morphism<K>> irreducible_monos(const Session<K>& s) {
  std::vector<Morphism<K>> out;
  for (const auto& [k, mult] : s.graph.arrows) {
    auto irr = irreducible_maps(s.rad, k.first, k.second);
    if (irr.empty()) continue;
    const auto& f = irr[0];
    if (!is_mono(f)) continue;
    auto co = cokernel(f);
    if (co.rep.is_zero_rep() || decompose(co.rep).size() != 1) continue;
    out.push_back(f);
  }
  return out;
}

template <class K>
int cmd_verify(const Cli& c, const AlgebraDesc& desc) {
  auto s = make_session<K>(desc, session_options(c));
  auto want = [&](const std::string& id) { return c.check == "all" || c.check == id; };
  std::vector<CheckReport> checks;

  std::vector<std::vector<int>> comps;
  {
    std::set<int> seen;
    for (int i = 0; i < (int)s.graph.nodes.size(); ++i)
      if (!seen.count(i)) {
        auto comp = s.graph.component_of(i);
        for (int x : comp) seen.insert(x);
        comps.push_back(comp);
      }
  }

  std::vector<bool> discrete_value;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    auto d = check_discrete(s.graph, comps[ci], s.ctx);
    discrete_value.push_back(d.value);
    if (want("discrete")) {
      if (comps.size() > 1) d.report.id += "[" + std::to_string(ci) + "]";
      checks.push_back(d.report);
    }
  }
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    if (want("prop24"))
      checks.push_back(check_prop24(s.graph, comps[ci], s.ctx, discrete_value[ci]));
    if (want("thm23"))
      checks.push_back(check_thm23(s.graph, comps[ci], s.ctx, discrete_value[ci]));
    if (want("cor26"))
      checks.push_back(check_cor26(s.graph, comps[ci], s.ctx, discrete_value[ci]));
  }
  if (want("lemma12")) checks.push_back(check_lemma12(s.rad, s.ctx));
  if (want("prop11")) checks.push_back(check_prop11(s.rad, s.ctx));

  if (want("thm31") || want("cor32") || want("prop33") || want("thm34")) {
    auto monos = irreducible_monos(s);
    auto aggregate = [&](const std::string& id, auto&& runner) {
      CheckReport agg;
      agg.id = id;
      int ran = 0, passed = 0;
      for (const auto& f : monos) {
        CheckReport r = runner(f);
        if (r.status == CheckStatus::PreconditionUnmet) continue;
        ++ran;
        if (r.status == CheckStatus::Pass) ++passed;
        if (r.status == CheckStatus::Fail) {
          agg.status = CheckStatus::Fail;
          agg.witnesses.insert(agg.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
        }
      }
      if (ran == 0) {
        agg.status = CheckStatus::PreconditionUnmet;
        agg.detail = "no irreducible mono met the hypotheses";
      } else if (agg.status != CheckStatus::Fail) {
        agg.status = passed == ran ? CheckStatus::Pass : CheckStatus::Qualified;
        agg.detail = std::to_string(passed) + "/" + std::to_string(ran) + " instances pass";
      } else {
        agg.detail = "a counterexample instance was found";
      }
      checks.push_back(agg);
    };
    if (want("thm31"))
      aggregate("thm31",
                [&](const Morphism<K>& f) { return check_thm31(f, s.rad, s.ctx, c.bound); });
    if (want("cor32"))
      aggregate("cor32", [&](const Morphism<K>& f) {
        auto comp = s.graph.component_of(s.window().find(f.tgt));
        return check_cor32(f, s.graph, comp, s.rad, s.ctx, c.bound);
      });
    if (want("prop33"))
      aggregate("prop33", [&](const Morphism<K>& f) {
        CheckReport skip;
        skip.id = "prop33";
        skip.status = CheckStatus::PreconditionUnmet;
        auto d = degree_right(f, s.rad, s.ctx, c.bound);
        if (!(d.kind == DegreeResult::Infinite && d.certified)) return skip;
        auto coker = cokernel(f).rep;
        auto tube = explore_component(s.alg, coker, 2);
        auto comp = tube.component_of(tube.find_node(coker));
        return check_prop33(coker, tube, comp);
      });
    if (want("thm34")) {
      if constexpr (is_rational_field<K>) {
        aggregate("thm34", [&](const Morphism<K>& f) {
          CheckReport skip;
          skip.id = "thm34";
          skip.status = CheckStatus::PreconditionUnmet;
          auto d = degree_right(f, s.rad, s.ctx, c.bound);
          if (!(d.kind == DegreeResult::Infinite && d.certified)) return skip;
          for (long long p : {2LL, 3LL}) {
            AlgebraDesc dp = desc;
            dp.field = FieldDesc{false, p};
            try {
              auto alg_p = build_algebra<Fp>(dp);
              auto f_p = reduce_morphism_mod_p(f, alg_p);
              if (!f_p) continue;
              auto opt_p = session_options(c);
              opt_p.depth = std::min(c.depth, 4);
              opt_p.need_rad = false;
              auto sp = make_session<Fp>(alg_p, opt_p);
              auto coker_p = cokernel(*f_p).rep;
              EnumBounds bounds;
              bounds.max_total_dim = c.max_dim;
              return check_thm34(f, s.rad, s.ctx, coker_p, sp.ctx, bounds);
            } catch (const ResourceError&) {
              continue;
            }
          }
          return skip;
        });
      } else {
        aggregate("thm34", [&](const Morphism<K>& f) {
          auto coker = cokernel(f).rep;
          EnumBounds bounds;
          bounds.max_total_dim = c.max_dim;
          return check_thm34(f, s.rad, s.ctx, coker, s.ctx, bounds);
        });
      }
    }
  }

  for (const auto& r : checks) {
    std::cout << r.id << ": " << status_str(r.status);
    if (!r.detail.empty()) std::cout << " - " << r.detail;
    std::cout << "\n";
    for (const auto& wtn : r.witnesses) std::cout << "    " << wtn << "\n";
  }
  emit(c, session_to_json(s, checks));
  return status_exit(checks);
}

template <class K>
int dispatch(const Cli& c, const AlgebraDesc& desc) {
  if (c.cmd == "algebra-check") return cmd_algebra_check<K>(c, desc);
  if (c.cmd == "knit") return cmd_knit<K>(c, desc);
  if (c.cmd == "partition") return cmd_partition<K>(c, desc);
  if (c.cmd == "trace") return cmd_trace<K>(c, desc);
  if (c.cmd == "degree") return cmd_degree<K>(c, desc);
  if (c.cmd == "verify") return cmd_verify<K>(c, desc);
  if (c.cmd == "submodules") return cmd_submodules<K>(c, desc);
  throw InputError("unknown command " + c.cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auslander-Reiten quivers, postprojective partitions and degree checks"};
  app.require_subcommand(1);
  Cli c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", c.file, "algebra description file")->required();
    sub->add_option("--field", c.field, "override the field: Q or F<p>");
    sub->add_option("--depth", c.depth, "knitting/exploration depth");
    sub->add_option("--max-layer", c.max_layer, "partition layer bound");
    sub->add_option("--stability", c.stability, "trace stabilization window");
    sub->add_option("--bound", c.bound, "degree search bound");
    sub->add_option("--max-dim", c.max_dim, "submodule enumeration dimension bound");
    sub->add_option("--json", c.json_path, "write a JSON report here");
  };

  add_common(app.add_subcommand("algebra-check", "parse and summarize the algebra"));
  auto* knit_cmd = app.add_subcommand("knit", "knit the AR quiver from the projectives");
  add_common(knit_cmd);
  knit_cmd->add_option("--dot", c.dot_path, "write a DOT file here");
  add_common(app.add_subcommand("partition", "compute the postprojective partition"));
  auto* trace_cmd = app.add_subcommand("trace", "trace of a partition layer in a module");
  add_common(trace_cmd);
  trace_cmd->add_option("--module", c.module_id, "module id (e.g. P1, I3, tauminus_P3)")
      ->required();
  trace_cmd->add_option("--layer", c.layer, "layer index");
  trace_cmd->add_flag("--infty", c.infty, "compute tr_{P_inf}");
  auto* degree_cmd = app.add_subcommand("degree", "degrees of irreducible maps");
  add_common(degree_cmd);
  degree_cmd->add_option("--from", c.from_id)->required();
  degree_cmd->add_option("--to", c.to_id)->required();
  degree_cmd->add_flag("--all-irreducibles", c.all_irreducibles);
  auto* verify_cmd = app.add_subcommand("verify", "machine-check the structural statements");
  add_common(verify_cmd);
  verify_cmd->add_option(
      "--check", c.check,
      "thm23|prop24|cor26|thm31|cor32|prop33|thm34|lemma12|prop11|discrete|all");
  auto* sub_cmd = app.add_subcommand("submodules", "enumerate submodules (F_p only)");
  add_common(sub_cmd);
  sub_cmd->add_option("--module", c.module_id)->required();

  CLI11_PARSE(app, argc, argv);
  c.cmd = app.get_subcommands()[0]->get_name();

  try {
    AlgebraDesc desc = load_desc(c);
    if (desc.field.rational) return dispatch<Rational>(c, desc);
    return dispatch<Fp>(c, desc);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource/certification bound: " << e.what() << "\n";
    return 3;
  } catch (const ArqError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
