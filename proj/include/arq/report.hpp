// JSON reports and DOT export.  All output is deterministic: nodes in id
// order, arrows sorted by (from, to), stable key order in the JSON.
#pragma once

#include <json.hpp>

#include "arq/session.hpp"

namespace arq {

using Json = nlohmann::ordered_json;

inline Json check_to_json(const CheckReport& r) {
  Json j;
  j["id"] = r.id;
  j["status"] = status_str(r.status);
  j["detail"] = r.detail;
  j["witnesses"] = r.witnesses;
  return j;
}

template <class K>
std::string layer_str(const PartitionTable<K>& pt, int m) {
  int l = pt.layer[m];
  if (l == PartitionTable<K>::kInf) return "inf";
  if (l == PartitionTable<K>::kUnknown) return "unknown";
  return std::to_string(l);
}

template <class K>
Json session_to_json(const Session<K>& s, const std::vector<CheckReport>& checks = {}) {
  const Window<K>& w = s.window();
  Json j;
  Json alg;
  alg["name"] = s.alg->name;
  alg["field"] = s.alg->field.name();
  alg["vertices"] = s.alg->quiver.vertices;
  Json arrows_q = Json::array();
  for (const auto& a : s.alg->quiver.arrows) {
    Json aj;
    aj["label"] = a.label;
    aj["src"] = s.alg->quiver.vertices[a.src];
    aj["tgt"] = s.alg->quiver.vertices[a.tgt];
    arrows_q.push_back(aj);
  }
  alg["arrows"] = arrows_q;
  alg["dim"] = s.alg->dim();
  alg["nilpotency_bound"] = s.alg->nilpotency_bound();
  j["algebra"] = alg;

  Json win;
  win["depth"] = s.opt.depth;
  win["complete"] = w.complete;
  j["window"] = win;

  Json mods = Json::array();
  for (int i = 0; i < w.size(); ++i) {
    Json m;
    m["id"] = w.names[i];
    m["dimvector"] = w.mods[i].dims;
    m["layer"] = layer_str(s.ctx.pt, i);
    int l = s.ctx.pt.layer[i];
    Json flags;
    flags["projective"] = s.graph.nodes[i].projective;
    flags["injective"] = s.graph.nodes[i].injective;
    flags["boundary"] = (bool)w.boundary[i];
    flags["layer_certified"] =
        l >= 0 && l != PartitionTable<K>::kInf ? s.ctx.pt.layer_certified(l)
                                               : (bool)s.ctx.pt.pinf_cert[i];
    m["flags"] = flags;
    mods.push_back(m);
  }
  j["modules"] = mods;

  Json arr = Json::array();
  for (const auto& [k, mult] : s.graph.arrows) {
    Json a;
    a["from"] = w.names[k.first];
    a["to"] = w.names[k.second];
    a["mult"] = mult;
    arr.push_back(a);
  }
  j["arrows"] = arr;

  Json ch = Json::array();
  for (const auto& c : checks) ch.push_back(check_to_json(c));
  j["checks"] = ch;
  return j;
}

/// DOT export: one node per module, solid edges for irreducible arrows with
/// multiplicities, dashed edges for tau links, fill color by layer bucket.
template <class K>
std::string to_dot(const Session<K>& s) {
  const Window<K>& w = s.window();
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fdbf6f", "#cab2d6",
                                  "#fb9a99", "#ffff99", "#1f78b4", "#33a02c"};
  std::string out = "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box, style=filled];\n";
  for (int i = 0; i < w.size(); ++i) {
    int l = s.ctx.pt.layer[i];
    std::string color = "#cccccc";  // inf / unknown: gray
    if (l >= 0 && l != PartitionTable<K>::kInf) color = palette[l % 8];
    std::string dims;
    for (size_t d = 0; d < w.mods[i].dims.size(); ++d)
      dims += (d ? "," : "") + std::to_string(w.mods[i].dims[d]);
    out += "  n" + std::to_string(i) + " [label=\"" + w.names[i] + " [" + dims +
           "] layer=" + layer_str(s.ctx.pt, i) + "\", fillcolor=\"" + color + "\"];\n";
  }
  for (const auto& [k, mult] : s.graph.arrows) {
    out += "  n" + std::to_string(k.first) + " -> n" + std::to_string(k.second);
    if (mult > 1) out += " [label=\"" + std::to_string(mult) + "\"]";
    out += ";\n";
  }
  for (int i = 0; i < w.size(); ++i)
    if (s.graph.nodes[i].tau_to >= 0)
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(s.graph.nodes[i].tau_to) +
             " [style=dashed, dir=none, constraint=false];\n";
  out += "}\n";
  return out;
}

}  // namespace arq
