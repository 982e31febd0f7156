// Quivers and paths (arrow sequences in traversal order).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "arq/scalar.hpp"

namespace arq {

struct Arrow {
  std::string label;
  int src = -1;
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::map<std::string, int> vertex_index;
  std::map<std::string, int> arrow_index;

  int vcount() const { return (int)vertices.size(); }
  int acount() const { return (int)arrows.size(); }

  void add_vertex(const std::string& name) {
    if (vertex_index.count(name)) throw InputError("duplicate vertex: " + name);
    vertex_index[name] = vcount();
    vertices.push_back(name);
  }
  void add_arrow(const std::string& label, const std::string& src, const std::string& tgt) {
    if (arrow_index.count(label)) throw InputError("duplicate arrow label: " + label);
    auto si = vertex_index.find(src);
    auto ti = vertex_index.find(tgt);
    if (si == vertex_index.end()) throw InputError("unknown vertex: " + src);
    if (ti == vertex_index.end()) throw InputError("unknown vertex: " + tgt);
    arrow_index[label] = acount();
    arrows.push_back(Arrow{label, si->second, ti->second});
  }

  Quiver reversed() const {
    Quiver r;
    r.vertices = vertices;
    r.vertex_index = vertex_index;
    for (const Arrow& a : arrows) {
      r.arrow_index[a.label] = (int)r.arrows.size();
      r.arrows.push_back(Arrow{a.label, a.tgt, a.src});
    }
    return r;
  }
};

/// A path: source vertex plus arrows in traversal order (first-traversed
/// first).  Length-0 paths are the vertex idempotents e_x.
struct Path {
  int src = -1;
  std::vector<int> arrows;

  int length() const { return (int)arrows.size(); }
  int target(const Quiver& q) const { return arrows.empty() ? src : q.arrows[arrows.back()].tgt; }

  bool valid(const Quiver& q) const {
    if (src < 0 || src >= q.vcount()) return false;
    int at = src;
    for (int a : arrows) {
      if (a < 0 || a >= q.acount() || q.arrows[a].src != at) return false;
      at = q.arrows[a].tgt;
    }
    return true;
  }

  /// this traversed first, then q2.
  Path then(const Path& p2) const {
    Path r = *this;
    r.arrows.insert(r.arrows.end(), p2.arrows.begin(), p2.arrows.end());
    return r;
  }
  Path then_arrow(int a) const {
    Path r = *this;
    r.arrows.push_back(a);
    return r;
  }
  Path reversed_for(const Quiver& q) const {
    Path r;
    r.src = target(q);
    r.arrows.assign(arrows.rbegin(), arrows.rend());
    return r;
  }

  std::string key() const {
    std::string s = std::to_string(src);
    for (int a : arrows) s += "," + std::to_string(a);
    return s;
  }
  std::string display(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertices[src];
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
      if (i) s += ".";
      s += q.arrows[arrows[i]].label;
    }
    return s;
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.src == b.src && a.arrows == b.arrows;
  }
};

/// Order used for basis classes: by (length, lexicographic arrow labels).
inline bool path_lex_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (int i = 0; i < a.length(); ++i) {
    const std::string& la = q.arrows[a.arrows[i]].label;
    const std::string& lb = q.arrows[b.arrows[i]].label;
    if (la != lb) return la < lb;
  }
  return a.src < b.src;
}

}  // namespace arq
