// Algebra description files: line-oriented text, see README for the grammar.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arq/algebra.hpp"

namespace arq {

struct TermDesc {
  long long num = 1;
  long long den = 1;
  std::vector<std::string> labels;  // traversal order
};

struct AlgebraDesc {
  FieldDesc field;
  bool field_seen = false;
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> arrows;  // label, src, tgt
  std::vector<std::vector<TermDesc>> relations;
  std::string name = "A";
  int max_path_len = 32;
};

namespace detail {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long parse_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw InputError("line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
}

/// term := [coeff*]label[.label...];  coeff := int | int/int
inline TermDesc parse_term(const std::string& tok, int line) {
  TermDesc t;
  std::string rest = tok;
  auto star = rest.find('*');
  if (star != std::string::npos) {
    std::string c = rest.substr(0, star);
    rest = rest.substr(star + 1);
    auto slash = c.find('/');
    if (slash != std::string::npos) {
      t.num = parse_int(c.substr(0, slash), line);
      t.den = parse_int(c.substr(slash + 1), line);
      if (t.den == 0) throw InputError("line " + std::to_string(line) + ": zero denominator");
    } else {
      t.num = parse_int(c, line);
    }
  }
  if (rest.empty()) throw InputError("line " + std::to_string(line) + ": empty path literal");
  std::string lab;
  for (char ch : rest + ".") {
    if (ch == '.') {
      if (lab.empty())
        throw InputError("line " + std::to_string(line) + ": empty label in path literal");
      t.labels.push_back(lab);
      lab.clear();
    } else {
      lab += ch;
    }
  }
  return t;
}

}  // namespace detail

inline AlgebraDesc parse_algebra_text(const std::string& text, const std::string& name = "A") {
  AlgebraDesc d;
  d.name = name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string w;
    while (ls >> w) {
      if (w[0] == '#') break;
      tok.push_back(w);
    }
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    auto need = [&](size_t n) {
      if (tok.size() < n)
        throw InputError("line " + std::to_string(lineno) + ": too few tokens for '" + kw + "'");
    };
    if (kw == "field") {
      need(2);
      if (tok[1] == "Q") {
        d.field = FieldDesc{true, 0};
      } else if (tok[1] == "F") {
        need(3);
        long long p = detail::parse_int(tok[2], lineno);
        if (!detail::is_prime(p)) throw InputError("line " + std::to_string(lineno) + ": " +
                                                   tok[2] + " is not prime");
        d.field = FieldDesc{false, p};
      } else {
        throw InputError("line " + std::to_string(lineno) + ": unknown field '" + tok[1] + "'");
      }
      d.field_seen = true;
    } else if (kw == "vertex") {
      need(2);
      for (size_t i = 1; i < tok.size(); ++i) d.vertices.push_back(tok[i]);
    } else if (kw == "arrow") {
      need(4);
      d.arrows.push_back({tok[1], tok[2], tok[3]});
    } else if (kw == "relation") {
      need(2);
      std::vector<TermDesc> terms;
      long long sign = 1;
      for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "+") {
          sign = 1;
          continue;
        }
        if (tok[i] == "-") {
          sign = -1;
          continue;
        }
        TermDesc t = detail::parse_term(tok[i], lineno);
        t.num *= sign;
        sign = 1;
        terms.push_back(std::move(t));
      }
      if (terms.empty()) throw InputError("line " + std::to_string(lineno) + ": empty relation");
      d.relations.push_back(std::move(terms));
    } else if (kw == "maxlen") {
      need(2);
      d.max_path_len = (int)detail::parse_int(tok[1], lineno);
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (!d.field_seen) throw InputError("missing 'field' line");
  return d;
}

template <class K>
AlgebraPtr<K> build_algebra(const AlgebraDesc& d) {
  Quiver q;
  for (const auto& v : d.vertices) q.add_vertex(v);
  for (const auto& [lab, s, t] : d.arrows) q.add_arrow(lab, s, t);
  std::vector<Relation<K>> rels;
  for (const auto& terms : d.relations) {
    Relation<K> r;
    for (const TermDesc& t : terms) {
      Path p;
      for (size_t i = 0; i < t.labels.size(); ++i) {
        auto it = q.arrow_index.find(t.labels[i]);
        if (it == q.arrow_index.end()) throw InputError("unknown arrow label: " + t.labels[i]);
        if (i == 0) p.src = q.arrows[it->second].src;
        p.arrows.push_back(it->second);
      }
      K c = make_fraction<K>(d.field, t.num, t.den);
      if (!is_zero(c)) r.terms.push_back({c, p});
    }
    if (r.terms.empty())
      throw InputError("relation vanishes over " + d.field.name());
    rels.push_back(std::move(r));
  }
  return Algebra<K>::make(std::move(q), std::move(rels), d.field, d.name, d.max_path_len);
}

}  // namespace arq
