#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "wbptree/bigint.hpp"
#include "wbptree/count.hpp"
#include "wbptree/oracle.hpp"
#include "wbptree/passport.hpp"

namespace wbp {

using Json = nlohmann::ordered_json;

inline std::string label_text(const Label& l) {
  if (l.star) return "*";
  if (l.is_default()) return "";
  std::string s = std::to_string(l.value);
  if (l.index != 0) s += ":" + std::to_string(l.index);
  return s;
}

/// CountReport with numbers as decimal strings, keys in fixed order.
inline Json to_json(const CountReport& r) {
  Json g = Json::object();
  for (const auto& [d, v] : r.G) g[std::to_string(d)] = to_string(v);
  Json sym = Json::object();
  for (const auto& [e, c] : r.by_symmetry) sym[std::to_string(e)] = c.str();
  Json out;
  out["passport"] = to_string(r.passport);
  out["G"] = std::move(g);
  out["total"] = r.total.str();
  out["by_symmetry"] = std::move(sym);
  return out;
}

inline Json to_json(const oracle::WbpTree& t) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < t.vertices().size(); ++v) {
    const auto& x = t.vertices()[v];
    vertices.push_back(Json{{"id", v},
                            {"color", to_string(x.color)},
                            {"weight", x.type.weight},
                            {"label", label_text(x.type.label)}});
  }
  Json edges = Json::array();
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    const auto& x = t.edges()[e];
    edges.push_back(Json{{"id", e},
                         {"endpoints", {x.ends[0], x.ends[1]}},
                         {"weight", x.weight}});
  }
  Json out;
  out["passport"] = to_string(t.passport());
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["rotation"] = t.rotation();
  out["canonical_code"] = oracle::canonical_code(t).to_string();
  out["aut_order"] = oracle::aut_order(t);
  return out;
}

inline Json to_json(const Passport& xi, const std::vector<oracle::WbpTree>& trees) {
  Json list = Json::array();
  for (const auto& t : trees) list.push_back(to_json(t));
  Json out;
  out["passport"] = to_string(xi);
  out["count"] = trees.size();
  out["trees"] = std::move(list);
  return out;
}

/// Graphviz rendering: black vertices filled, white hollow, edges labelled
/// by weight. Edge order around a vertex is not preserved by layout engines.
inline std::string to_dot(const oracle::WbpTree& t, const std::string& name = "tree") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle, fixedsize=true, width=0.4, fontsize=10];\n";
  for (std::size_t v = 0; v < t.vertices().size(); ++v) {
    const auto& x = t.vertices()[v];
    std::string text = std::to_string(x.type.weight);
    const std::string l = label_text(x.type.label);
    if (!l.empty()) text += "_" + l;
    os << "  v" << v << " [label=\"" << text << "\"";
    if (x.color == Color::black) {
      os << ", style=filled, fillcolor=black, fontcolor=white";
    }
    os << "];\n";
  }
  for (const auto& e : t.edges()) {
    os << "  v" << e.ends[0] << " -- v" << e.ends[1] << " [label=\"" << e.weight
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wbp
