#pragma once

#include <string>

#include <json.hpp>

#include "crystal/biword.hpp"
#include "crystal/crystal_graph.hpp"
#include "crystal/lusztig.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

using json = nlohmann::json;

json to_json(const Alphabet& a);
Alphabet alphabet_from_json(const json& j);

// {"alphabet":{"kind":...,"n":N},"outer":[..],"inner":[..],"rotated":bool,
//  "rows":[[..]]} with barred letters encoded as negative integers.
json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

// {"rows":{alphabet},"cols":{alphabet},"entries":[[a,b,count],...]}
json to_json(const BiwordMatrix& m);
BiwordMatrix matrix_from_json(const json& j);

// {"n":N,"sink":r,"c":[[i,j,count],...]} listing nonzero coordinates only.
json to_json(const LusztigDatum& c);
LusztigDatum datum_from_json(const json& j);

// {"nodes":[...],"edges":[[src,i,dst],...]} with nodes serialized by node_json.
// Truncated graphs carry their coordinate-sum bound in a "depth" field.
template <class Crys, class NodeJson>
json graph_to_json(const CrystalGraph<Crys>& g, NodeJson node_json) {
  json nodes = json::array(), edges = json::array();
  for (const auto& n : g.nodes) nodes.push_back(node_json(n));
  for (const auto& e : g.edges) edges.push_back(json::array({e.src, e.label, e.dst}));
  json out{{"nodes", nodes}, {"edges", edges}};
  if (g.depth) out["depth"] = *g.depth;
  return out;
}

// DOT digraph with operator indices as edge labels.
template <class Crys, class NodeLabel>
std::string graph_to_dot(const CrystalGraph<Crys>& g, NodeLabel node_label) {
  std::string out = "digraph crystal {\n";
  for (int v = 0; v < g.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + node_label(g.nodes[v]) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) +
           " [label=\"" + std::to_string(e.label) + "\"];\n";
  return out + "}\n";
}

}  // namespace crystal
