#include "covspec/reference_data.hpp"

#include <algorithm>
#include <tuple>

#include "covspec/error.hpp"
#include "covspec/fano.hpp"

namespace covspec {

std::vector<ReferenceEdge> reference_point_graph_edges() {
  return {
      {"A", "110", "110"}, {"A", "101", "100"}, {"A", "011", "111"}, {"A", "111", "101"}, {"A", "100", "011"},
      {"A", "010", "001"}, {"A", "001", "010"}, {"B", "110", "011"}, {"B", "101", "110"}, {"B", "011", "101"},
      {"B", "111", "111"}, {"B", "100", "010"}, {"B", "010", "001"}, {"B", "001", "100"},
  };
}

std::vector<ReferenceEdge> reference_line_graph_edges() {
  return {
      {"A", "100", "100"}, {"A", "011", "111"}, {"A", "111", "011"}, {"A", "010", "001"}, {"A", "001", "110"},
      {"A", "110", "101"}, {"A", "101", "010"}, {"B", "100", "010"}, {"B", "010", "001"}, {"B", "001", "100"},
      {"B", "011", "101"}, {"B", "101", "110"}, {"B", "110", "011"}, {"B", "111", "111"},
  };
}

ColoredGraph reference_graph(const std::vector<ReferenceEdge>& edges) {
  std::vector<std::string> labels;
  for (std::uint8_t v = 1; v < 8; ++v) labels.push_back(bit_label(v));
  std::vector<std::string> colors{"A", "B"};
  std::vector<Edge> out;
  for (const auto& e : edges) {
    auto c = std::find(colors.begin(), colors.end(), e.color);
    if (c == colors.end()) throw InputError("unknown color " + e.color);
    out.push_back(Edge{out.size(), fano_vertex(e.from), fano_vertex(e.to), static_cast<std::size_t>(c - colors.begin())});
  }
  return ColoredGraph(std::move(labels), std::move(colors), std::move(out));
}

std::vector<std::string> reference_loops_points() {
  return {
      "A110",
      "B111",
      "A110 A110",
      "A010 A001",
      "B010 A001",
      "B010 A010^-1",
      "B111 B111",
      "A110 A110 A110",
      "B011 A101 A100",
      "B011 A111^-1 A011^-1",
  };
}

std::vector<std::string> reference_loops_lines() {
  return {
      "A100",
      "B111",
      "A100 A100",
      "A111 A011",
      "A010 B010^-1",
      "A110 B101",
      "B111 B111",
      "A100 A100 A100",
      "B111 A111 A011",
      "B111 A011^-1 A111^-1",
  };
}

FanoGraphs fano_graphs() {
  const FanoActions f = fano_actions();
  std::vector<NamedElement> gens{{"A", f.a}, {"B", f.b}};
  return FanoGraphs{cayley_graph(f.group, f.points, gens), cayley_graph(f.group, f.lines, gens)};
}

bool same_labelled_edges(const ColoredGraph& a, const ColoredGraph& b) {
  auto triples = [](const ColoredGraph& g) {
    std::vector<std::tuple<std::string, std::string, std::string>> t;
    for (const auto& e : g.edges()) t.emplace_back(g.colors()[e.color], g.vertices()[e.from], g.vertices()[e.to]);
    std::sort(t.begin(), t.end());
    return t;
  };
  return triples(a) == triples(b);
}

DartPath pull_back_loop(const ColoredGraph& a, const ColorIsometry& iso, const DartPath& loop_on_b) {
  std::vector<std::size_t> back(iso.map.edge_map.size());
  for (std::size_t e = 0; e < iso.map.edge_map.size(); ++e) back[iso.map.edge_map[e]] = e;
  DartPath out;
  for (const auto& d : loop_on_b) {
    auto e = back.at(d.generator);
    bool flip = iso.reversed[a.edges()[e].color];
    out.push_back(Dart{static_cast<std::uint32_t>(e), d.inverse != flip});
  }
  return out;
}

}  // namespace covspec
