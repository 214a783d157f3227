#pragma once

#include <string>
#include <vector>

#include "covspec/cayley.hpp"
#include "covspec/metricgraph.hpp"

namespace covspec {

/// Stored drawings of the two Fano Schreier graphs, label-exact and directed.
struct ReferenceEdge {
  std::string color;
  std::string from;
  std::string to;
};

std::vector<ReferenceEdge> reference_point_graph_edges();
std::vector<ReferenceEdge> reference_line_graph_edges();
/// 7 vertices 001..111, colors A, B, edges in the order listed.
ColoredGraph reference_graph(const std::vector<ReferenceEdge>& edges);

/// Minimal loops of the point graph, written in the labels of the reference point drawing.
std::vector<std::string> reference_loops_points();
/// Minimal loops of the line graph (labels agree with the constructed graph).
std::vector<std::string> reference_loops_lines();

/// V1[A,B] on points and V2[A,B] on lines.
struct FanoGraphs {
  ColoredGraph points;
  ColoredGraph lines;
};
FanoGraphs fano_graphs();

/// Multiset equality of (color, from label, to label) triples.
bool same_labelled_edges(const ColoredGraph& a, const ColoredGraph& b);

/// Carries a loop written on `b` back to `a` through an isometry a -> b.
DartPath pull_back_loop(const ColoredGraph& a, const ColorIsometry& iso, const DartPath& loop_on_b);

}  // namespace covspec
