#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covspec/cayley.hpp"
#include "covspec/freeword.hpp"
#include "covspec/rational.hpp"

namespace covspec {

/// An oriented edge: Letter{edge id, reversed}. Letter order gives (edge id, direction).
using Dart = Letter;
using DartPath = std::vector<Dart>;

/// ColoredGraph with positive rational edge lengths, a spanning tree and the induced free
/// basis of pi_1: one generator per non-tree edge, in edge-id order.
class MetricGraph {
 public:
  /// Breadth-first spanning tree from vertex 0, edges scanned in id order.
  MetricGraph(ColoredGraph graph, std::vector<Rational> edge_lengths);
  /// Explicit spanning tree (edge ids). Throws InputError if it is not a spanning tree.
  MetricGraph(ColoredGraph graph, std::vector<Rational> edge_lengths, std::vector<std::size_t> tree_edges);

  const ColoredGraph& graph() const { return graph_; }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& length(std::size_t edge) const { return lengths_[edge]; }
  const std::vector<std::size_t>& tree_edges() const { return tree_; }
  bool in_tree(std::size_t edge) const { return generator_of_[edge] == kTree; }
  /// Non-tree edge ids; generator i is generators()[i].
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::optional<std::size_t> generator_of(std::size_t edge) const;
  std::size_t rank() const { return generators_.size(); }

  std::size_t origin(Dart d) const;
  std::size_t target(Dart d) const;
  /// Tree path from vertex 0 to v.
  const DartPath& tree_path(std::size_t v) const { return root_path_[v]; }

 private:
  static constexpr std::size_t kTree = static_cast<std::size_t>(-1);
  void init(std::vector<std::size_t> tree_edges);

  ColoredGraph graph_;
  std::vector<Rational> lengths_;
  std::vector<std::size_t> tree_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> generator_of_;
  std::vector<DartPath> root_path_;
};

/// Lengths given per color name. Throws InputError on missing colors, nonpositive lengths
/// or a disconnected graph.
MetricGraph metric_graph(const ColoredGraph& graph, const std::map<std::string, Rational>& color_lengths);

/// A cyclically reduced closed edge loop kept in canonical form: the least rotation of the
/// loop or of its reverse.
class CyclicWord {
 public:
  /// Throws InputError if the darts do not form a nonempty, closed, cyclically reduced loop.
  CyclicWord(const MetricGraph& x, DartPath darts);

  const DartPath& darts() const { return darts_; }
  std::size_t size() const { return darts_.size(); }
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  DartPath darts_;
};

struct MarkedClass {
  CyclicWord word;
  Rational length;
};

bool is_closed_path(const MetricGraph& x, const DartPath& darts);
/// No dart followed by its reverse, wraparound included.
bool is_cyclically_reduced_path(const DartPath& darts);
/// Cancels backtracking, cyclically. The result of a closed path is a closed path.
DartPath cyclic_reduce_path(const DartPath& darts);

Rational path_length(const MetricGraph& x, const DartPath& darts);
Rational marked_length(const MetricGraph& x, const CyclicWord& word);

/// Every free homotopy class (up to inversion) with marked length < budget (<= if !strict),
/// sorted by length then canonical word. Throws CapExceeded past `cap` classes.
std::vector<MarkedClass> enumerate_classes(const MetricGraph& x, const Rational& budget, bool strict,
                                           std::size_t cap = 200'000);

/// Closed loop -> reduced word in the free generators. Conjugacy class only: the result is
/// cyclically reduced. Throws InputError on an open path.
FreeWord loop_to_free_word(const MetricGraph& x, const DartPath& loop);
/// Same without cyclic reduction, for a loop based at vertex 0: the exact element of pi_1(X, 0).
FreeWord based_loop_to_free_word(const MetricGraph& x, const DartPath& loop);

/// Tree path to the origin of generator i's edge, the edge, and the tree path back.
DartPath fundamental_loop(const MetricGraph& x, std::size_t generator);

/// Parses "B011 A101 A100^-1" (tokens may also be joined by '*'): color name, then the label
/// of the edge's origin vertex, optional "^-1" to traverse it backwards.
DartPath parse_edge_path(const MetricGraph& x, const std::string& text);
std::string format_edge_path(const MetricGraph& x, const DartPath& darts);

/// Same graph and tree with every length multiplied by c > 0.
MetricGraph rescale(const MetricGraph& x, const Rational& c);

}  // namespace covspec
