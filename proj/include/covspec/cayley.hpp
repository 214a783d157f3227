#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covspec/fano.hpp"
#include "covspec/fingroup.hpp"

namespace covspec {

struct Edge {
  std::size_t id = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t color = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph (V, E, o, t) with edges colored by generator symbols.
/// Self-loops and parallel edges are allowed; edge ids are 0..|E|-1 and index `edges()`.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// Throws InputError on out-of-range endpoints/colors or ids that are not 0..|E|-1.
  ColoredGraph(std::vector<std::string> vertices, std::vector<std::string> colors, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_color(const std::string& name) const;
  /// First edge of the given color leaving v.
  std::optional<std::size_t> out_edge(std::size_t v, std::size_t color) const;

  /// Every vertex has exactly one outgoing and one incoming edge of every color.
  bool is_cayley_regular() const;
  /// Connected as an undirected graph (the empty graph counts as connected).
  bool is_connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> colors_;
  std::vector<Edge> edges_;
};

struct NamedElement {
  std::string name;
  Permutation element;
};

/// V[S] with E = V x S, edge (v, s) = id v*|S| + s running v -> act(v, s).
ColoredGraph generalized_cayley(std::vector<std::string> vertex_labels, std::vector<std::string> colors,
                                const std::function<std::size_t(std::size_t, std::size_t)>& act);

/// V[S] for G acting on a block of its domain. Throws InputError if some s is not in G.
ColoredGraph cayley_graph(const FiniteGroup& g, const ActionBlock& block, std::span<const NamedElement> gens);

/// G[S] for the right regular action; vertex i is element i, labelled "g<i>".
ColoredGraph cayley_graph_regular(const FiniteGroup& g, std::span<const NamedElement> gens);

/// Right cosets H\G in order of first appearance in G's element list; coset 0 is H.
std::vector<std::size_t> coset_index(const Subgroup& h);

/// (H\G)[S] via the coset action, labelled "H<i>". The result is checked to be colour
/// isomorphic to the orbit quotient of G[S] under the left H-action; throws std::logic_error otherwise.
ColoredGraph quotient_is_schreier(const Subgroup& h, std::span<const NamedElement> gens);

/// Orbit graph of G[S] under left multiplication by H (vertices = orbits, edges = edge orbits).
ColoredGraph left_orbit_quotient(const Subgroup& h, std::span<const NamedElement> gens);

/// A group acting on a graph: images of vertices and edges under element indices.
struct GraphAction {
  std::size_t group_order = 0;
  std::function<std::size_t(std::size_t element, std::size_t vertex)> vertex;
  std::function<std::size_t(std::size_t element, std::size_t edge)> edge;
};

/// Left multiplication on cayley_graph_regular(g, gens).
GraphAction left_regular_action(const FiniteGroup& g, std::size_t generator_count);

/// True iff no non-identity element fixes a vertex or an edge. Throws std::logic_error if
/// some element is not a colour-preserving automorphism. Element 0 is the identity.
bool action_is_free(const ColoredGraph& graph, const GraphAction& action);

struct GraphIsomorphism {
  std::vector<std::size_t> vertex_map;  // a-vertex -> b-vertex
  std::vector<std::size_t> edge_map;    // a-edge -> b-edge
};

/// Color-preserving, orientation-preserving isomorphism a -> b (colors matched by name).
std::optional<GraphIsomorphism> find_color_isomorphism(const ColoredGraph& a, const ColoredGraph& b);
std::size_t count_color_isomorphisms(const ColoredGraph& a, const ColoredGraph& b);

/// Same graph with every edge of the named colors reversed (edge ids kept).
ColoredGraph reverse_colors(const ColoredGraph& g, const std::vector<bool>& reversed);

/// Isomorphism after reversing whole color classes of a; such a map is an isometry of the
/// metric realizations. Tries reversal masks in increasing order, so the identity mask wins.
struct ColorIsometry {
  std::vector<bool> reversed;  // per color of a
  GraphIsomorphism map;
};
std::optional<ColorIsometry> find_color_isometry(const ColoredGraph& a, const ColoredGraph& b);

/// Genus 1 + (g + n - 1) * #V of the surface glued from #V copies of a genus-g surface with
/// n handles cut open. Requires n >= 1.
std::uint64_t surface_genus(std::uint64_t vertex_count, std::uint64_t base_genus, std::uint64_t handle_count);

/// Deterministic Graphviz text; first color dotted, second solid, further colors dashed/bold.
std::string export_dot(const ColoredGraph& graph, const std::string& name = "G");

}  // namespace covspec
