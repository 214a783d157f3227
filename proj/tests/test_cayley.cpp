#include "doctest.h"

#include <algorithm>
#include <set>

#include "covspec/cayley.hpp"
#include "covspec/error.hpp"
#include "covspec/fano.hpp"
#include "covspec/reference_data.hpp"

using namespace covspec;

namespace {

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::vector<NamedElement> fano_gens(const FanoActions& f) { return {{"A", f.a}, {"B", f.b}}; }

}  // namespace

TEST_CASE("colored graph validation") {
  CHECK_THROWS_AS(ColoredGraph({"a"}, {"x"}, {Edge{0, 0, 1, 0}}), InputError);
  CHECK_THROWS_AS(ColoredGraph({"a"}, {"x"}, {Edge{0, 0, 0, 1}}), InputError);
  CHECK_THROWS_AS(ColoredGraph({"a"}, {"x"}, {Edge{1, 0, 0, 0}}), InputError);
  ColoredGraph g({"a", "b"}, {"x"}, {Edge{0, 0, 1, 0}, Edge{1, 1, 0, 0}, Edge{2, 0, 0, 0}});
  CHECK(g.is_connected());
  CHECK_FALSE(g.is_cayley_regular());
  CHECK(g.find_vertex("b") == 1);
  CHECK_FALSE(g.find_vertex("c"));
  CHECK(g.out_edge(0, 0) == 0);
  ColoredGraph split({"a", "b"}, {"x"}, {Edge{0, 0, 0, 0}, Edge{1, 1, 1, 0}});
  CHECK_FALSE(split.is_connected());
  CHECK(split.is_cayley_regular());
}

TEST_CASE("regular Cayley graph of the Fano group") {
  auto f = fano_actions();
  auto gens = fano_gens(f);
  auto c = cayley_graph_regular(f.group, gens);
  CHECK(c.vertex_count() == 168);
  CHECK(c.edge_count() == 336);
  CHECK(c.is_cayley_regular());
  CHECK(c.is_connected());
  for (const auto& e : c.edges()) {
    CHECK(e.id == e.from * 2 + e.color);
    CHECK(f.group.element(e.to) == f.group.element(e.from) * gens[e.color].element);
  }
  auto act = left_regular_action(f.group, 2);
  CHECK(action_is_free(c, act));
}

TEST_CASE("free action detection") {
  auto f = fano_actions();
  auto g = fano_graphs().points;
  GraphAction trivial;
  trivial.group_order = 2;
  trivial.vertex = [](std::size_t, std::size_t v) { return v; };
  trivial.edge = [](std::size_t, std::size_t e) { return e; };
  CHECK_FALSE(action_is_free(g, trivial));

  // a map that is not an automorphism is rejected outright
  GraphAction broken;
  broken.group_order = 2;
  broken.vertex = [](std::size_t h, std::size_t v) { return h ? (v + 1) % 7 : v; };
  broken.edge = [](std::size_t, std::size_t e) { return e; };
  CHECK_THROWS_AS(action_is_free(g, broken), std::logic_error);
  (void)f;
}

TEST_CASE("Schreier quotients") {
  auto f = fano_actions();
  auto gens = fano_gens(f);
  auto h1 = stabilizer(f.group, f.points.offset + fano_vertex("100"));
  auto h2 = stabilizer(f.group, f.lines.offset + fano_vertex("100"));
  auto q1 = quotient_is_schreier(h1, gens);
  auto q2 = quotient_is_schreier(h2, gens);
  CHECK(q1.vertex_count() == 7);
  CHECK(q1.edge_count() == 14);
  CHECK(q2.vertex_count() == 7);
  auto fg = fano_graphs();
  CHECK(find_color_isomorphism(q1, fg.points));
  CHECK(find_color_isomorphism(q2, fg.lines));
  // the two Schreier graphs are not colour isomorphic
  CHECK_FALSE(find_color_isomorphism(fg.points, fg.lines));

  auto cosets = coset_index(h1);
  CHECK(cosets.size() == 168);
  CHECK(std::set<std::size_t>(cosets.begin(), cosets.end()).size() == 7);
  for (auto x : h1.members()) CHECK(cosets[x] == 0);

  auto trivial = trivial_subgroup(f.group);
  auto full = quotient_is_schreier(trivial, gens);
  CHECK(full.vertex_count() == 168);
  auto one = quotient_is_schreier(whole_group(f.group), gens);
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 2);
}

TEST_CASE("Fano Schreier graphs") {
  auto fg = fano_graphs();
  for (const auto* g : {&fg.points, &fg.lines}) {
    CHECK(g->vertex_count() == 7);
    CHECK(g->edge_count() == 14);
    CHECK(g->is_cayley_regular());
    CHECK(g->is_connected());
  }
  auto has_loop = [](const ColoredGraph& g, const std::string& color, const std::string& at) {
    for (const auto& e : g.edges())
      if (g.colors()[e.color] == color && e.from == e.to && g.vertices()[e.from] == at) return true;
    return false;
  };
  CHECK(has_loop(fg.lines, "A", "100"));
  CHECK(has_loop(fg.lines, "B", "111"));
  CHECK(has_loop(fg.points, "B", "111"));

  // the line graph matches its reference drawing label for label
  CHECK(same_labelled_edges(fg.lines, reference_graph(reference_line_graph_edges())));

  // the point graph matches its reference drawing only after reversing colour A
  auto ref = reference_graph(reference_point_graph_edges());
  CHECK_FALSE(same_labelled_edges(fg.points, ref));
  CHECK(has_loop(ref, "A", "110"));
  CHECK_FALSE(has_loop(fg.points, "A", "110"));
  auto iso = find_color_isometry(fg.points, ref);
  REQUIRE(iso);
  CHECK(iso->reversed == std::vector<bool>{true, false});
  CHECK(find_color_isomorphism(reverse_colors(fg.points, iso->reversed), ref));
}

TEST_CASE("isomorphism search") {
  auto fg = fano_graphs();
  CHECK(count_color_isomorphisms(fg.points, fg.points) >= 1);
  auto iso = find_color_isomorphism(fg.lines, fg.lines);
  REQUIRE(iso);
  // automorphisms of a connected Schreier graph are determined by the image of one vertex
  CHECK(count_color_isomorphisms(fg.lines, fg.lines) <= 7);
  auto rev = reverse_colors(fg.points, {false, true});
  CHECK(rev.edge_count() == 14);
  for (std::size_t i = 0; i < 14; ++i) {
    const auto& a = fg.points.edges()[i];
    const auto& b = rev.edges()[i];
    if (a.color == 1) {
      CHECK(a.from == b.to);
      CHECK(a.to == b.from);
    } else {
      CHECK(a == b);
    }
  }
}

TEST_CASE("genus arithmetic") {
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(surface_genus(7, n - 1, 2) == 7 * n + 1);
  CHECK(surface_genus(1, 0, 1) == 1);
  CHECK_THROWS_AS(surface_genus(7, 1, 0), InputError);
  CHECK_THROWS_AS(surface_genus(~0ull, 5, 2), InputError);
}

TEST_CASE("DOT export") {
  auto fg = fano_graphs();
  auto dot = export_dot(fg.points, "V1");
  CHECK(dot.rfind("digraph \"V1\" {", 0) == 0);
  CHECK(count_substr(dot, "->") == 14);
  CHECK(count_substr(dot, "style=dotted") == 7);
  CHECK(count_substr(dot, "style=solid") == 7);
  CHECK(count_substr(dot, "[label=\"") == 7 + 14);
  CHECK(dot == export_dot(fg.points, "V1"));
}

TEST_CASE("generalized Cayley graph on a cyclic action") {
  auto g = generalized_cayley({"0", "1", "2", "3", "4"}, {"s"}, [](std::size_t v, std::size_t) { return (v + 2) % 5; });
  CHECK(g.edge_count() == 5);
  CHECK(g.is_cayley_regular());
  CHECK(g.edges()[3].to == 0);
}
