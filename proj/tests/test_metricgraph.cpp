#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "covspec/error.hpp"
#include "covspec/reference_data.hpp"
#include "covspec/metricgraph.hpp"

using namespace covspec;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

MetricGraph wedge(Rational a, Rational b) {
  ColoredGraph g({"o"}, {"a", "b"}, {Edge{0, 0, 0, 0}, Edge{1, 0, 0, 1}});
  return metric_graph(g, {{"a", a}, {"b", b}});
}

MetricGraph fano_points(Rational la = q(2), Rational lb = q(5, 2)) {
  return metric_graph(fano_graphs().points, {{"A", la}, {"B", lb}});
}

// Oracle: every closed, cyclically reduced dart sequence up to `max_darts`, canonicalised
// by hand (least rotation of the loop and of its reverse).
std::map<DartPath, Rational> brute_force(const MetricGraph& x, const Rational& budget, std::size_t max_darts) {
  const auto& g = x.graph();
  std::vector<Dart> all;
  for (const auto& e : g.edges()) {
    all.push_back(Dart{static_cast<std::uint32_t>(e.id), false});
    all.push_back(Dart{static_cast<std::uint32_t>(e.id), true});
  }
  auto from = [&](Dart d) { const auto& e = g.edges()[d.generator]; return d.inverse ? e.to : e.from; };
  auto to = [&](Dart d) { const auto& e = g.edges()[d.generator]; return d.inverse ? e.from : e.to; };
  auto canon = [](DartPath p) {
    auto best_of = [](const DartPath& w) {
      DartPath best = w;
      for (std::size_t k = 1; k < w.size(); ++k) {
        DartPath r(w.begin() + static_cast<long>(k), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
        best = std::min(best, r);
      }
      return best;
    };
    DartPath rev;
    for (auto it = p.rbegin(); it != p.rend(); ++it) rev.push_back(it->inverted());
    return std::min(best_of(p), best_of(rev));
  };
  std::map<DartPath, Rational> out;
  DartPath path;
  std::function<void(Rational)> go = [&](Rational len) {
    if (!path.empty() && to(path.back()) == from(path.front()) && !(path.back() == path.front().inverted()) &&
        len < budget)
      out.emplace(canon(path), len);
    if (path.size() == max_darts) return;
    for (auto d : all) {
      if (!path.empty() && (from(d) != to(path.back()) || d == path.back().inverted())) continue;
      path.push_back(d);
      go(len + x.length(d.generator));
      path.pop_back();
    }
  };
  go(q(0));
  return out;
}

}  // namespace

TEST_CASE("rank of the fundamental group") {
  CHECK(wedge(q(1), q(1)).rank() == 2);
  auto x = fano_points();
  CHECK(x.rank() == 8);
  CHECK(x.tree_edges().size() == 6);
  auto f = fano_actions();
  std::vector<NamedElement> gens{{"A", f.a}, {"B", f.b}};
  auto full = metric_graph(cayley_graph_regular(f.group, gens), {{"A", q(1)}, {"B", q(1)}});
  CHECK(full.rank() == 169);
}

TEST_CASE("metric graph validation") {
  ColoredGraph g({"p", "q"}, {"a"}, {Edge{0, 0, 0, 0}});
  CHECK_THROWS_AS(metric_graph(g, {{"a", q(1)}}), InputError);  // disconnected
  auto w = ColoredGraph({"o"}, {"a", "b"}, {Edge{0, 0, 0, 0}, Edge{1, 0, 0, 1}});
  CHECK_THROWS_AS(metric_graph(w, {{"a", q(1)}}), InputError);
  CHECK_THROWS_AS(metric_graph(w, {{"a", q(1)}, {"b", q(0)}}), InputError);
  CHECK_THROWS_AS(metric_graph(w, {{"a", q(1)}, {"b", q(-1)}}), InputError);
  ColoredGraph tri({"a", "b", "c"}, {"e"}, {Edge{0, 0, 1, 0}, Edge{1, 1, 2, 0}, Edge{2, 2, 0, 0}});
  std::vector<Rational> ones(3, q(1));
  CHECK_THROWS_AS(MetricGraph(tri, ones, {0}), InputError);
  CHECK_THROWS_AS(MetricGraph(tri, ones, {0, 1, 2}), InputError);
  CHECK(MetricGraph(tri, ones, {1, 2}).generators() == std::vector<std::size_t>{0});
}

TEST_CASE("cyclic words and paths") {
  auto x = fano_points();
  auto loop = parse_edge_path(x, "B010 A001");
  CHECK(is_closed_path(x, loop));
  CHECK(path_length(x, loop) == q(9, 2));
  CyclicWord w(x, loop);
  DartPath rotated{loop[1], loop[0]};
  DartPath reversed{loop[1].inverted(), loop[0].inverted()};
  CHECK(CyclicWord(x, rotated) == w);
  CHECK(CyclicWord(x, reversed) == w);
  CHECK(marked_length(x, w) == q(9, 2));
  CHECK(format_edge_path(x, parse_edge_path(x, "A010*A001")) == "A010*A001");
  CHECK_THROWS_AS(CyclicWord(x, parse_edge_path(x, "A010")), InputError);
  CHECK_THROWS_AS(CyclicWord(x, DartPath{}), InputError);
  CHECK_THROWS_AS(parse_edge_path(x, "C010"), InputError);
  CHECK_THROWS_AS(parse_edge_path(x, "A999"), InputError);
  auto back = parse_edge_path(x, "A010 A010^-1");
  CHECK(is_closed_path(x, back));
  CHECK_FALSE(is_cyclically_reduced_path(back));
  CHECK(cyclic_reduce_path(back).empty());
}

TEST_CASE("enumeration on the wedge") {
  auto x = wedge(q(2), q(3));
  auto classes = enumerate_classes(x, q(6), true);
  std::vector<Rational> lens;
  for (const auto& c : classes) lens.push_back(c.length);
  // a, b, a^2, ab, ab^-1 below 6
  CHECK(lens == std::vector<Rational>{q(2), q(3), q(4), q(5), q(5)});
  auto closed = enumerate_classes(x, q(6), false);
  CHECK(closed.size() == 5 + 2);  // a^3 and b^2 sit exactly at 6
}

TEST_CASE("enumeration matches brute force on small graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t nv = 1 + trial % 3;
    std::size_t ne = nv + 1 + rng() % 3;
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < nv; ++v) labels.push_back("v" + std::to_string(v));
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < ne; ++e) {
      std::size_t a = e < nv - 1 ? e : rng() % nv;
      std::size_t b = e < nv - 1 ? e + 1 : rng() % nv;
      edges.push_back(Edge{e, a, b, 0});
    }
    std::vector<Rational> lens;
    for (std::size_t e = 0; e < ne; ++e) lens.push_back(q(2 + static_cast<long>(rng() % 5), 2));
    MetricGraph x(ColoredGraph(labels, {"c"}, edges), lens);
    Rational budget = q(6);
    // every dart is at least 1 long, so 6 darts cover the budget
    auto oracle = brute_force(x, budget, 6);
    auto got = enumerate_classes(x, budget, true);
    REQUIRE(got.size() == oracle.size());
    for (const auto& c : got) {
      auto it = oracle.find(c.word.darts());
      REQUIRE(it != oracle.end());
      CHECK(it->second == c.length);
    }
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].length <= got[i].length);
  }
}

TEST_CASE("enumeration cap") {
  auto x = wedge(q(1), q(1));
  CHECK_THROWS_AS(enumerate_classes(x, q(8), true, 10), CapExceeded);
  CHECK_THROWS_AS(enumerate_classes(x, q(0), true), InputError);
}

TEST_CASE("Fano point graph short classes") {
  auto x = fano_points();
  auto classes = enumerate_classes(x, q(7), true);
  std::vector<Rational> lens;
  for (const auto& c : classes) lens.push_back(c.length);
  CHECK(lens == std::vector<Rational>{q(2), q(5, 2), q(4), q(4), q(9, 2), q(9, 2), q(5), q(6), q(13, 2), q(13, 2)});
}

TEST_CASE("free words of loops") {
  auto x = wedge(q(2), q(3));
  auto ab = DartPath{Dart{0, false}, Dart{1, true}};
  CHECK(to_string(loop_to_free_word(x, ab)) == "x0 x1^-1");
  auto f = fano_points();
  for (std::size_t i = 0; i < f.rank(); ++i) {
    auto loop = fundamental_loop(f, i);
    CHECK(is_closed_path(f, loop));
    CHECK(based_loop_to_free_word(f, loop) == FreeWord{gen(static_cast<std::uint32_t>(i))});
  }
  // conjugation by a tree path does not change the class word
  auto loop = fundamental_loop(f, 3);
  CHECK(loop_to_free_word(f, loop) == FreeWord{gen(3)});
  CHECK_THROWS_AS(loop_to_free_word(f, parse_edge_path(f, "A010")), InputError);
}

TEST_CASE("marked length multiset is independent of the spanning tree") {
  auto x = fano_points();
  // a second tree: BFS from vertex 6 instead of vertex 0
  const auto& g = x.graph();
  std::vector<std::size_t> tree;
  std::vector<bool> seen(7, false);
  std::vector<std::size_t> queue{6};
  seen[6] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t e = g.edge_count(); e-- > 0;) {
      const auto& ed = g.edges()[e];
      std::size_t other = ed.from == queue[h] ? ed.to : (ed.to == queue[h] ? ed.from : queue[h]);
      if (!seen[other]) {
        seen[other] = true;
        tree.push_back(e);
        queue.push_back(other);
      }
    }
  MetricGraph y(g, x.lengths(), tree);
  REQUIRE(y.tree_edges() != x.tree_edges());
  auto a = enumerate_classes(x, q(9), true);
  auto b = enumerate_classes(y, q(9), true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].length == b[i].length);
}

TEST_CASE("rescaling") {
  auto x = fano_points();
  auto y = rescale(x, q(7, 5));
  CHECK(y.tree_edges() == x.tree_edges());
  auto a = enumerate_classes(x, q(7), true);
  auto b = enumerate_classes(y, q(49, 5), true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i].length == a[i].length * q(7, 5));
  CHECK_THROWS_AS(rescale(x, q(0)), InputError);
}
