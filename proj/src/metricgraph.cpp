#include "covspec/metricgraph.hpp"

#include <deque>
#include <numeric>
#include <queue>
#include <sstream>

#include "covspec/error.hpp"

namespace covspec {

namespace {

// Darts leaving each vertex, ordered by (edge id, direction).
std::vector<std::vector<Dart>> incident_darts(const ColoredGraph& g) {
  std::vector<std::vector<Dart>> inc(g.vertex_count());
  for (const auto& e : g.edges()) {
    inc[e.from].push_back(Dart{static_cast<std::uint32_t>(e.id), false});
    inc[e.to].push_back(Dart{static_cast<std::uint32_t>(e.id), true});
  }
  return inc;
}

}  // namespace

MetricGraph::MetricGraph(ColoredGraph graph, std::vector<Rational> edge_lengths)
    : graph_(std::move(graph)), lengths_(std::move(edge_lengths)) {
  if (graph_.vertex_count() == 0) throw InputError("metric graph needs at least one vertex");
  const auto inc = incident_darts(graph_);
  std::vector<bool> seen(graph_.vertex_count(), false);
  std::vector<std::size_t> tree;
  std::deque<std::size_t> q{0};
  seen[0] = true;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (const auto& d : inc[u]) {
      const auto& e = graph_.edges()[d.generator];
      auto v = d.inverse ? e.from : e.to;
      if (seen[v]) continue;
      seen[v] = true;
      tree.push_back(e.id);
      q.push_back(v);
    }
  }
  init(std::move(tree));
}

MetricGraph::MetricGraph(ColoredGraph graph, std::vector<Rational> edge_lengths, std::vector<std::size_t> tree_edges)
    : graph_(std::move(graph)), lengths_(std::move(edge_lengths)) {
  if (graph_.vertex_count() == 0) throw InputError("metric graph needs at least one vertex");
  init(std::move(tree_edges));
}

void MetricGraph::init(std::vector<std::size_t> tree_edges) {
  const std::size_t n = graph_.vertex_count();
  if (lengths_.size() != graph_.edge_count()) throw InputError("one length per edge required");
  for (std::size_t e = 0; e < lengths_.size(); ++e)
    if (lengths_[e].sign() <= 0) throw InputError("edge " + std::to_string(e) + " has nonpositive length");
  if (!graph_.is_connected()) throw InputError("metric graph must be connected");
  if (tree_edges.size() + 1 != n) throw InputError("spanning tree must have |V|-1 edges");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  generator_of_.assign(graph_.edge_count(), 0);
  std::vector<bool> tree_mask(graph_.edge_count(), false);
  for (auto id : tree_edges) {
    if (id >= graph_.edge_count() || tree_mask[id]) throw InputError("bad spanning tree edge list");
    const auto& e = graph_.edges()[id];
    auto a = find(e.from), b = find(e.to);
    if (a == b) throw InputError("spanning tree edges contain a cycle");
    parent[a] = b;
    tree_mask[id] = true;
  }
  tree_ = std::move(tree_edges);
  generators_.clear();
  for (std::size_t id = 0; id < graph_.edge_count(); ++id) {
    if (tree_mask[id]) {
      generator_of_[id] = kTree;
    } else {
      generator_of_[id] = generators_.size();
      generators_.push_back(id);
    }
  }

  const auto inc = incident_darts(graph_);
  root_path_.assign(n, {});
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (const auto& d : inc[u]) {
      if (!tree_mask[d.generator]) continue;
      auto v = target(d);
      if (seen[v]) continue;
      seen[v] = true;
      root_path_[v] = root_path_[u];
      root_path_[v].push_back(d);
      q.push_back(v);
    }
  }
}

std::optional<std::size_t> MetricGraph::generator_of(std::size_t edge) const {
  if (generator_of_[edge] == kTree) return std::nullopt;
  return generator_of_[edge];
}

std::size_t MetricGraph::origin(Dart d) const {
  const auto& e = graph_.edges().at(d.generator);
  return d.inverse ? e.to : e.from;
}

std::size_t MetricGraph::target(Dart d) const {
  const auto& e = graph_.edges().at(d.generator);
  return d.inverse ? e.from : e.to;
}

MetricGraph metric_graph(const ColoredGraph& graph, const std::map<std::string, Rational>& color_lengths) {
  std::vector<Rational> lengths;
  for (const auto& e : graph.edges()) {
    auto it = color_lengths.find(graph.colors()[e.color]);
    if (it == color_lengths.end()) throw InputError("no length for color " + graph.colors()[e.color]);
    lengths.push_back(it->second);
  }
  return MetricGraph(graph, std::move(lengths));
}

bool is_closed_path(const MetricGraph& x, const DartPath& darts) {
  if (darts.empty()) return false;
  for (const auto& d : darts)
    if (d.generator >= x.graph().edge_count()) return false;
  for (std::size_t i = 0; i < darts.size(); ++i)
    if (x.target(darts[i]) != x.origin(darts[(i + 1) % darts.size()])) return false;
  return true;
}

bool is_cyclically_reduced_path(const DartPath& darts) { return is_cyclically_reduced(darts); }

DartPath cyclic_reduce_path(const DartPath& darts) { return cyclic_reduce(darts); }

CyclicWord::CyclicWord(const MetricGraph& x, DartPath darts) {
  if (!is_closed_path(x, darts)) throw InputError("not a closed edge loop");
  if (!is_cyclically_reduced_path(darts)) throw InputError("loop is not cyclically reduced");
  darts_ = canonical_cyclic(darts);
}

Rational path_length(const MetricGraph& x, const DartPath& darts) {
  Rational total;
  for (const auto& d : darts) total += x.length(d.generator);
  return total;
}

Rational marked_length(const MetricGraph& x, const CyclicWord& word) { return path_length(x, word.darts()); }

namespace {

std::vector<Rational> distances_to(const MetricGraph& x, std::size_t root,
                                   const std::vector<std::vector<Dart>>& inc) {
  std::vector<std::optional<Rational>> dist(x.graph().vertex_count());
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[root] = Rational(0);
  pq.push({Rational(0), root});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > *dist[u]) continue;
    for (const auto& dart : inc[u]) {
      auto v = x.target(dart);
      Rational nd = d + x.length(dart.generator);
      if (!dist[v] || nd < *dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  std::vector<Rational> out;
  for (auto& d : dist) out.push_back(*d);
  return out;
}

}  // namespace

std::vector<MarkedClass> enumerate_classes(const MetricGraph& x, const Rational& budget, bool strict,
                                           std::size_t cap) {
  if (budget.sign() <= 0) throw InputError("enumeration budget must be positive");
  const auto inc = incident_darts(x.graph());
  std::map<DartPath, Rational> found;
  auto within = [&](const Rational& len) { return strict ? len < budget : len <= budget; };

  // Each class is found from the smallest vertex its geodesic visits.
  for (std::size_t root = 0; root < x.graph().vertex_count(); ++root) {
    const auto dist = distances_to(x, root, inc);
    DartPath path;
    std::vector<std::size_t> cursor{0};
    std::vector<Rational> len{Rational(0)};
    std::size_t here = root;
    while (!cursor.empty()) {
      auto& c = cursor.back();
      if (c == inc[here].size()) {
        cursor.pop_back();
        len.pop_back();
        if (!path.empty()) {
          here = x.origin(path.back());
          path.pop_back();
        }
        continue;
      }
      Dart d = inc[here][c++];
      if (!path.empty() && d == path.back().inverted()) continue;
      auto next = x.target(d);
      if (next < root) continue;
      Rational l = len.back() + x.length(d.generator);
      if (!within(l + dist[next])) continue;
      path.push_back(d);
      if (next == root && path.front() != d.inverted()) {
        auto key = canonical_cyclic(path);
        if (found.emplace(key, l).second && found.size() > cap)
          throw CapExceeded("class enumeration exceeded cap of " + std::to_string(cap));
      }
      here = next;
      cursor.push_back(0);
      len.push_back(l);
    }
  }

  std::vector<MarkedClass> out;
  for (auto& [darts, l] : found) out.push_back(MarkedClass{CyclicWord(x, darts), l});
  std::stable_sort(out.begin(), out.end(),
                   [](const MarkedClass& a, const MarkedClass& b) { return a.length < b.length; });
  return out;
}

FreeWord based_loop_to_free_word(const MetricGraph& x, const DartPath& loop) {
  if (!loop.empty() && !is_closed_path(x, loop)) throw InputError("not a closed edge loop");
  FreeWord w;
  for (const auto& d : loop)
    if (auto g = x.generator_of(d.generator)) w.push_back(Letter{static_cast<std::uint32_t>(*g), d.inverse});
  return reduce(w);
}

FreeWord loop_to_free_word(const MetricGraph& x, const DartPath& loop) {
  return cyclic_reduce(based_loop_to_free_word(x, loop));
}

DartPath fundamental_loop(const MetricGraph& x, std::size_t generator) {
  if (generator >= x.rank()) throw InputError("generator index out of range");
  const auto& e = x.graph().edges()[x.generators()[generator]];
  DartPath p = x.tree_path(e.from);
  p.push_back(Dart{static_cast<std::uint32_t>(e.id), false});
  auto back = inverse(x.tree_path(e.to));
  p.insert(p.end(), back.begin(), back.end());
  return p;
}

DartPath parse_edge_path(const MetricGraph& x, const std::string& text) {
  std::string spaced = text;
  for (auto& c : spaced)
    if (c == '*') c = ' ';
  std::istringstream is(spaced);
  std::string tok;
  DartPath out;
  const auto& g = x.graph();
  while (is >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    std::optional<std::size_t> edge;
    for (std::size_t c = 0; c < g.colors().size() && !edge; ++c) {
      const auto& name = g.colors()[c];
      if (tok.size() <= name.size() || tok.compare(0, name.size(), name) != 0) continue;
      if (auto v = g.find_vertex(tok.substr(name.size()))) edge = g.out_edge(*v, c);
    }
    if (!edge) throw InputError("cannot resolve edge token '" + tok + "'");
    out.push_back(Dart{static_cast<std::uint32_t>(*edge), inv});
  }
  return out;
}

std::string format_edge_path(const MetricGraph& x, const DartPath& darts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const auto& e = x.graph().edges()[darts[i].generator];
    if (i) os << '*';
    os << x.graph().colors()[e.color] << x.graph().vertices()[e.from];
    if (darts[i].inverse) os << "^-1";
  }
  return os.str();
}

MetricGraph rescale(const MetricGraph& x, const Rational& c) {
  if (c.sign() <= 0) throw InputError("scale factor must be positive");
  std::vector<Rational> lengths;
  for (const auto& l : x.lengths()) lengths.push_back(l * c);
  return MetricGraph(x.graph(), std::move(lengths), x.tree_edges());
}

}  // namespace covspec
