#include "covspec/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "covspec/error.hpp"

namespace covspec {

ColoredGraph::ColoredGraph(std::vector<std::string> vertices, std::vector<std::string> colors,
                           std::vector<Edge> edges)
    : vertices_(std::move(vertices)), colors_(std::move(colors)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.id != i) throw InputError("edge ids must be exactly 0.." + std::to_string(edges_.size() - 1));
    if (e.from >= vertices_.size() || e.to >= vertices_.size())
      throw InputError("edge " + std::to_string(e.id) + " has an endpoint out of range");
    if (e.color >= colors_.size()) throw InputError("edge " + std::to_string(e.id) + " has an unknown color");
  }
}

std::optional<std::size_t> ColoredGraph::find_vertex(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> ColoredGraph::find_color(const std::string& name) const {
  auto it = std::find(colors_.begin(), colors_.end(), name);
  if (it == colors_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - colors_.begin());
}

std::optional<std::size_t> ColoredGraph::out_edge(std::size_t v, std::size_t color) const {
  for (const auto& e : edges_)
    if (e.from == v && e.color == color) return e.id;
  return std::nullopt;
}

bool ColoredGraph::is_cayley_regular() const {
  const std::size_t n = vertices_.size(), k = colors_.size();
  std::vector<std::size_t> out(n * k, 0), in(n * k, 0);
  for (const auto& e : edges_) {
    ++out[e.from * k + e.color];
    ++in[e.to * k + e.color];
  }
  return std::all_of(out.begin(), out.end(), [](std::size_t c) { return c == 1; }) &&
         std::all_of(in.begin(), in.end(), [](std::size_t c) { return c == 1; });
}

bool ColoredGraph::is_connected() const {
  const std::size_t n = vertices_.size();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges_) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push_back(u);
      }
  }
  return count == n;
}

ColoredGraph generalized_cayley(std::vector<std::string> vertex_labels, std::vector<std::string> colors,
                                const std::function<std::size_t(std::size_t, std::size_t)>& act) {
  std::vector<Edge> edges;
  const std::size_t k = colors.size();
  for (std::size_t v = 0; v < vertex_labels.size(); ++v)
    for (std::size_t s = 0; s < k; ++s) edges.push_back(Edge{v * k + s, v, act(v, s), s});
  return ColoredGraph(std::move(vertex_labels), std::move(colors), std::move(edges));
}

namespace {

std::vector<std::string> color_names(std::span<const NamedElement> gens) {
  std::vector<std::string> names;
  for (const auto& s : gens) names.push_back(s.name);
  return names;
}

std::vector<std::size_t> generator_indices(const FiniteGroup& g, std::span<const NamedElement> gens) {
  std::vector<std::size_t> idx;
  for (const auto& s : gens) idx.push_back(g.require_index(s.element));
  return idx;
}

}  // namespace

ColoredGraph cayley_graph(const FiniteGroup& g, const ActionBlock& block, std::span<const NamedElement> gens) {
  generator_indices(g, gens);
  return generalized_cayley(block.labels, color_names(gens),
                            [&](std::size_t v, std::size_t s) { return block.image(gens[s].element, v); });
}

ColoredGraph cayley_graph_regular(const FiniteGroup& g, std::span<const NamedElement> gens) {
  auto idx = generator_indices(g, gens);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.order(); ++i) labels.push_back("g" + std::to_string(i));
  return generalized_cayley(std::move(labels), color_names(gens),
                            [&](std::size_t v, std::size_t s) { return g.multiply(v, idx[s]); });
}

std::vector<std::size_t> coset_index(const Subgroup& h) {
  const auto& g = h.parent();
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> coset(g.order(), none);
  std::size_t next = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset[i] != none) continue;
    for (auto m : h.members()) coset[g.multiply(m, i)] = next;
    ++next;
  }
  return coset;
}

ColoredGraph quotient_is_schreier(const Subgroup& h, std::span<const NamedElement> gens) {
  const auto& g = h.parent();
  auto idx = generator_indices(g, gens);
  auto coset = coset_index(h);
  const std::size_t index = g.order() / h.order();
  std::vector<std::size_t> rep(index, 0);
  for (std::size_t i = g.order(); i-- > 0;) rep[coset[i]] = i;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < index; ++c) labels.push_back("H" + std::to_string(c));
  ColoredGraph schreier = generalized_cayley(
      std::move(labels), color_names(gens),
      [&](std::size_t c, std::size_t s) { return coset[g.multiply(rep[c], idx[s])]; });

  if (!find_color_isomorphism(schreier, left_orbit_quotient(h, gens)))
    throw std::logic_error("coset graph is not isomorphic to the orbit quotient of G[S]");
  return schreier;
}

ColoredGraph left_orbit_quotient(const Subgroup& h, std::span<const NamedElement> gens) {
  const auto& g = h.parent();
  ColoredGraph full = cayley_graph_regular(g, gens);
  const std::size_t k = gens.size();
  const std::size_t none = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> vorbit(full.vertex_count(), none);
  std::size_t nv = 0;
  for (std::size_t v = 0; v < full.vertex_count(); ++v) {
    if (vorbit[v] != none) continue;
    for (auto m : h.members()) vorbit[g.multiply(m, v)] = nv;
    ++nv;
  }
  std::vector<std::size_t> eorbit(full.edge_count(), none);
  std::vector<Edge> edges;
  for (const auto& e : full.edges()) {
    if (eorbit[e.id] != none) continue;
    const std::size_t id = edges.size();
    for (auto m : h.members()) eorbit[g.multiply(m, e.from) * k + e.color] = id;
    edges.push_back(Edge{id, vorbit[e.from], vorbit[e.to], e.color});
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nv; ++i) labels.push_back("O" + std::to_string(i));
  return ColoredGraph(std::move(labels), full.colors(), std::move(edges));
}

GraphAction left_regular_action(const FiniteGroup& g, std::size_t generator_count) {
  GraphAction act;
  act.group_order = g.order();
  act.vertex = [&g](std::size_t h, std::size_t v) { return g.multiply(h, v); };
  act.edge = [&g, generator_count](std::size_t h, std::size_t e) {
    return g.multiply(h, e / generator_count) * generator_count + e % generator_count;
  };
  return act;
}

bool action_is_free(const ColoredGraph& graph, const GraphAction& action) {
  bool free = true;
  for (std::size_t h = 0; h < action.group_order; ++h) {
    for (const auto& e : graph.edges()) {
      const auto& img = graph.edges().at(action.edge(h, e.id));
      if (img.color != e.color || img.from != action.vertex(h, e.from) || img.to != action.vertex(h, e.to))
        throw std::logic_error("group element does not act by a color-preserving automorphism");
      if (h != 0 && img.id == e.id) free = false;
    }
    if (h == 0) continue;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
      if (action.vertex(h, v) == v) free = false;
  }
  return free;
}

namespace {

using EdgeKey = std::tuple<std::size_t, std::size_t, std::size_t>;

class IsoSearch {
 public:
  IsoSearch(const ColoredGraph& a, const ColoredGraph& b) : a_(a), b_(b) {}

  // Returns number of vertex maps found (stops after `limit`).
  std::size_t run(std::size_t limit) {
    limit_ = limit;
    if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count() ||
        a_.colors().size() != b_.colors().size())
      return 0;
    for (const auto& c : a_.colors()) {
      auto bc = b_.find_color(c);
      if (!bc) return 0;
      color_map_.push_back(*bc);
    }
    const std::size_t n = a_.vertex_count();
    a_inc_.assign(n, {});
    b_out_.assign(n, {});
    b_in_.assign(n, {});
    for (const auto& e : a_.edges()) {
      a_inc_[e.from].push_back(e.id);
      if (e.to != e.from) a_inc_[e.to].push_back(e.id);
      ++a_count_[{e.from, e.to, color_map_[e.color]}];
    }
    for (const auto& e : b_.edges()) {
      b_out_[e.from].push_back(e.id);
      b_in_[e.to].push_back(e.id);
      ++b_count_[{e.from, e.to, e.color}];
    }
    for (std::size_t v = 0; v < n; ++v) {
      a_sig_.push_back(signature(a_, v, true));
      b_sig_.push_back(signature(b_, v, false));
    }
    // undirected BFS order so most vertices have a mapped neighbour
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<std::size_t> q{root};
      while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        order_.push_back(v);
        for (auto id : a_inc_[v]) {
          const auto& e = a_.edges()[id];
          auto u = e.from == v ? e.to : e.from;
          if (!seen[u]) {
            seen[u] = true;
            q.push_back(u);
          }
        }
      }
    }
    phi_.assign(n, kNone);
    used_.assign(n, false);
    extend(0);
    return found_;
  }

  std::optional<GraphIsomorphism> first() const {
    if (!first_) return std::nullopt;
    GraphIsomorphism iso;
    iso.vertex_map = *first_;
    std::map<EdgeKey, std::deque<std::size_t>> pool;
    for (const auto& e : b_.edges()) pool[{e.from, e.to, e.color}].push_back(e.id);
    for (const auto& e : a_.edges()) {
      auto& q = pool[{iso.vertex_map[e.from], iso.vertex_map[e.to], color_map_[e.color]}];
      iso.edge_map.push_back(q.front());
      q.pop_front();
    }
    return iso;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> signature(const ColoredGraph& g, std::size_t v, bool translate) const {
    std::vector<std::size_t> sig(3 * g.colors().size(), 0);
    for (const auto& e : g.edges()) {
      std::size_t c = translate ? color_map_[e.color] : e.color;
      if (e.from == v && e.to == v) ++sig[3 * c + 2];
      else if (e.from == v) ++sig[3 * c];
      else if (e.to == v) ++sig[3 * c + 1];
    }
    return sig;
  }

  std::size_t count(const std::map<EdgeKey, std::size_t>& m, const EdgeKey& k) const {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  }

  bool consistent(std::size_t v, std::size_t w) const {
    if (used_[w] || a_sig_[v] != b_sig_[w]) return false;
    for (auto id : a_inc_[v]) {
      const auto& e = a_.edges()[id];
      std::size_t f = e.from == v ? w : phi_[e.from];
      std::size_t t = e.to == v ? w : phi_[e.to];
      if (f == kNone || t == kNone) continue;
      if (count(a_count_, {e.from, e.to, color_map_[e.color]}) != count(b_count_, {f, t, color_map_[e.color]}))
        return false;
    }
    return true;
  }

  void extend(std::size_t k) {
    if (found_ >= limit_) return;
    if (k == order_.size()) {
      if (!first_) first_ = phi_;
      ++found_;
      return;
    }
    const std::size_t v = order_[k];
    std::vector<std::size_t> candidates;
    bool anchored = false;
    for (auto id : a_inc_[v]) {
      const auto& e = a_.edges()[id];
      const std::size_t bc = color_map_[e.color];
      if (e.to == v && e.from != v && phi_[e.from] != kNone) {
        for (auto bid : b_out_[phi_[e.from]])
          if (b_.edges()[bid].color == bc) candidates.push_back(b_.edges()[bid].to);
        anchored = true;
      } else if (e.from == v && e.to != v && phi_[e.to] != kNone) {
        for (auto bid : b_in_[phi_[e.to]])
          if (b_.edges()[bid].color == bc) candidates.push_back(b_.edges()[bid].from);
        anchored = true;
      }
      if (anchored) break;
    }
    if (!anchored)
      for (std::size_t w = 0; w < b_.vertex_count(); ++w) candidates.push_back(w);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto w : candidates) {
      if (!consistent(v, w)) continue;
      phi_[v] = w;
      used_[w] = true;
      extend(k + 1);
      phi_[v] = kNone;
      used_[w] = false;
      if (found_ >= limit_) return;
    }
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::vector<std::size_t> color_map_;
  std::vector<std::vector<std::size_t>> a_inc_, b_out_, b_in_;
  std::map<EdgeKey, std::size_t> a_count_, b_count_;
  std::vector<std::vector<std::size_t>> a_sig_, b_sig_;
  std::vector<std::size_t> order_, phi_;
  std::vector<bool> used_;
  std::size_t limit_ = 1, found_ = 0;
  std::optional<std::vector<std::size_t>> first_;
};

}  // namespace

std::optional<GraphIsomorphism> find_color_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  IsoSearch s(a, b);
  s.run(1);
  return s.first();
}

std::size_t count_color_isomorphisms(const ColoredGraph& a, const ColoredGraph& b) {
  IsoSearch s(a, b);
  return s.run(std::numeric_limits<std::size_t>::max());
}

ColoredGraph reverse_colors(const ColoredGraph& g, const std::vector<bool>& reversed) {
  if (reversed.size() != g.colors().size()) throw InputError("reverse_colors: mask size mismatch");
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges)
    if (reversed[e.color]) std::swap(e.from, e.to);
  return ColoredGraph(g.vertices(), g.colors(), std::move(edges));
}

std::optional<ColorIsometry> find_color_isometry(const ColoredGraph& a, const ColoredGraph& b) {
  const std::size_t k = a.colors().size();
  if (k > 20) throw CapExceeded("too many colors for reversal search");
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<bool> rev(k);
    for (std::size_t c = 0; c < k; ++c) rev[c] = mask >> c & 1;
    if (auto iso = find_color_isomorphism(reverse_colors(a, rev), b)) return ColorIsometry{rev, *iso};
  }
  return std::nullopt;
}

std::uint64_t surface_genus(std::uint64_t vertex_count, std::uint64_t base_genus, std::uint64_t handle_count) {
  if (handle_count < 1) throw InputError("surface_genus needs at least one handle");
  const std::uint64_t per = base_genus + handle_count - 1;
  if (per != 0 && vertex_count > (std::numeric_limits<std::uint64_t>::max() - 1) / per)
    throw InputError("surface_genus overflow");
  return 1 + per * vertex_count;
}

std::string export_dot(const ColoredGraph& graph, const std::string& name) {
  static const char* kStyles[] = {"dotted", "solid", "dashed", "bold"};
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    os << "  v" << v << " [label=" << quote(graph.vertices()[v]) << "];\n";
  for (const auto& e : graph.edges())
    os << "  v" << e.from << " -> v" << e.to << " [label=" << quote(graph.colors()[e.color])
       << ", style=" << kStyles[e.color % 4] << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace covspec
