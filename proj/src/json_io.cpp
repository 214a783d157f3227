#include "covspec/json_io.hpp"

#include "covspec/error.hpp"

namespace covspec {

namespace {

std::string rational_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("lengths must be \"p/q\" strings or integers");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

ColoredGraph colored_graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw InputError("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::string> colors;
    if (j.contains("colors"))
      for (const auto& c : j.at("colors")) colors.push_back(c.get<std::string>());
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      auto name = e.at("color").get<std::string>();
      auto it = std::find(colors.begin(), colors.end(), name);
      if (it == colors.end()) {
        if (j.contains("colors")) throw InputError("edge color " + name + " not in \"colors\"");
        colors.push_back(name);
        it = colors.end() - 1;
      }
      long long id = e.at("id").get<long long>(), from = e.at("from").get<long long>(),
                to = e.at("to").get<long long>();
      if (id < 0 || from < 0 || to < 0) throw InputError("negative edge field");
      edges.push_back(Edge{static_cast<std::size_t>(id), static_cast<std::size_t>(from), static_cast<std::size_t>(to),
                           static_cast<std::size_t>(it - colors.begin())});
    }
    return ColoredGraph(std::move(vertices), std::move(colors), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad graph JSON: ") + e.what());
  }
}

MetricGraph metric_graph_from_json(const Json& j) {
  ColoredGraph g = colored_graph_from_json(j);
  try {
    std::map<std::string, Rational> by_color;
    if (j.contains("lengths"))
      for (const auto& [k, v] : j.at("lengths").items()) by_color[k] = Rational::parse(rational_text(v));
    std::vector<Rational> lengths(g.edge_count());
    std::vector<bool> set(g.edge_count(), false);
    for (const auto& e : j.at("edges"))
      if (e.contains("length")) {
        auto id = e.at("id").get<std::size_t>();
        lengths[id] = Rational::parse(rational_text(e.at("length")));
        set[id] = true;
      }
    for (const auto& e : g.edges()) {
      if (set[e.id]) continue;
      auto it = by_color.find(g.colors()[e.color]);
      if (it == by_color.end()) throw InputError("no length for edge " + std::to_string(e.id));
      lengths[e.id] = it->second;
    }
    return MetricGraph(std::move(g), std::move(lengths));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad graph JSON: ") + e.what());
  }
}

Json graph_to_json(const ColoredGraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  j["colors"] = g.colors();
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(Json{{"id", e.id}, {"from", e.from}, {"to", e.to}, {"color", g.colors()[e.color]}});
  j["edges"] = std::move(edges);
  return j;
}

Json graph_to_json(const MetricGraph& x) {
  Json j = graph_to_json(x.graph());
  // color lengths when uniform per color, else per edge
  std::map<std::size_t, Rational> per_color;
  bool uniform = true;
  for (const auto& e : x.graph().edges()) {
    auto [it, fresh] = per_color.emplace(e.color, x.length(e.id));
    if (!fresh && it->second != x.length(e.id)) uniform = false;
  }
  if (uniform) {
    Json l = Json::object();
    for (const auto& [c, r] : per_color) l[x.graph().colors()[c]] = r.str();
    j["lengths"] = std::move(l);
  } else {
    for (auto& e : j["edges"]) e["length"] = x.length(e["id"].get<std::size_t>()).str();
  }
  return j;
}

Json word_to_json(const FreeWord& w) { return to_string(w); }

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["tier"] = to_string(c.tier);
  switch (c.tier) {
    case Tier::syntactic: {
      Json f = Json::array();
      for (const auto& x : c.factors)
        f.push_back(Json{{"conjugator", to_string(x.conjugator)}, {"relator", x.relator}, {"exponent", x.exponent}});
      j["factors"] = std::move(f);
      break;
    }
    case Tier::abelian: {
      Json f = Json::array();
      for (const auto& x : c.functional) f.push_back(x.get_str());
      j["functional"] = std::move(f);
      j["modulus"] = c.modulus.get_str();
      break;
    }
    case Tier::contraction:
      j["contracted_edges"] = c.contracted_edges;
      j["image"] = to_string(c.contracted_image);
      break;
    case Tier::coset_enumeration: {
      j["mode"] = to_string(c.mode);
      Json steps = Json::array();
      for (const auto& s : c.eliminations)
        steps.push_back(Json{{"generator", s.generator},
                             {"relator", to_string(s.relator)},
                             {"replacement", to_string(s.replacement)}});
      j["eliminations"] = std::move(steps);
      j["reduced_target"] = to_string(c.reduced_target);
      j["table_size"] = c.table_size;
      if (!c.table.rows.empty()) j["table"] = c.table.rows;
      if (!c.trace.empty()) {
        Json t = Json::array();
        for (const auto& e : c.trace) t.push_back(Json::array({e.op == TraceOp::scan ? "scan" : "fill", e.coset, e.item}));
        j["trace"] = std::move(t);
      }
      break;
    }
    case Tier::none: break;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json covspec_to_json(const MetricGraph& x, const CovSpecResult& r, bool explain) {
  Json j;
  Json cs = Json::array(), jumps = Json::array();
  for (const auto& v : r.spectrum.values) cs.push_back(v.str());
  for (const auto& jr : r.report.jumps) jumps.push_back(jr.value.str());
  j["covspec"] = std::move(cs);
  j["jumps"] = std::move(jumps);
  if (!explain) return j;

  Json witnesses = Json::array();
  for (const auto& jr : r.report.jumps) {
    Json rel = Json::array();
    for (const auto& w : jr.relators) rel.push_back(format_edge_path(x, w.darts()));
    witnesses.push_back(Json{{"jump", jr.value.str()},
                             {"class", format_edge_path(x, jr.witness.word.darts())},
                             {"length", jr.witness.length.str()},
                             {"relators", std::move(rel)},
                             {"certificate", jr.certificate}});
  }
  j["witnesses"] = std::move(witnesses);
  Json certs = Json::array();
  for (const auto& q : r.report.queries) {
    Json c = certificate_to_json(q.certificate);
    c["target"] = q.query.target_loop.empty() ? to_string(q.query.target) : format_edge_path(x, q.query.target_loop);
    c["relator_count"] = q.query.relators.size();
    certs.push_back(std::move(c));
  }
  j["certificates"] = std::move(certs);
  j["termination"] = r.report.termination;
  j["final_budget"] = r.report.final_budget.str();
  Json realized = Json::array();
  for (const auto& l : r.report.realized_lengths) realized.push_back(l.str());
  j["realized_lengths"] = std::move(realized);
  return j;
}

Json lattice_to_json(const LatticeSpectrum& s) {
  auto values = [](const std::vector<LatticeValue>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(Json{{"squared", v.squared.str()}, {"exact", v.exact}, {"approx", v.approx}});
    return a;
  };
  Json j;
  Json cs = Json::array();
  for (const auto& v : s.covspec) cs.push_back(v.exact);
  j["covspec"] = std::move(cs);
  j["covspec_detail"] = values(s.covspec);
  j["jumps"] = values(s.jumps);
  return j;
}

}  // namespace covspec
