#include "covspec/repro.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "covspec/error.hpp"
#include "covspec/fano.hpp"
#include "covspec/reference_data.hpp"

namespace covspec {

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& r : v) s += (s.empty() ? "" : " ") + r.str();
  return "{" + s + "}";
}

std::vector<Rational> lengths_of(const std::vector<MarkedClass>& classes) {
  std::vector<Rational> out;
  for (const auto& c : classes) out.push_back(c.length);
  return out;
}

bool all_certificates_check(const CovSpecResult& r, std::string& why) {
  for (const auto& q : r.report.queries)
    if (!check_certificate(q.query, q.certificate, &why)) return false;
  return true;
}

// Every listed loop is a geodesic with its own length, and together with nothing else they
// are the classes below the budget.
Assertion loop_table(const std::string& name, const MetricGraph& x, const std::vector<MarkedClass>& classes,
                     const std::vector<DartPath>& loops) {
  std::set<CyclicWord> listed;
  std::ostringstream detail;
  for (const auto& l : loops) {
    try {
      listed.insert(CyclicWord(x, l));
    } catch (const InputError& e) {
      return Assertion{name, false, format_edge_path(x, l) + ": " + e.what()};
    }
  }
  std::set<CyclicWord> found;
  for (const auto& c : classes) found.insert(c.word);
  std::size_t missing = 0, extra = 0;
  for (const auto& w : listed)
    if (!found.count(w)) ++missing;
  for (const auto& w : found)
    if (!listed.count(w)) ++extra;
  detail << listed.size() << " listed, " << found.size() << " enumerated, " << missing << " missing, " << extra
         << " unlisted";
  return Assertion{name, missing == 0 && extra == 0 && listed.size() == loops.size(), detail.str()};
}

}  // namespace

bool FanoRun::pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

FanoRun run_fano(const Rational& la, const Rational& lb, const CovSpecBudgets& budgets) {
  if (la.sign() <= 0 || lb.sign() <= 0) throw InputError("lengths must be positive");
  FanoRun r;
  r.la = la;
  r.lb = lb;
  r.constraint_ok = la < lb && lb < la * Rational(3, 2);
  r.distinguishing = la + lb / Rational(2);

  const FanoGraphs fg = fano_graphs();
  const ColoredGraph ref_points = reference_graph(reference_point_graph_edges());
  const ColoredGraph ref_lines = reference_graph(reference_line_graph_edges());
  r.points_match_reference = same_labelled_edges(fg.points, ref_points);
  r.lines_match_reference = same_labelled_edges(fg.lines, ref_lines);
  const auto iso = find_color_isometry(fg.points, ref_points);
  if (iso) r.points_reversed_colors = iso->reversed;

  const std::map<std::string, Rational> lengths{{"A", la}, {"B", lb}};
  const MetricGraph x1 = metric_graph(fg.points, lengths);
  const MetricGraph x2 = metric_graph(fg.lines, lengths);
  r.points = covering_spectrum(x1, budgets);
  r.lines = covering_spectrum(x2, budgets);

  const Rational budget = la + Rational(2) * lb;
  const auto c1 = enumerate_classes(x1, budget, true);
  const auto c2 = enumerate_classes(x2, budget, true);
  r.short_lengths_points = lengths_of(c1);
  r.short_lengths_lines = lengths_of(c2);
  if (!r.constraint_ok) return r;

  auto& a = r.assertions;
  const auto& s1 = r.points.spectrum.values;
  const auto& s2 = r.lines.spectrum.values;
  const bool in1 = std::binary_search(s1.begin(), s1.end(), r.distinguishing);
  const bool in2 = std::binary_search(s2.begin(), s2.end(), r.distinguishing);
  a.push_back({"distinguishing value in CovSpec(X1)", in1, r.distinguishing.str() + " vs " + join(s1)});
  a.push_back({"distinguishing value not in CovSpec(X2)", !in2, r.distinguishing.str() + " vs " + join(s2)});

  std::vector<Rational> expected{la, lb, la * 2, la * 2, la + lb, la + lb, lb * 2, la * 3, la * 2 + lb, la * 2 + lb};
  std::sort(expected.begin(), expected.end());
  a.push_back({"short marked lengths of X1", r.short_lengths_points == expected, join(r.short_lengths_points)});
  a.push_back({"short marked lengths of X2", r.short_lengths_lines == expected, join(r.short_lengths_lines)});

  if (iso) {
    const MetricGraph ref1 = metric_graph(ref_points, lengths);
    std::vector<DartPath> loops;
    for (const auto& s : reference_loops_points()) loops.push_back(pull_back_loop(fg.points, *iso, parse_edge_path(ref1, s)));
    a.push_back(loop_table("minimal loop table of X1", x1, c1, loops));
  } else {
    a.push_back({"minimal loop table of X1", false, "no isometry to the reference drawing"});
  }
  std::vector<DartPath> loops2;
  for (const auto& s : reference_loops_lines()) loops2.push_back(parse_edge_path(x2, s));
  a.push_back(loop_table("minimal loop table of X2", x2, c2, loops2));

  std::string why;
  bool ok1 = all_certificates_check(r.points, why);
  a.push_back({"certificates of X1 re-verified", ok1, ok1 ? std::to_string(r.points.report.queries.size()) : why});
  bool ok2 = all_certificates_check(r.lines, why);
  a.push_back({"certificates of X2 re-verified", ok2, ok2 ? std::to_string(r.lines.report.queries.size()) : why});
  a.push_back({"2*CovSpec(X1) within marked lengths", length_spectrum_containment(r.points.spectrum, r.points.report), ""});
  a.push_back({"2*CovSpec(X2) within marked lengths", length_spectrum_containment(r.lines.spectrum, r.lines.report), ""});
  return r;
}

TripleRun run_triple(const Subgroup& h1, const Subgroup& h2) {
  TripleRun t;
  const auto& g = h1.parent();
  t.group_order = g.order();
  for (const auto& c : g.classes()) t.class_sizes.push_back(c.size());
  t.h1_order = h1.order();
  t.h2_order = h2.order();
  t.gassmann = is_gassmann_sunada(h1, h2);
  t.jump = is_jump_equivalent(h1, h2);
  return t;
}

TripleRun run_fano_triple() {
  const FanoActions f = fano_actions();
  const std::size_t p = fano_vertex("100");
  return run_triple(stabilizer(f.group, f.points.offset + p), stabilizer(f.group, f.lines.offset + p));
}

GroupFile parse_group_file(const std::string& text) {
  GroupFile gf;
  auto perm = [](const std::string& s) {
    std::istringstream is(s);
    std::vector<std::uint32_t> images;
    long long v;
    while (is >> v) {
      if (v < 0) throw InputError("negative point in permutation");
      images.push_back(static_cast<std::uint32_t>(v));
    }
    if (!is.eof()) throw InputError("bad permutation line '" + s + "'");
    return Permutation(std::move(images));
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto start = line.find_first_not_of(" \t");
    std::vector<Permutation>* target = &gf.generators;
    if (line.compare(start, 3, "H1:") == 0) {
      target = &gf.h1;
      gf.has_h1 = true;
      line = line.substr(start + 3);
    } else if (line.compare(start, 3, "H2:") == 0) {
      target = &gf.h2;
      gf.has_h2 = true;
      line = line.substr(start + 3);
    }
    if (target == &gf.generators) {
      target->push_back(perm(line));
      continue;
    }
    std::istringstream parts(line);
    std::string part;
    while (std::getline(parts, part, '|'))
      if (part.find_first_not_of(" \t\r") != std::string::npos) target->push_back(perm(part));
  }
  if (gf.generators.empty()) throw InputError("group file lists no generators");
  return gf;
}

bool ReproRun::pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

ReproRun run_repro(std::size_t n, const CovSpecBudgets& budgets) {
  if (n < 1) throw InputError("--n must be at least 1");
  ReproRun r;
  r.triple = run_fano_triple();
  r.fano = run_fano(Rational(2), Rational(5, 2), budgets);
  auto& a = r.assertions;
  a.push_back({"|G| = 168", r.triple.group_order == 168, std::to_string(r.triple.group_order)});
  a.push_back({"|H1| = |H2| = 24", r.triple.h1_order == 24 && r.triple.h2_order == 24,
               std::to_string(r.triple.h1_order) + ", " + std::to_string(r.triple.h2_order)});
  a.push_back({"Gassmann-Sunada triple", r.triple.gassmann.holds, ""});
  for (const auto& f : r.fano.assertions) a.push_back(f);
  bool genus_ok = true;
  for (std::size_t k = 1; k <= n; ++k) {
    auto g = surface_genus(7, k - 1, 2);
    r.genus.emplace_back(k, g);
    genus_ok = genus_ok && g == 7 * k + 1;
  }
  a.push_back({"genus 7n+1 for n = 1.." + std::to_string(n), genus_ok, ""});
  return r;
}

Json assertions_to_json(const std::vector<Assertion>& as) {
  Json a = Json::array();
  for (const auto& x : as) a.push_back(Json{{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
  return a;
}

Json fano_to_json(const FanoRun& r, bool explain) {
  const FanoGraphs fg = fano_graphs();
  const std::map<std::string, Rational> lengths{{"A", r.la}, {"B", r.lb}};
  Json j;
  j["la"] = r.la.str();
  j["lb"] = r.lb.str();
  j["constraint_satisfied"] = r.constraint_ok;
  if (!r.constraint_ok) j["warning"] = "lengths violate 0 < l_A < l_B < 3/2 l_A; assertions not claimed";
  j["distinguishing_value"] = r.distinguishing.str();
  j["X1"] = covspec_to_json(metric_graph(fg.points, lengths), r.points, explain);
  j["X2"] = covspec_to_json(metric_graph(fg.lines, lengths), r.lines, explain);
  auto strs = [](const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  j["short_lengths_X1"] = strs(r.short_lengths_points);
  j["short_lengths_X2"] = strs(r.short_lengths_lines);
  Json ref;
  ref["points_label_exact"] = r.points_match_reference;
  ref["lines_label_exact"] = r.lines_match_reference;
  if (r.points_reversed_colors) {
    Json rev = Json::array();
    for (bool b : *r.points_reversed_colors) rev.push_back(b);
    ref["points_isometric_reversing"] = std::move(rev);
  }
  j["reference_drawings"] = std::move(ref);
  j["assertions"] = assertions_to_json(r.assertions);
  j["pass"] = r.pass();
  return j;
}

Json triple_to_json(const TripleRun& t) {
  Json j;
  j["group_order"] = t.group_order;
  j["class_sizes"] = t.class_sizes;
  j["h1_order"] = t.h1_order;
  j["h2_order"] = t.h2_order;
  Json table = Json::array();
  for (const auto& c : t.gassmann.table)
    table.push_back(Json{{"class", c.class_index}, {"size", c.class_size}, {"in_h1", c.in_first}, {"in_h2", c.in_second}});
  j["gassmann_sunada"] = Json{{"holds", t.gassmann.holds}, {"table", std::move(table)}};
  Json je{{"holds", t.jump.holds},
          {"stable_subsets", t.jump.stable_subsets},
          {"distinct_subgroups_h1", t.jump.distinct_first},
          {"distinct_subgroups_h2", t.jump.distinct_second}};
  if (t.jump.witness) je["witness_masks"] = Json::array({t.jump.witness->first, t.jump.witness->second});
  j["jump_equivalent"] = std::move(je);
  return j;
}

Json repro_to_json(const ReproRun& r, bool explain) {
  Json j;
  j["triple"] = triple_to_json(r.triple);
  j["fano"] = fano_to_json(r.fano, explain);
  Json g = Json::array();
  for (const auto& [n, genus] : r.genus) g.push_back(Json{{"n", n}, {"genus", genus}});
  j["genus"] = std::move(g);
  j["assertions"] = assertions_to_json(r.assertions);
  j["pass"] = r.pass();
  return j;
}

}  // namespace covspec
