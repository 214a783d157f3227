#include "covspec/spectrum.hpp"

#include <map>

#include "covspec/error.hpp"

namespace covspec {

namespace {

struct Level {
  Rational value;
  std::vector<std::size_t> classes;  // indices into the current enumeration
};

std::vector<Level> levels_of(const std::vector<MarkedClass>& classes) {
  std::vector<Level> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (out.empty() || out.back().value != classes[i].length) out.push_back(Level{classes[i].length, {}});
    out.back().classes.push_back(i);
  }
  return out;
}

}  // namespace

CovSpecResult covering_spectrum(const MetricGraph& x, const CovSpecBudgets& budgets) {
  CovSpecResult res;
  auto& rep = res.report;
  res.spectrum.source = std::to_string(x.graph().vertex_count()) + " vertices, " +
                        std::to_string(x.graph().edge_count()) + " edges, rank " + std::to_string(x.rank());
  if (x.rank() == 0) {
    rep.terminated = true;
    return res;
  }

  Rational budget = budgets.initial_budget;
  if (budget.sign() <= 0) {
    budget = Rational(0);
    for (const auto& l : x.lengths()) budget = std::max(budget, l);
    budget *= Rational(2);
  }

  std::vector<DartPath> relator_loops;
  std::vector<CyclicWord> relator_words;
  std::vector<bool> generator_done(x.rank(), false);
  std::optional<Rational> processed;
  std::vector<MarkedClass> classes;
  const std::vector<MarkedClass>* current = &classes;

  auto ask = [&](const DartPath& target) -> const Certificate& {
    MembershipQuery q = graph_query(x, relator_loops, target);
    Certificate c = decide_membership(q, budgets.oracle);
    rep.queries.push_back(QueryRecord{std::move(q), std::move(c)});
    return rep.queries.back().certificate;
  };

  GenerationOracle<std::size_t> oracle;
  oracle.contains = [&](const std::size_t& idx) {
    const auto& cls = (*current)[idx];
    const Certificate& c = ask(cls.word.darts());
    if (c.verdict == Verdict::undecided)
      throw OracleUndecided("membership undecided: " + c.note,
                            format_edge_path(x, cls.word.darts()) + " in the normal closure of " +
                                std::to_string(relator_loops.size()) + " classes");
    return c.verdict == Verdict::member;
  };
  oracle.add = [&](const std::size_t& idx) {
    relator_loops.push_back((*current)[idx].word.darts());
    relator_words.push_back((*current)[idx].word);
  };
  JumpScanner<std::size_t> scanner(oracle);

  auto check_termination = [&] {
    for (std::size_t g = 0; g < x.rank(); ++g) {
      if (generator_done[g]) continue;
      const Certificate& c = ask(fundamental_loop(x, g));
      if (c.verdict != Verdict::member) {
        if (c.verdict == Verdict::undecided)
          rep.diagnostics += "generator " + std::to_string(g) + " undecided at termination check; ";
        return false;
      }
      generator_done[g] = true;
      rep.termination.push_back(rep.queries.size() - 1);
    }
    return true;
  };

  for (;;) {
    classes = enumerate_classes(x, budget, false, budgets.class_cap);
    for (const auto& level : levels_of(classes)) {
      if (processed && level.value <= *processed) continue;
      std::vector<CyclicWord> snapshot = relator_words;
      auto witness = scanner.feed_level(level.value, level.classes);
      processed = level.value;
      if (!witness) continue;
      rep.jumps.push_back(JumpRecord{level.value, classes[level.classes[*witness]], std::move(snapshot), 0});
      // the witness query is the last one asked before the level was added
      std::size_t idx = rep.queries.size() - 1;
      rep.jumps.back().certificate = idx;
      if (check_termination()) {
        rep.terminated = true;
        break;
      }
    }
    if (rep.terminated) break;
    if (budgets.max_budget.sign() > 0 && budget * Rational(2) > budgets.max_budget)
      throw CapExceeded("covering spectrum not saturated below budget " + budgets.max_budget.str());
    budget *= Rational(2);
  }

  rep.final_budget = budget;
  for (const auto& c : classes)
    if (rep.realized_lengths.empty() || rep.realized_lengths.back() != c.length) rep.realized_lengths.push_back(c.length);
  for (const auto& j : rep.jumps) res.spectrum.values.push_back(j.value / Rational(2));
  return res;
}

bool length_spectrum_containment(const CoveringSpectrum& spectrum, const FiltrationReport& report) {
  for (const auto& v : spectrum.values)
    if (!std::binary_search(report.realized_lengths.begin(), report.realized_lengths.end(), v * Rational(2)))
      return false;
  return true;
}

}  // namespace covspec
