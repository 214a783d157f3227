#include "covspec/membership.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "covspec/error.hpp"

namespace covspec {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::non_member: return "non_member";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

std::string to_string(Tier t) {
  switch (t) {
    case Tier::syntactic: return "syntactic";
    case Tier::abelian: return "abelian";
    case Tier::contraction: return "contraction";
    case Tier::coset_enumeration: return "coset_enumeration";
    case Tier::none: return "none";
  }
  return "?";
}

std::string to_string(CosetMode m) {
  switch (m) {
    case CosetMode::free_quotient: return "free_quotient";
    case CosetMode::complete_table: return "complete_table";
    case CosetMode::collapse: return "collapse";
  }
  return "?";
}

OracleBudgets OracleBudgets::from_environment() {
  OracleBudgets b;
  if (const char* env = std::getenv("COVSPEC_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError("COVSPEC_BUDGET must be a positive integer");
    b.coset_cap = static_cast<std::size_t>(v);
  }
  return b;
}

// ---------------------------------------------------------------------------------------
// syntactic tier

namespace {

struct RelatorForm {
  std::size_t index;
  long exponent;           // +1 / -1
  FreeWord rotation;       // v^-1 r^e v, cyclically reduced
  FreeWord v;
};

class SyntacticSearch {
 public:
  SyntacticSearch(const std::vector<FreeWord>& relators, const OracleBudgets& budgets) : budgets_(budgets) {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      auto split = cyclic_split(relators[i]);
      if (split.core.empty()) continue;
      cores_.push_back({i, split});
      for (long e : {1L, -1L}) {
        FreeWord base = e > 0 ? split.core : inverse(split.core);
        for (std::size_t m = 0; m < base.size(); ++m) {
          FreeWord s(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(m));
          forms_.push_back(RelatorForm{i, e, rotate(base, m), multiply(split.conjugator, s)});
        }
      }
    }
  }

  std::optional<std::vector<ConjugateFactor>> run(const FreeWord& target) {
    return search(reduce(target), 0);
  }

 private:
  // R = c * core * c^-1 is a single conjugate of a relator power.
  std::optional<ConjugateFactor> direct(const FreeWord& c, const FreeWord& core) {
    for (const auto& [i, split] : cores_) {
      const std::size_t len = split.core.size();
      if (core.size() % len != 0) continue;
      const long n = static_cast<long>(core.size() / len);
      for (long e : {1L, -1L}) {
        FreeWord base = power(split.core, e * n);
        for (std::size_t m = 0; m < len; ++m) {
          if (++ops_ > budgets_.syntactic_operations) return std::nullopt;
          if (rotate(base, m) != core) continue;
          FreeWord s(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(m));
          FreeWord v = multiply(split.conjugator, s);
          return ConjugateFactor{multiply(c, inverse(v)), i, e * n};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<ConjugateFactor>> search(const FreeWord& r, std::size_t depth) {
    if (r.empty()) return std::vector<ConjugateFactor>{};
    auto split = cyclic_split(r);
    const auto& core = split.core;
    if (auto f = direct(split.conjugator, core)) return std::vector<ConjugateFactor>{*f};
    if (depth + 1 >= budgets_.syntactic_factors) return std::nullopt;

    struct Candidate {
      std::size_t cyclic_length;
      FreeWord rest;
      ConjugateFactor factor;
    };
    std::vector<Candidate> cands;
    std::set<std::size_t> offsets;
    const std::size_t reach = std::min(budgets_.syntactic_conjugator, core.size());
    for (std::size_t o = 0; o <= reach && o < core.size(); ++o) {
      offsets.insert(o);
      offsets.insert((core.size() - o) % core.size());
    }
    for (auto o : offsets) {
      FreeWord w = rotate(core, o);
      FreeWord p(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(o));
      FreeWord big_p = multiply(split.conjugator, p);
      for (const auto& form : forms_) {
        if (++ops_ > budgets_.syntactic_operations) return std::nullopt;
        FreeWord rem = multiply(w, inverse(form.rotation));
        auto rem_core = cyclic_reduce(rem);
        if (rem_core.size() >= core.size()) continue;
        cands.push_back(Candidate{rem_core.size(), multiply(multiply(big_p, rem), inverse(big_p)),
                                  ConjugateFactor{multiply(big_p, inverse(form.v)), form.index, form.exponent}});
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.cyclic_length < b.cyclic_length; });
    std::set<FreeWord> tried;
    for (auto& c : cands) {
      if (!tried.insert(canonical_cyclic(cyclic_reduce(c.rest))).second) continue;
      if (auto sub = search(c.rest, depth + 1)) {
        sub->push_back(c.factor);
        return sub;
      }
      if (ops_ > budgets_.syntactic_operations) return std::nullopt;
    }
    return std::nullopt;
  }

  const OracleBudgets& budgets_;
  std::vector<std::pair<std::size_t, CyclicSplit>> cores_;
  std::vector<RelatorForm> forms_;
  std::size_t ops_ = 0;
};

}  // namespace

std::optional<Certificate> syntactic_member(const std::vector<FreeWord>& relators, const FreeWord& target,
                                            const OracleBudgets& budgets) {
  SyntacticSearch s(relators, budgets);
  auto factors = s.run(target);
  if (!factors) return std::nullopt;
  Certificate c;
  c.verdict = Verdict::member;
  c.tier = Tier::syntactic;
  c.factors = std::move(*factors);
  return c;
}

// ---------------------------------------------------------------------------------------
// abelian tier

std::optional<Certificate> abelian_nonmember(const std::vector<FreeWord>& relators, const FreeWord& target,
                                             std::size_t rank) {
  IntMatrix rows;
  for (const auto& r : relators) rows.push_back(exponent_sums(r, rank));
  const IntVector t = exponent_sums(target, rank);
  const SmithForm snf = smith_normal_form(rows, rank);
  for (std::size_t j = 0; j < rank; ++j) {
    BigInt y = 0;
    for (std::size_t i = 0; i < rank; ++i) y += t[i] * snf.column_transform[i][j];
    BigInt d = j < snf.rank() ? snf.diagonal[j] : BigInt(0);
    if (d == 1) continue;
    bool separates = d == 0 ? y != 0 : BigInt(y % d) != 0;
    if (!separates) continue;
    Certificate c;
    c.verdict = Verdict::non_member;
    c.tier = Tier::abelian;
    for (std::size_t i = 0; i < rank; ++i) c.functional.push_back(snf.column_transform[i][j]);
    c.modulus = d;
    return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------------------
// contraction tier

std::optional<Certificate> contraction_nonmember(const MetricGraph& x, const std::vector<DartPath>& relator_loops,
                                                 const DartPath& target) {
  const auto& g = x.graph();
  if (!is_closed_path(x, target)) throw InputError("contraction target is not a closed loop");
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> contracted(g.edge_count(), false);
  for (const auto& loop : relator_loops)
    for (const auto& d : loop) {
      const auto& e = g.edges().at(d.generator);
      contracted[e.id] = true;
      parent[find(e.from)] = find(e.to);
    }

  // spanning tree of K by BFS over surviving edges in id order
  std::vector<std::vector<Dart>> inc(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (contracted[e.id]) continue;
    inc[find(e.from)].push_back(Dart{static_cast<std::uint32_t>(e.id), false});
    inc[find(e.to)].push_back(Dart{static_cast<std::uint32_t>(e.id), true});
  }
  std::vector<bool> tree(g.edge_count(), false), seen(g.vertex_count(), false);
  std::deque<std::size_t> q{find(0)};
  seen[find(0)] = true;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (const auto& d : inc[u]) {
      const auto& e = g.edges()[d.generator];
      auto v = find(d.inverse ? e.from : e.to);
      if (seen[v]) continue;
      seen[v] = true;
      tree[e.id] = true;
      q.push_back(v);
    }
  }
  std::map<std::size_t, std::uint32_t> gen_of;
  for (const auto& e : g.edges())
    if (!contracted[e.id] && !tree[e.id]) gen_of.emplace(e.id, static_cast<std::uint32_t>(gen_of.size()));

  FreeWord image;
  for (const auto& d : target)
    if (auto it = gen_of.find(d.generator); it != gen_of.end()) image.push_back(Letter{it->second, d.inverse});
  image = cyclic_reduce(image);
  if (image.empty()) return std::nullopt;

  Certificate c;
  c.verdict = Verdict::non_member;
  c.tier = Tier::contraction;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (contracted[e]) c.contracted_edges.push_back(e);
  c.contracted_image = std::move(image);
  return c;
}

// ---------------------------------------------------------------------------------------
// coset enumeration tier

namespace {

std::vector<FreeWord> renumber(const std::vector<FreeWord>& words, const std::vector<std::uint32_t>& surviving) {
  std::map<std::uint32_t, std::uint32_t> idx;
  for (std::uint32_t i = 0; i < surviving.size(); ++i) idx[surviving[i]] = i;
  std::vector<FreeWord> out;
  for (const auto& w : words) {
    FreeWord r;
    for (const auto& l : w) r.push_back(Letter{idx.at(l.generator), l.inverse});
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Certificate coset_membership(const std::vector<FreeWord>& relators, const FreeWord& target, std::size_t rank,
                             std::size_t cap) {
  if (cap == 0) throw InputError("coset budget must be positive");
  Certificate c;
  c.tier = Tier::coset_enumeration;
  TietzeResult tz = tietze_eliminate(rank, relators);
  c.eliminations = tz.steps;
  c.reduced_target = substitute(target, tz.images);

  if (tz.relators.empty()) {
    c.mode = CosetMode::free_quotient;
    c.verdict = c.reduced_target.empty() ? Verdict::member : Verdict::non_member;
    c.table_size = tz.surviving.empty() ? 1 : 0;
    return c;
  }
  const auto rels = renumber(tz.relators, tz.surviving);
  const FreeWord t = renumber({c.reduced_target}, tz.surviving).front();
  EnumerationResult en = enumerate_cosets(tz.surviving.size(), rels, cap, t);
  if (en.target_collapsed) {
    c.verdict = Verdict::member;
    c.mode = CosetMode::collapse;
    c.trace = std::move(en.trace);
    c.table_size = en.cosets_defined;
    return c;
  }
  if (en.complete) {
    c.mode = CosetMode::complete_table;
    c.table_size = en.table.size();
    auto end = en.table.trace(0, t);
    if (end && *end == 0) {
      c.verdict = Verdict::member;
      c.trace = std::move(en.trace);
    } else {
      c.verdict = Verdict::non_member;
      c.table = std::move(en.table);
    }
    return c;
  }
  c.verdict = Verdict::undecided;
  c.note = "coset table cap of " + std::to_string(cap) + " reached after " + std::to_string(tz.steps.size()) +
           " Tietze eliminations (" + std::to_string(tz.relators.size()) + " relators left on " +
           std::to_string(tz.surviving.size()) + " generators)";
  return c;
}

// ---------------------------------------------------------------------------------------

MembershipQuery graph_query(const MetricGraph& x, const std::vector<DartPath>& relator_loops,
                            const DartPath& target_loop) {
  MembershipQuery q;
  q.rank = x.rank();
  q.graph = &x;
  q.relator_loops = relator_loops;
  q.target_loop = target_loop;
  for (const auto& l : relator_loops) q.relators.push_back(loop_to_free_word(x, l));
  q.target = loop_to_free_word(x, target_loop);
  return q;
}

Certificate decide_membership(const MembershipQuery& query, const OracleBudgets& budgets) {
  if (auto c = syntactic_member(query.relators, query.target, budgets)) return *c;
  if (auto c = abelian_nonmember(query.relators, query.target, query.rank)) return *c;
  if (query.graph)
    if (auto c = contraction_nonmember(*query.graph, query.relator_loops, query.target_loop)) return *c;
  return coset_membership(query.relators, query.target, query.rank, budgets.coset_cap);
}

}  // namespace covspec
