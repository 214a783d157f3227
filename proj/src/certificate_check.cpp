// Independent re-validation of membership certificates. Nothing here calls the tier code;
// only the free-group primitives are shared.
#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "covspec/error.hpp"
#include "covspec/membership.hpp"

namespace covspec {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool check_syntactic(const MembershipQuery& q, const Certificate& c, std::string* why) {
  FreeWord product;
  for (const auto& f : c.factors) {
    if (f.relator >= q.relators.size()) return fail(why, "factor names a missing relator");
    product = multiply(product, multiply(multiply(f.conjugator, power(q.relators[f.relator], f.exponent)),
                                         inverse(f.conjugator)));
  }
  if (product != reduce(q.target)) return fail(why, "factor product differs from the target");
  return true;
}

bool check_abelian(const MembershipQuery& q, const Certificate& c, std::string* why) {
  if (c.functional.size() != q.rank) return fail(why, "functional has the wrong length");
  if (c.modulus < 0 || c.modulus == 1) return fail(why, "modulus must be 0 or at least 2");
  auto vanishes = [&](const BigInt& v) { return c.modulus == 0 ? v == 0 : BigInt(v % c.modulus) == 0; };
  for (const auto& r : q.relators)
    if (!vanishes(dot(exponent_sums(r, q.rank), c.functional))) return fail(why, "a relator survives the functional");
  if (vanishes(dot(exponent_sums(q.target, q.rank), c.functional))) return fail(why, "target is killed too");
  return true;
}

// DFS spanning tree of X with the given edges collapsed; the image is read off the non-tree
// edges. Free homotopy triviality does not depend on which tree is used.
bool check_contraction(const MembershipQuery& q, const Certificate& c, std::string* why) {
  if (!q.graph) return fail(why, "contraction certificate without a graph");
  const MetricGraph& x = *q.graph;
  const auto& g = x.graph();
  if (q.relator_loops.size() != q.relators.size()) return fail(why, "relator loops missing");
  for (std::size_t i = 0; i < q.relators.size(); ++i)
    if (canonical_cyclic(loop_to_free_word(x, q.relator_loops[i])) != canonical_cyclic(cyclic_reduce(q.relators[i])))
      return fail(why, "relator loop does not match its word");
  if (canonical_cyclic(loop_to_free_word(x, q.target_loop)) != canonical_cyclic(cyclic_reduce(q.target)))
    return fail(why, "target loop does not match its word");

  std::set<std::size_t> collapsed(c.contracted_edges.begin(), c.contracted_edges.end());
  for (auto e : collapsed)
    if (e >= g.edge_count()) return fail(why, "contracted edge out of range");
  for (const auto& loop : q.relator_loops)
    for (const auto& d : loop)
      if (!collapsed.count(d.generator)) return fail(why, "a relator edge is not contracted");

  std::vector<std::size_t> label(g.vertex_count());
  std::iota(label.begin(), label.end(), 0);
  // relabel to component minima until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (auto id : collapsed) {
      const auto& e = g.edges()[id];
      auto m = std::min(label[e.from], label[e.to]);
      if (label[e.from] != m || label[e.to] != m) {
        label[e.from] = label[e.to] = m;
        changed = true;
      }
    }
  }
  std::vector<bool> tree(g.edge_count(), false), seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{label[0]};
  seen[label[0]] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t id = g.edge_count(); id-- > 0;) {
      if (collapsed.count(id)) continue;
      const auto& e = g.edges()[id];
      std::size_t a = label[e.from], b = label[e.to];
      std::size_t other = a == u ? b : (b == u ? a : g.vertex_count());
      if (other == g.vertex_count() || seen[other]) continue;
      seen[other] = true;
      tree[id] = true;
      stack.push_back(other);
    }
  }
  FreeWord image;
  for (const auto& d : q.target_loop)
    if (!collapsed.count(d.generator) && !tree[d.generator])
      image.push_back(Letter{d.generator, d.inverse});
  if (cyclic_reduce(image).empty()) return fail(why, "target dies in the contracted graph");
  return true;
}

// Replays HLT steps on a plain table. Coincidences are resolved by repeatedly merging
// classes whose rows disagree, then rebuilding rows on the class minima.
class Replay {
 public:
  Replay(std::size_t rank, std::vector<FreeWord> rels) : cols_(2 * rank), rels_(std::move(rels)) { add(); }

  bool live(std::size_t c) const { return c < rows_.size() && cls_[c] == c; }

  void scan(std::size_t c, const FreeWord& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[i]) >= 0) f = static_cast<std::size_t>(get(f, w[i++]));
      if (i > j) {
        if (f != c) identify(f, c);
        return;
      }
      while (j >= i && get(b, w[j].inverted()) >= 0) b = static_cast<std::size_t>(get(b, w[j--].inverted()));
      if (j < i) {
        identify(f, b);
        return;
      }
      if (i == j) {
        put(f, w[i], b);
        return;
      }
      put(f, w[i], add());
    }
  }

  void fill(std::size_t c, std::size_t col) {
    if (rows_[c][col] >= 0) return;
    put(c, Letter{static_cast<std::uint32_t>(col / 2), col % 2 == 1}, add());
  }

  std::optional<std::size_t> walk(std::size_t c, const FreeWord& w) const {
    for (const auto& l : w) {
      auto n = get(c, l);
      if (n < 0) return std::nullopt;
      c = static_cast<std::size_t>(n);
    }
    return c;
  }

  const std::vector<FreeWord>& relators() const { return rels_; }

 private:
  std::int64_t get(std::size_t c, Letter l) const { return rows_[c][column(l)]; }
  void put(std::size_t c, Letter l, std::size_t d) {
    rows_[c][column(l)] = static_cast<std::int64_t>(d);
    rows_[d][column(l) ^ 1] = static_cast<std::int64_t>(c);
  }
  std::size_t add() {
    rows_.emplace_back(cols_, -1);
    cls_.push_back(rows_.size() - 1);
    return rows_.size() - 1;
  }
  std::size_t root(std::size_t c) const {
    while (cls_[c] != c) c = cls_[c];
    return c;
  }

  void identify(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> pending{{a, b}};
    while (!pending.empty()) {
      auto [u, v] = pending.back();
      pending.pop_back();
      u = root(u);
      v = root(v);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      cls_[v] = u;
      // rows must agree column by column on the merged class
      for (std::size_t x = 0; x < cols_; ++x) {
        auto ev = rows_[v][x];
        if (ev < 0) continue;
        auto eu = rows_[u][x];
        if (eu < 0) rows_[u][x] = ev;
        else pending.push_back({static_cast<std::size_t>(eu), static_cast<std::size_t>(ev)});
      }
    }
    // rebuild: every live row points at class minima; dead rows are cleared
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (cls_[c] != c) {
        std::fill(rows_[c].begin(), rows_[c].end(), -1);
        continue;
      }
      for (auto& e : rows_[c])
        if (e >= 0) e = static_cast<std::int64_t>(root(static_cast<std::size_t>(e)));
    }
    for (std::size_t c = 0; c < cls_.size(); ++c) cls_[c] = root(c);
    for (std::size_t c = 0; c < rows_.size(); ++c)
      if (cls_[c] == c)
        for (std::size_t x = 0; x < cols_; ++x)
          if (rows_[c][x] >= 0) rows_[static_cast<std::size_t>(rows_[c][x])][x ^ 1] = static_cast<std::int64_t>(c);
  }

  std::size_t cols_;
  std::vector<FreeWord> rels_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> cls_;
};

bool check_coset(const MembershipQuery& q, const Certificate& c, std::string* why) {
  std::vector<FreeWord> cur;
  for (const auto& r : q.relators)
    if (auto w = cyclic_reduce(r); !w.empty()) cur.push_back(std::move(w));
  std::vector<FreeWord> images;
  std::vector<bool> alive(q.rank, true);
  for (std::uint32_t g = 0; g < q.rank; ++g) images.push_back({Letter{g, false}});

  for (const auto& st : c.eliminations) {
    if (st.generator >= q.rank || !alive[st.generator]) return fail(why, "elimination of a dead generator");
    if (std::find(cur.begin(), cur.end(), st.relator) == cur.end())
      return fail(why, "elimination uses a relator that is not present");
    if (std::count_if(st.relator.begin(), st.relator.end(),
                      [&](Letter l) { return l.generator == st.generator; }) != 1)
      return fail(why, "eliminated generator does not occur exactly once");
    if (std::any_of(st.replacement.begin(), st.replacement.end(),
                    [&](Letter l) { return l.generator == st.generator; }))
      return fail(why, "replacement still uses the generator");
    FreeWord rel = multiply(FreeWord{Letter{st.generator, false}}, inverse(st.replacement));
    if (canonical_cyclic(cyclic_reduce(rel)) != canonical_cyclic(st.relator))
      return fail(why, "replacement is not a consequence of the relator");
    std::vector<FreeWord> sub;
    for (std::uint32_t g = 0; g < q.rank; ++g) sub.push_back({Letter{g, false}});
    sub[st.generator] = st.replacement;
    for (auto& img : images) img = substitute(img, sub);
    std::vector<FreeWord> next;
    for (const auto& r : cur)
      if (auto w = cyclic_reduce(substitute(r, sub)); !w.empty()) next.push_back(std::move(w));
    cur = std::move(next);
    alive[st.generator] = false;
  }
  const FreeWord image = substitute(q.target, images);
  if (image != c.reduced_target) return fail(why, "reduced target does not match the eliminations");

  if (c.mode == CosetMode::free_quotient) {
    if (!cur.empty()) return fail(why, "free quotient claimed with relators left");
    if ((c.verdict == Verdict::member) != image.empty()) return fail(why, "verdict contradicts the free image");
    return true;
  }

  std::map<std::uint32_t, std::uint32_t> idx;
  for (std::uint32_t g = 0; g < q.rank; ++g)
    if (alive[g]) idx.emplace(g, static_cast<std::uint32_t>(idx.size()));
  auto relabel = [&](const FreeWord& w) {
    FreeWord out;
    for (const auto& l : w) out.push_back(Letter{idx.at(l.generator), l.inverse});
    return out;
  };
  std::vector<FreeWord> rels;
  for (const auto& r : cur) rels.push_back(relabel(r));
  const FreeWord t = relabel(image);
  const std::size_t rank = idx.size();

  if (c.verdict == Verdict::non_member) {
    if (c.mode != CosetMode::complete_table) return fail(why, "non-member needs a complete table");
    const auto& tab = c.table;
    if (tab.rank != rank || tab.rows.empty()) return fail(why, "table shape mismatch");
    const auto n = static_cast<std::int64_t>(tab.rows.size());
    for (std::size_t r = 0; r < tab.rows.size(); ++r) {
      if (tab.rows[r].size() != 2 * rank) return fail(why, "table row width mismatch");
      for (std::size_t x = 0; x < 2 * rank; ++x) {
        auto e = tab.rows[r][x];
        if (e < 0 || e >= n) return fail(why, "table entry undefined or out of range");
        if (tab.rows[static_cast<std::size_t>(e)][x ^ 1] != static_cast<std::int64_t>(r))
          return fail(why, "table is not a permutation representation");
      }
    }
    for (const auto& r : rels)
      for (std::size_t k = 0; k < tab.rows.size(); ++k)
        if (tab.trace(k, r) != k) return fail(why, "a relator moves a coset");
    if (tab.trace(0, t) == std::size_t{0}) return fail(why, "target fixes coset 0");
    return true;
  }

  Replay rp(rank, rels);
  for (const auto& ev : c.trace) {
    if (!rp.live(ev.coset)) return fail(why, "trace refers to a dead or unknown coset");
    if (ev.op == TraceOp::scan) {
      if (ev.item >= rels.size()) return fail(why, "trace names a missing relator");
      rp.scan(ev.coset, rels[ev.item]);
    } else {
      if (ev.item >= 2 * rank) return fail(why, "trace names a missing column");
      rp.fill(ev.coset, ev.item);
    }
  }
  auto end = rp.walk(0, t);
  if (!end || *end != 0) return fail(why, "replayed deductions do not send the target to coset 0");
  return true;
}

}  // namespace

bool check_certificate(const MembershipQuery& query, const Certificate& cert, std::string* why) {
  try {
    switch (cert.verdict) {
      case Verdict::undecided: return fail(why, "undecided certificates carry no proof");
      case Verdict::member:
        if (cert.tier == Tier::syntactic) return check_syntactic(query, cert, why);
        if (cert.tier == Tier::coset_enumeration) return check_coset(query, cert, why);
        return fail(why, "tier cannot certify membership");
      case Verdict::non_member:
        if (cert.tier == Tier::abelian) return check_abelian(query, cert, why);
        if (cert.tier == Tier::contraction) return check_contraction(query, cert, why);
        if (cert.tier == Tier::coset_enumeration) return check_coset(query, cert, why);
        return fail(why, "tier cannot certify non-membership");
    }
  } catch (const std::exception& e) {
    return fail(why, std::string("malformed certificate: ") + e.what());
  }
  return false;
}

}  // namespace covspec
