#include "covspec/coset.hpp"

#include <limits>

#include "covspec/error.hpp"

namespace covspec {

FreeWord solve_for(const FreeWord& relator, std::uint32_t generator) {
  std::size_t pos = relator.size();
  for (std::size_t i = 0; i < relator.size(); ++i)
    if (relator[i].generator == generator) {
      if (pos != relator.size()) throw InputError("generator occurs more than once");
      pos = i;
    }
  if (pos == relator.size()) throw InputError("generator does not occur in relator");
  FreeWord u(relator.begin(), relator.begin() + static_cast<std::ptrdiff_t>(pos));
  FreeWord v(relator.begin() + static_cast<std::ptrdiff_t>(pos) + 1, relator.end());
  // u x v = 1  =>  x = u^-1 v^-1 ;  u x^-1 v = 1  =>  x = v u
  return relator[pos].inverse ? multiply(v, u) : multiply(inverse(u), inverse(v));
}

TietzeResult tietze_eliminate(std::size_t rank, const std::vector<FreeWord>& relators) {
  TietzeResult res;
  for (std::uint32_t g = 0; g < rank; ++g) res.images.push_back(FreeWord{Letter{g, false}});
  for (const auto& r : relators) {
    auto c = cyclic_reduce(r);
    if (!c.empty()) res.relators.push_back(std::move(c));
  }
  std::vector<bool> alive(rank, true);

  for (;;) {
    std::optional<std::pair<std::size_t, std::uint32_t>> pick;
    for (std::size_t i = 0; i < res.relators.size(); ++i) {
      if (pick && res.relators[i].size() >= res.relators[pick->first].size()) continue;
      std::vector<std::size_t> count(rank, 0);
      for (const auto& l : res.relators[i]) ++count[l.generator];
      for (std::uint32_t g = 0; g < rank; ++g)
        if (count[g] == 1) {
          pick = {i, g};
          break;
        }
    }
    if (!pick) break;
    const auto [ri, x] = *pick;
    TietzeStep step{x, res.relators[ri], solve_for(res.relators[ri], x)};
    std::vector<FreeWord> sub;
    for (std::uint32_t g = 0; g < rank; ++g) sub.push_back(FreeWord{Letter{g, false}});
    sub[x] = step.replacement;
    for (auto& img : res.images) img = substitute(img, sub);
    std::vector<FreeWord> next;
    for (const auto& r : res.relators) {
      auto c = cyclic_reduce(substitute(r, sub));
      if (!c.empty()) next.push_back(std::move(c));
    }
    res.relators = std::move(next);
    alive[x] = false;
    res.steps.push_back(std::move(step));
  }
  for (std::uint32_t g = 0; g < rank; ++g)
    if (alive[g]) res.surviving.push_back(g);
  return res;
}

std::optional<std::size_t> CosetTable::trace(std::size_t start, const FreeWord& w) const {
  std::size_t c = start;
  for (const auto& l : w) {
    auto next = rows[c][column(l)];
    if (next < 0) return std::nullopt;
    c = static_cast<std::size_t>(next);
  }
  return c;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t rank, const std::vector<FreeWord>& relators, std::size_t cap)
      : cols_(2 * rank), relators_(relators), cap_(cap) {
    for (const auto& r : relators_)
      for (const auto& l : r)
        if (l.generator >= rank) throw InputError("relator uses a generator outside rank");
    new_coset();
  }

  bool full() const { return defined_ >= cap_; }
  std::size_t defined() const { return defined_; }
  std::size_t size() const { return table_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  void scan_and_fill(std::size_t c, const FreeWord& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[i]) >= 0) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && entry(b, w[j].inverted()) >= 0) b = static_cast<std::size_t>(entry(b, w[j--].inverted()));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        return;
      }
      if (full()) return;
      define(f, w[i]);
    }
  }

  void fill(std::size_t c, std::size_t col) {
    if (table_[c][col] >= 0 || full()) return;
    define(c, Letter{static_cast<std::uint32_t>(col / 2), (col % 2) == 1});
  }

  bool row_complete(std::size_t c) const {
    for (auto v : table_[c])
      if (v < 0) return false;
    return true;
  }

  std::optional<std::size_t> trace(std::size_t start, const FreeWord& w) const {
    std::size_t c = start;
    for (const auto& l : w) {
      auto n = entry(c, l);
      if (n < 0) return std::nullopt;
      c = static_cast<std::size_t>(n);
    }
    return c;
  }

  CosetTable compact() const {
    std::vector<std::int64_t> renum(table_.size(), -1);
    std::size_t n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) renum[c] = static_cast<std::int64_t>(n++);
    CosetTable t;
    t.rank = cols_ / 2;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      std::vector<std::int64_t> row(cols_);
      for (std::size_t x = 0; x < cols_; ++x) row[x] = renum[static_cast<std::size_t>(table_[c][x])];
      t.rows.push_back(std::move(row));
    }
    return t;
  }

 private:
  std::int64_t entry(std::size_t c, Letter l) const { return table_[c][column(l)]; }

  void set(std::size_t c, Letter l, std::size_t d) {
    table_[c][column(l)] = static_cast<std::int64_t>(d);
    table_[d][column(l.inverted())] = static_cast<std::int64_t>(c);
  }

  std::size_t new_coset() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(table_.size() - 1);
    ++defined_;
    return table_.size() - 1;
  }

  void define(std::size_t c, Letter l) { set(c, l, new_coset()); }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      auto next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    auto a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t g = queue[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        if (table_[g][x] < 0) continue;
        const auto d = static_cast<std::size_t>(table_[g][x]);
        const std::size_t xi = x ^ 1;
        table_[d][xi] = -1;
        const std::size_t mu = rep(g), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, static_cast<std::size_t>(table_[mu][x]), queue);
        } else if (table_[nu][xi] >= 0) {
          merge(mu, static_cast<std::size_t>(table_[nu][xi]), queue);
        } else {
          table_[mu][x] = static_cast<std::int64_t>(nu);
          table_[nu][xi] = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  std::size_t cols_;
  const std::vector<FreeWord>& relators_;
  std::size_t cap_;
  std::size_t defined_ = 0;
  std::vector<std::vector<std::int64_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

EnumerationResult enumerate_cosets(std::size_t rank, const std::vector<FreeWord>& relators, std::size_t cap,
                                   const std::optional<FreeWord>& target) {
  if (cap == 0) throw InputError("coset table cap must be positive");
  std::vector<FreeWord> rels;
  for (const auto& r : relators) rels.push_back(reduce(r));
  Enumerator en(rank, rels, cap);
  EnumerationResult res;
  auto collapsed = [&] {
    if (!target) return false;
    auto end = en.trace(0, *target);
    return end && *end == 0;
  };
  if (collapsed()) {
    res.target_collapsed = true;
    res.cosets_defined = en.defined();
    return res;
  }
  for (std::size_t c = 0; c < en.size(); ++c) {
    for (std::size_t r = 0; r < rels.size() && en.alive(c); ++r) {
      en.scan_and_fill(c, rels[r]);
      res.trace.push_back(TraceEvent{TraceOp::scan, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r)});
      if (collapsed()) {
        res.target_collapsed = true;
        res.cosets_defined = en.defined();
        return res;
      }
      if (en.full()) break;
    }
    if (en.full()) break;
    for (std::size_t x = 0; x < 2 * rank && en.alive(c); ++x) {
      en.fill(c, x);
      res.trace.push_back(TraceEvent{TraceOp::fill, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(x)});
    }
    if (en.full() && c + 1 < en.size()) break;
  }
  res.cosets_defined = en.defined();
  // Hitting the cap can still leave a finished table, so completeness is checked directly.
  bool complete = true;
  for (std::size_t c = 0; c < en.size() && complete; ++c) {
    if (!en.alive(c)) continue;
    if (!en.row_complete(c)) complete = false;
    for (std::size_t r = 0; r < rels.size() && complete; ++r) {
      auto end = en.trace(c, rels[r]);
      if (!end || *end != c) complete = false;
    }
  }
  if (complete) {
    res.complete = true;
    res.table = en.compact();
  }
  return res;
}

}  // namespace covspec
