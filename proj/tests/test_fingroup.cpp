#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "covspec/error.hpp"
#include "covspec/fano.hpp"
#include "covspec/fingroup.hpp"

using namespace covspec;

namespace {

Permutation perm(std::vector<std::uint32_t> v) { return Permutation(std::move(v)); }

// brute-force closure straight on permutations, no indices
std::set<Permutation> closure_oracle(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Permutation p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation q = p * g;
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen;
}

// class sizes by direct conjugation of permutations
std::map<Permutation, std::size_t> class_representative(const std::vector<Permutation>& elements) {
  std::map<Permutation, std::size_t> rep;
  std::size_t next = 0;
  for (const auto& x : elements) {
    if (rep.count(x)) continue;
    for (const auto& g : elements) rep.emplace(g.inverse() * x * g, next);
    ++next;
  }
  return rep;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p = perm({1, 2, 0});
  CHECK(p.order() == 3);
  CHECK((p * p * p).is_identity());
  CHECK(p.inverse() == perm({2, 0, 1}));
  CHECK(p.str() == "1 2 0");
  // right action: x.(p q) = (x.p).q
  Permutation q = perm({1, 0, 2});
  for (std::uint32_t x = 0; x < 3; ++x) CHECK((p * q)[x] == q[p[x]]);
  CHECK_THROWS_AS(perm({0, 0, 1}), InputError);
  CHECK_THROWS_AS(perm({0, 3, 1}), InputError);
}

TEST_CASE("closure of small groups") {
  auto s3 = FiniteGroup::closure({perm({1, 0, 2}), perm({1, 2, 0})});
  CHECK(s3.order() == 6);
  CHECK(s3.classes().size() == 3);
  CHECK(s3.element(0).is_identity());

  auto c5 = FiniteGroup::closure({perm({1, 2, 3, 4, 0})});
  CHECK(c5.order() == 5);
  CHECK(c5.classes().size() == 5);

  auto trivial = FiniteGroup::closure({}, FiniteGroup::kDefaultCap, 4);
  CHECK(trivial.order() == 1);
  CHECK(FiniteGroup::closure({}).degree() == 0);
  CHECK_THROWS_AS(FiniteGroup::closure({perm({1, 0}), perm({1, 2, 0})}), InputError);
  CHECK_THROWS_AS(FiniteGroup::closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, 10), CapExceeded);
}

TEST_CASE("closure agrees with a brute-force oracle") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 3 + trial % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::uint32_t> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(i);
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(perm(v));
    }
    auto g = FiniteGroup::closure(gens);
    auto oracle = closure_oracle(gens, n);
    CHECK(g.order() == oracle.size());
    for (const auto& e : g.elements()) CHECK(oracle.count(e) == 1);
    // classes partition G and match direct conjugation
    auto rep = class_representative(g.elements());
    std::size_t total = 0;
    for (const auto& c : g.classes()) {
      total += c.size();
      for (auto x : c) CHECK(rep.at(g.element(x)) == rep.at(g.element(c.front())));
    }
    CHECK(total == g.order());
    std::set<std::size_t> reps;
    for (auto& [p, r] : rep) reps.insert(r);
    CHECK(reps.size() == g.classes().size());
  }
}

TEST_CASE("group operations are consistent") {
  auto s4 = FiniteGroup::closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  REQUIRE(s4.order() == 24);
  CHECK(s4.classes().size() == 5);
  for (std::size_t a = 0; a < s4.order(); ++a) {
    CHECK(s4.multiply(a, s4.inverse(a)) == 0);
    for (std::size_t b = 0; b < s4.order(); b += 5) {
      CHECK(s4.element(s4.multiply(a, b)) == s4.element(a) * s4.element(b));
      CHECK(s4.element(s4.conjugate(a, b)) == s4.element(b).inverse() * s4.element(a) * s4.element(b));
      CHECK(s4.class_of(s4.conjugate(a, b)) == s4.class_of(a));
    }
  }
  CHECK_THROWS_AS(s4.require_index(perm({1, 0, 2, 3, 4})), InputError);
}

TEST_CASE("subgroups and stabilizers") {
  auto s4 = FiniteGroup::closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  auto st = stabilizer(s4, 3);
  CHECK(st.order() == 6);
  for (auto x : st.members()) CHECK(s4.element(x)[3] == 3);
  std::vector<Permutation> v4 = {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})};
  auto k = subgroup_generated(s4, std::span<const Permutation>(v4));
  CHECK(k.order() == 4);
  CHECK(trivial_subgroup(s4).order() == 1);
  CHECK(whole_group(s4).order() == 24);
  CHECK(k.is_subset_of(whole_group(s4)));
  CHECK_FALSE(st.is_subset_of(k));
  for (std::size_t g = 0; g < s4.order(); ++g) CHECK(conjugate_subgroup(k, g) == k);  // V4 is normal
  bool moved = false;
  for (std::size_t g = 0; g < s4.order(); ++g) moved |= !(conjugate_subgroup(st, g) == st);
  CHECK(moved);
  std::vector<Permutation> outside = {perm({1, 0, 2, 3, 4})};
  CHECK_THROWS_AS(subgroup_generated(s4, std::span<const Permutation>(outside)), InputError);
}

TEST_CASE("Fano actions") {
  auto f = fano_actions();
  CHECK(f.group.order() == 168);
  CHECK(f.group.classes().size() == 6);
  CHECK(f.group.degree() == 14);
  CHECK(fano_vertex("100") == 3);
  CHECK(fano_vertex("001") == 0);
  CHECK_THROWS_AS(fano_vertex("000"), InputError);

  // points: v -> v M computed by hand from the rows of A and B
  auto by_hand = [](std::uint8_t v, const std::array<std::uint8_t, 3>& rows) {
    std::uint8_t out = 0;
    for (int r = 0; r < 3; ++r)
      if (v >> (2 - r) & 1) out ^= rows[r];
    return out;
  };
  for (std::uint8_t v = 1; v < 8; ++v) {
    CHECK(f.a[v - 1u] == by_hand(v, {0b110, 0b001, 0b010}) - 1u);
    CHECK(f.b[v - 1u] == by_hand(v, {0b010, 0b001, 0b100}) - 1u);
  }
  CHECK(f.on_points(f.a).order() == 4);
  CHECK(f.on_points(f.b).order() == 3);

  // incidence is preserved by every element: p on w iff p.g on w.g
  for (const auto& g : f.group.elements())
    for (std::uint8_t p = 1; p < 8; ++p)
      for (std::uint8_t w = 1; w < 8; ++w)
        CHECK(gf2_dot(p, w) == gf2_dot(static_cast<std::uint8_t>(g[p - 1u] + 1),
                                       static_cast<std::uint8_t>(g[7u + w - 1u] - 6)));

  // transitive on each block, faithful on the points
  for (std::size_t blk : {0u, 7u}) {
    std::set<std::uint32_t> orbit;
    for (const auto& g : f.group.elements()) orbit.insert(g[blk]);
    CHECK(orbit.size() == 7);
  }
  std::set<Permutation> restricted;
  for (const auto& g : f.group.elements()) restricted.insert(f.on_points(g));
  CHECK(restricted.size() == 168);
}

TEST_CASE("GF2 matrices") {
  auto a = fano_matrix_a();
  CHECK(a == GF2Matrix::parse("110 001 010"));
  CHECK(a.determinant());
  CHECK(a * a.inverse() == GF2Matrix::parse("100 010 001"));
  CHECK(fano_matrix_b().transpose() * fano_matrix_b() == GF2Matrix::parse("100 010 001"));
  CHECK_THROWS_AS(GF2Matrix::parse("110 110 001").inverse(), InputError);
  CHECK(bit_label(4) == "100");
}

TEST_CASE("the Fano pair is Gassmann-Sunada and jump equivalent") {
  auto f = fano_actions();
  const auto& g = f.group;
  auto h1 = stabilizer(g, f.points.offset + fano_vertex("100"));
  auto h2 = stabilizer(g, f.lines.offset + fano_vertex("100"));
  CHECK(h1.order() == 24);
  CHECK(h2.order() == 24);
  CHECK_FALSE(h1 == h2);

  // not conjugate
  bool conj = false;
  for (std::size_t x = 0; x < g.order(); ++x) conj |= conjugate_subgroup(h1, x) == h2;
  CHECK_FALSE(conj);

  auto gs = is_gassmann_sunada(h1, h2);
  CHECK(gs.holds);
  CHECK(gs.table.size() == 6);
  // independent count: conjugacy via direct permutation arithmetic
  auto rep = class_representative(g.elements());
  std::map<std::size_t, int> count;
  for (auto x : h1.members()) ++count[rep.at(g.element(x))];
  for (auto x : h2.members()) --count[rep.at(g.element(x))];
  for (auto& [c, d] : count) CHECK(d == 0);

  auto je = is_jump_equivalent(h1, h2);
  CHECK(je.holds);
  CHECK(je.stable_subsets == 64);
  CHECK(je.distinct_first == je.distinct_second);
  CHECK_FALSE(je.witness.has_value());
}

TEST_CASE("jump equivalence matches brute force on every stable subset") {
  auto f = fano_actions();
  const auto& g = f.group;
  auto h1 = stabilizer(g, f.points.offset + fano_vertex("100"));
  auto h2 = stabilizer(g, f.lines.offset + fano_vertex("100"));
  // <H n S> per mask computed by permutation closure, then the equality patterns compared
  auto generated = [&](const Subgroup& h, std::uint64_t mask) {
    auto s = stable_subset(g, mask);
    std::vector<Permutation> gens;
    for (auto x : s)
      if (h.contains(x)) gens.push_back(g.element(x));
    return closure_oracle(gens, g.degree());
  };
  std::vector<std::set<Permutation>> a, b;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    a.push_back(generated(h1, mask));
    b.push_back(generated(h2, mask));
  }
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j) CHECK((a[i] == a[j]) == (b[i] == b[j]));
}

TEST_CASE("Gassmann-Sunada fails for non-equivalent subgroups") {
  auto s4 = FiniteGroup::closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  std::vector<Permutation> g1 = {perm({1, 0, 3, 2})}, g2 = {perm({1, 0, 2, 3})};
  auto h1 = subgroup_generated(s4, std::span<const Permutation>(g1));
  auto h2 = subgroup_generated(s4, std::span<const Permutation>(g2));
  auto gs = is_gassmann_sunada(h1, h2);
  CHECK_FALSE(gs.holds);
  auto je = is_jump_equivalent(h1, h2);
  CHECK_FALSE(je.holds);
  CHECK(je.witness.has_value());
  // conjugate subgroups are always both
  auto h3 = conjugate_subgroup(h2, 5);
  CHECK(is_gassmann_sunada(h2, h3).holds);
  CHECK(is_jump_equivalent(h2, h3).holds);
}

TEST_CASE("stable subsets are conjugation closed and monotone") {
  auto f = fano_actions();
  const auto& g = f.group;
  for (std::uint64_t mask = 0; mask < 64; mask += 7) {
    auto s = stable_subset(g, mask);
    std::sort(s.begin(), s.end());
    std::set<std::size_t> set(s.begin(), s.end());
    for (auto x : s)
      for (std::size_t y = 0; y < g.order(); y += 11) CHECK(set.count(g.conjugate(x, y)) == 1);
    auto bigger = stable_subset(g, mask | 1);
    std::sort(bigger.begin(), bigger.end());
    CHECK(std::includes(bigger.begin(), bigger.end(), s.begin(), s.end()));
  }
}
