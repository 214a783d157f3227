#include "covspec/fingroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "covspec/error.hpp"

namespace covspec {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InputError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& g) const {
  if (g.degree() != degree()) throw InputError("permutation degree mismatch");
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = g.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

FiniteGroup FiniteGroup::closure(std::vector<Permutation> generators, std::size_t cap,
                                 std::size_t degree_if_empty) {
  FiniteGroup g;
  g.degree_ = generators.empty() ? degree_if_empty : generators.front().degree();
  for (const auto& s : generators)
    if (s.degree() != g.degree_) throw InputError("generators do not share one degree");
  g.generators_ = std::move(generators);

  g.elements_.push_back(Permutation::identity(g.degree_));
  g.index_.emplace(g.elements_.front(), 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : g.generators_) {
      Permutation p = g.elements_[i] * s;
      if (g.index_.contains(p)) continue;
      if (g.elements_.size() >= cap)
        throw CapExceeded("group closure exceeds element cap " + std::to_string(cap));
      g.index_.emplace(p, g.elements_.size());
      g.elements_.push_back(std::move(p));
    }
  }

  const std::size_t n = g.elements_.size();
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverse_[i] = g.index_.at(g.elements_[i].inverse());

  // conjugation-orbit flood fill under the generators
  std::vector<std::size_t> gen_idx;
  for (const auto& s : g.generators_) gen_idx.push_back(g.index_.at(s));
  g.class_of_.assign(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (g.class_of_[start] != n) continue;
    const std::size_t c = g.classes_.size();
    std::vector<std::size_t> members{start};
    g.class_of_[start] = c;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (auto s : gen_idx) {
        std::size_t y = g.conjugate(members[k], s);
        if (g.class_of_[y] == n) {
          g.class_of_[y] = c;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    g.classes_.push_back(std::move(members));
  }
  return g;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::require_index(const Permutation& p) const {
  auto i = index_of(p);
  if (!i) throw InputError("permutation [" + p.str() + "] is not an element of the group");
  return *i;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return inverse_[a]; }

std::size_t FiniteGroup::conjugate(std::size_t a, std::size_t by) const {
  return index_.at(elements_[inverse_[by]] * elements_[a] * elements_[by]);
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<std::size_t> members)
    : parent_(&parent), members_(std::move(members)), mask_(parent.order(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= parent.order()) throw InputError("subgroup member index out of range");
    mask_[m] = true;
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](std::size_t m) { return other.contains(m); });
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const std::size_t> elements) {
  for (auto e : elements)
    if (e >= g.order()) throw InputError("element index not in group");
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (auto s : elements) {
      std::size_t y = g.multiply(members[k], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return Subgroup(g, std::move(members));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Permutation> elements) {
  std::vector<std::size_t> idx;
  for (const auto& p : elements) idx.push_back(g.require_index(p));
  return subgroup_generated(g, idx);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup stabilizer(const FiniteGroup& g, std::size_t point) {
  if (point >= g.degree() && g.order() > 1) throw InputError("stabilizer point out of range");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (point >= g.degree() || g.element(i)[point] == point) members.push_back(i);
  return Subgroup(g, std::move(members));
}

Subgroup conjugate_subgroup(const Subgroup& h, std::size_t by) {
  const auto& g = h.parent();
  std::vector<std::size_t> members;
  for (auto m : h.members()) members.push_back(g.multiply(g.multiply(by, m), g.inverse(by)));
  return Subgroup(g, std::move(members));
}

GassmannReport is_gassmann_sunada(const Subgroup& h1, const Subgroup& h2) {
  const auto& g = h1.parent();
  if (&g != &h2.parent()) throw InputError("subgroups of different groups");
  GassmannReport r;
  r.holds = true;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    ClassCount cc{c, g.classes()[c].size(), 0, 0};
    for (auto e : g.classes()[c]) {
      cc.in_first += h1.contains(e);
      cc.in_second += h2.contains(e);
    }
    if (cc.in_first != cc.in_second) r.holds = false;
    r.table.push_back(cc);
  }
  return r;
}

std::vector<std::size_t> stable_subset(const FiniteGroup& g, std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    if (mask >> c & 1) out.insert(out.end(), g.classes()[c].begin(), g.classes()[c].end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// For every stable subset mask, an id of the subgroup <H n S>; equal ids <=> equal subgroups.
std::vector<std::size_t> generated_pattern(const Subgroup& h, std::size_t classes, std::size_t& distinct) {
  const auto& g = h.parent();
  std::vector<std::vector<std::size_t>> per_class(classes);
  for (auto m : h.members()) per_class[g.class_of(m)].push_back(m);

  std::map<std::vector<std::size_t>, std::size_t> ids;
  // memo by the set H n S itself: masks that select the same H-elements give the same subgroup
  std::map<std::vector<std::size_t>, std::size_t> by_intersection;
  const std::uint64_t total = std::uint64_t{1} << classes;
  std::vector<std::size_t> pattern(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::size_t> inter;
    for (std::size_t c = 0; c < classes; ++c)
      if (mask >> c & 1) inter.insert(inter.end(), per_class[c].begin(), per_class[c].end());
    std::sort(inter.begin(), inter.end());
    auto hit = by_intersection.find(inter);
    if (hit != by_intersection.end()) {
      pattern[mask] = hit->second;
      continue;
    }
    Subgroup gen = subgroup_generated(g, inter);
    auto [it, fresh] = ids.emplace(gen.members(), ids.size());
    (void)fresh;
    by_intersection.emplace(std::move(inter), it->second);
    pattern[mask] = it->second;
  }
  distinct = ids.size();
  return pattern;
}

}  // namespace

JumpEquivalenceReport is_jump_equivalent(const Subgroup& h1, const Subgroup& h2, std::size_t max_classes) {
  const auto& g = h1.parent();
  if (&g != &h2.parent()) throw InputError("subgroups of different groups");
  const std::size_t c = g.classes().size();
  if (c > max_classes || c > 62)
    throw CapExceeded("class count " + std::to_string(c) + " exceeds jump-equivalence cap");
  JumpEquivalenceReport r;
  r.stable_subsets = std::size_t{1} << c;
  auto p1 = generated_pattern(h1, c, r.distinct_first);
  auto p2 = generated_pattern(h2, c, r.distinct_second);

  // The equality patterns agree iff id1 <-> id2 is a well-defined bijection on masks.
  std::unordered_map<std::size_t, std::uint64_t> first_seen1, first_seen2;
  r.holds = true;
  for (std::uint64_t mask = 0; mask < r.stable_subsets; ++mask) {
    auto [a, fa] = first_seen1.emplace(p1[mask], mask);
    auto [b, fb] = first_seen2.emplace(p2[mask], mask);
    (void)fa;
    (void)fb;
    // mask shares its H1-subgroup with a->second; that mask must share the H2-subgroup too
    if (p2[a->second] != p2[mask]) {
      r.holds = false;
      r.witness = std::make_pair(a->second, mask);
      break;
    }
    if (p1[b->second] != p1[mask]) {
      r.holds = false;
      r.witness = std::make_pair(b->second, mask);
      break;
    }
  }
  return r;
}

}  // namespace covspec
