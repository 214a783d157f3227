#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace covspec {

/// A bijection of {0, ..., degree-1}. Groups act on the right: x.(p*q) = (x.p).q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);  // throws InputError if not a bijection

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const { return images_; }

  /// Apply *this first, then g.
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::string str() const;  // image list "1 2 0"

  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A finite permutation group with its full element list and conjugacy classes.
/// Element 0 is the identity; elements are ordered breadth-first from the identity,
/// right-multiplying by generators in the given order.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  /// Throws InputError on degree mismatch, CapExceeded if the group is larger than cap.
  /// With no generators the trivial group on degree_if_empty points is returned.
  static FiniteGroup closure(std::vector<Permutation> generators, std::size_t cap = kDefaultCap,
                             std::size_t degree_if_empty = 0);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  std::size_t require_index(const Permutation& p) const;  // throws InputError if p is not in G

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t conjugate(std::size_t a, std::size_t by) const;  // by^-1 a by

  /// Classes ordered by their minimal element index; each class is sorted.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// A subgroup stored as sorted element indices of a parent group. The parent must outlive it.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<std::size_t> members);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(std::size_t element) const { return mask_[element]; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  const FiniteGroup* parent_;
  std::vector<std::size_t> members_;
  std::vector<bool> mask_;
};

/// Smallest subgroup of G containing the given element indices.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const std::size_t> elements);
/// Same, from permutations; throws InputError for a permutation outside G.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Permutation> elements);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// {g : point . g = point}
Subgroup stabilizer(const FiniteGroup& g, std::size_t point);

/// g h g^-1 as a subgroup.
Subgroup conjugate_subgroup(const Subgroup& h, std::size_t by);

struct ClassCount {
  std::size_t class_index;
  std::size_t class_size;
  std::size_t in_first;
  std::size_t in_second;
};

struct GassmannReport {
  bool holds = false;
  std::vector<ClassCount> table;
};

/// #(C n H1) == #(C n H2) for every conjugacy class C.
GassmannReport is_gassmann_sunada(const Subgroup& h1, const Subgroup& h2);

/// Conjugation-stable subsets are encoded as bitmasks over class indices.
struct JumpEquivalenceReport {
  bool holds = false;
  std::size_t stable_subsets = 0;
  std::size_t distinct_first = 0;   // distinct subgroups <H1 n S>
  std::size_t distinct_second = 0;  // distinct subgroups <H2 n S>
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

/// Exhaustive check over all 2^c unions of conjugacy classes. Throws CapExceeded if the
/// class count exceeds max_classes.
JumpEquivalenceReport is_jump_equivalent(const Subgroup& h1, const Subgroup& h2,
                                         std::size_t max_classes = 20);

/// Element indices of the union of the classes selected by mask.
std::vector<std::size_t> stable_subset(const FiniteGroup& g, std::uint64_t mask);

}  // namespace covspec
