#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "covspec/freeword.hpp"

namespace covspec {

/// One Tietze move: `relator` (as it stood) contains `generator` exactly once and was solved
/// for it, giving generator = replacement.
struct TietzeStep {
  std::uint32_t generator = 0;
  FreeWord relator;
  FreeWord replacement;
};

struct TietzeResult {
  std::vector<TietzeStep> steps;
  /// Image of each original generator in the surviving generators (original numbering).
  std::vector<FreeWord> images;
  std::vector<std::uint32_t> surviving;
  /// Cyclically reduced, nonempty leftover relators over the surviving generators.
  std::vector<FreeWord> relators;
};

/// Repeatedly solves the shortest relator that contains some generator exactly once, then
/// substitutes. Deterministic: shortest relator first, ties by list position, then the
/// smallest such generator.
TietzeResult tietze_eliminate(std::size_t rank, const std::vector<FreeWord>& relators);

/// Solves r = u x^e v for x.
FreeWord solve_for(const FreeWord& relator, std::uint32_t generator);

/// Coset table column for a letter: 2g for g, 2g+1 for g^-1.
inline std::size_t column(Letter l) { return 2 * l.generator + (l.inverse ? 1 : 0); }

struct CosetTable {
  std::size_t rank = 0;
  std::vector<std::vector<std::int64_t>> rows;  // -1 = undefined
  std::size_t size() const { return rows.size(); }
  /// Coset reached from `start` along w, or nullopt if some entry is undefined.
  std::optional<std::size_t> trace(std::size_t start, const FreeWord& w) const;
};

enum class TraceOp : std::uint8_t { scan, fill };

/// Replayable enumeration step: scan(coset, relator index) runs scan-and-fill; fill(coset,
/// column) defines a new coset if that entry is still empty.
struct TraceEvent {
  TraceOp op = TraceOp::scan;
  std::uint32_t coset = 0;
  std::uint32_t item = 0;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct EnumerationResult {
  bool complete = false;
  /// The target traced from coset 0 back to coset 0 before completion.
  bool target_collapsed = false;
  /// Compacted table of live cosets (only when complete).
  CosetTable table;
  std::vector<TraceEvent> trace;
  std::size_t cosets_defined = 0;
};

/// HLT enumeration of the cosets of the trivial subgroup in <rank | relators>, stopping when
/// the table completes, when `target` (if given) is seen to fix coset 0, or after `cap`
/// coset definitions.
EnumerationResult enumerate_cosets(std::size_t rank, const std::vector<FreeWord>& relators, std::size_t cap,
                                   const std::optional<FreeWord>& target = std::nullopt);

}  // namespace covspec
