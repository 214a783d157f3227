#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covspec/intmat.hpp"
#include "covspec/membership.hpp"
#include "covspec/metricgraph.hpp"
#include "covspec/rational.hpp"

namespace covspec {

/// Generation oracle for jump detection: `contains` asks whether a key lies in the subgroup
/// generated so far (it may throw OracleUndecided); `add` enlarges that subgroup.
template <class Key>
struct GenerationOracle {
  std::function<bool(const Key&)> contains;
  std::function<void(const Key&)> add;
};

/// Walks distinct m-values upward. A value v is a jump iff some key at v lies outside
/// <keys with m < v>, i.e. <m < v> != <m <= v>; all keys at v are then added.
template <class Key>
class JumpScanner {
 public:
  explicit JumpScanner(GenerationOracle<Key> oracle) : oracle_(std::move(oracle)) {}

  /// Returns the index of the first key outside the current subgroup, if any. Values must
  /// be fed in strictly increasing order.
  std::optional<std::size_t> feed_level(const Rational& value, const std::vector<Key>& keys) {
    if (last_ && !(*last_ < value)) throw std::invalid_argument("levels must be strictly increasing");
    last_ = value;
    std::optional<std::size_t> witness;
    for (std::size_t i = 0; i < keys.size() && !witness; ++i)
      if (!oracle_.contains(keys[i])) witness = i;
    if (witness) {
      jumps_.push_back(value);
      for (const auto& k : keys) oracle_.add(k);
    }
    return witness;
  }

  const std::vector<Rational>& jumps() const { return jumps_; }

 private:
  GenerationOracle<Key> oracle_;
  std::optional<Rational> last_;
  std::vector<Rational> jumps_;
};

/// Generic jump set of a filtration given by (key, m-value) pairs.
template <class Key>
std::vector<Rational> jump_set(std::vector<std::pair<Key, Rational>> values, GenerationOracle<Key> oracle) {
  std::stable_sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  JumpScanner<Key> scanner(std::move(oracle));
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    std::vector<Key> level;
    while (j < values.size() && values[j].second == values[i].second) level.push_back(values[j++].first);
    scanner.feed_level(values[i].second, level);
    i = j;
  }
  return scanner.jumps();
}

/// One membership question asked by the algorithm and the certificate that answered it.
struct QueryRecord {
  MembershipQuery query;
  Certificate certificate;
};

struct JumpRecord {
  Rational value;
  MarkedClass witness;
  std::vector<CyclicWord> relators;  // classes with m < value at the time of the query
  std::size_t certificate = 0;       // index into FiltrationReport::queries
};

struct FiltrationReport {
  std::vector<JumpRecord> jumps;
  std::vector<QueryRecord> queries;
  /// Indices into queries: one member certificate per free generator at termination.
  std::vector<std::size_t> termination;
  bool terminated = false;
  Rational final_budget;
  /// Every enumerated marked length (the image of m below final_budget).
  std::vector<Rational> realized_lengths;
  std::string diagnostics;
};

struct CoveringSpectrum {
  std::vector<Rational> values;  // jumps / 2
  std::string source;
};

struct CovSpecBudgets {
  Rational initial_budget;  // 0: twice the longest edge
  Rational max_budget;      // 0: no limit beyond the class cap
  std::size_t class_cap = 200'000;
  OracleBudgets oracle;
};

struct CovSpecResult {
  CoveringSpectrum spectrum;
  FiltrationReport report;
};

/// The covering spectrum algorithm. Throws OracleUndecided with the offending query when a
/// decisive membership question cannot be settled, CapExceeded when budgets run out.
CovSpecResult covering_spectrum(const MetricGraph& x, const CovSpecBudgets& budgets = {});

/// 2*CovSpec is contained in the realized marked lengths.
bool length_spectrum_containment(const CoveringSpectrum& spectrum, const FiltrationReport& report);

/// Lattice value: exact squared length plus its rendering ("p/q" when rational, else
/// "sqrt(p/q)") and a decimal approximation.
struct LatticeValue {
  Rational squared;
  std::string exact;
  double approx = 0.0;
};

struct LatticeSpectrum {
  std::vector<LatticeValue> jumps;     // Euclidean lengths
  std::vector<LatticeValue> covspec;   // halves
};

/// Flat torus R^n / L with L spanned by the rows of `basis`. Throws InputError if singular.
LatticeSpectrum covering_spectrum_lattice(const std::vector<std::vector<Rational>>& basis);

LatticeValue lattice_value(const Rational& squared);

}  // namespace covspec
