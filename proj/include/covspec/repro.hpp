#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covspec/fingroup.hpp"
#include "covspec/json_io.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Both Fano Schreier length spaces at (l_A, l_B): spectra, loop table and the
/// distinguishing value l_A + l_B/2.
struct FanoRun {
  Rational la, lb;
  bool constraint_ok = false;  // 0 < l_A < l_B < 3/2 l_A
  Rational distinguishing;
  CovSpecResult points;
  CovSpecResult lines;
  std::vector<Rational> short_lengths_points;  // marked lengths below l_A + 2 l_B
  std::vector<Rational> short_lengths_lines;
  bool points_match_reference = false;  // label-exact
  bool lines_match_reference = false;
  std::optional<std::vector<bool>> points_reversed_colors;  // isometry to the reference drawing
  std::vector<Assertion> assertions;  // claimed only when constraint_ok

  bool pass() const;
};

FanoRun run_fano(const Rational& la, const Rational& lb, const CovSpecBudgets& budgets = {});

struct TripleRun {
  std::size_t group_order = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t h1_order = 0, h2_order = 0;
  GassmannReport gassmann;
  JumpEquivalenceReport jump;
};

TripleRun run_triple(const Subgroup& h1, const Subgroup& h2);
/// GL3(F2) with H1 = stabilizer of the point 100 and H2 = stabilizer of the line 100.
TripleRun run_fano_triple();

/// Group file: one generator per line as an image list; optional lines "H1: ..." / "H2: ..."
/// give subgroup generators, several separated by '|'. '#' starts a comment.
struct GroupFile {
  std::vector<Permutation> generators;
  std::vector<Permutation> h1;
  std::vector<Permutation> h2;
  bool has_h1 = false, has_h2 = false;
};
GroupFile parse_group_file(const std::string& text);

struct ReproRun {
  TripleRun triple;
  FanoRun fano;
  std::vector<std::pair<std::size_t, std::uint64_t>> genus;  // n -> genus
  std::vector<Assertion> assertions;
  bool pass() const;
};

ReproRun run_repro(std::size_t n, const CovSpecBudgets& budgets = {});

Json assertions_to_json(const std::vector<Assertion>& a);
Json fano_to_json(const FanoRun& r, bool explain);
Json triple_to_json(const TripleRun& r);
Json repro_to_json(const ReproRun& r, bool explain);

}  // namespace covspec
