#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covspec/coset.hpp"
#include "covspec/freeword.hpp"
#include "covspec/intmat.hpp"
#include "covspec/metricgraph.hpp"

namespace covspec {

enum class Verdict { member, non_member, undecided };
enum class Tier { syntactic, abelian, contraction, coset_enumeration, none };

std::string to_string(Verdict v);
std::string to_string(Tier t);

/// conjugator * relator^exponent * conjugator^-1
struct ConjugateFactor {
  FreeWord conjugator;
  std::size_t relator = 0;
  long exponent = 1;
};

enum class CosetMode { free_quotient, complete_table, collapse };
std::string to_string(CosetMode m);

struct Certificate {
  Verdict verdict = Verdict::undecided;
  Tier tier = Tier::none;

  // syntactic: the target equals the product of the factors in order
  std::vector<ConjugateFactor> factors;

  // abelian: a homomorphism F -> Z (modulus 0) or Z/modulus killing every relator
  IntVector functional;
  BigInt modulus;

  // contraction: edges collapsed in the quotient graph K and the target's image in pi_1(K)
  std::vector<std::size_t> contracted_edges;
  FreeWord contracted_image;

  // coset enumeration: Tietze moves first, then one of the three modes
  CosetMode mode = CosetMode::free_quotient;
  std::vector<TietzeStep> eliminations;
  FreeWord reduced_target;       // target after the Tietze moves
  CosetTable table;              // complete_table, non-member
  std::vector<TraceEvent> trace;  // complete_table or collapse, member
  std::size_t table_size = 0;

  std::string note;  // undecided: the exhausted budgets
};

/// A membership question "target in the normal closure of relators" in the free group of the
/// given rank. For graph queries the loops are kept so the contraction tier can run.
struct MembershipQuery {
  std::size_t rank = 0;
  std::vector<FreeWord> relators;
  FreeWord target;
  const MetricGraph* graph = nullptr;
  std::vector<DartPath> relator_loops;
  DartPath target_loop;
};

struct OracleBudgets {
  std::size_t syntactic_factors = 3;      // k
  std::size_t syntactic_conjugator = 4;   // c, rotation offset on either side
  std::size_t syntactic_operations = 200'000;
  std::size_t coset_cap = 100'000;
  /// Reads COVSPEC_BUDGET (coset table cap) if set. Throws InputError on a malformed value.
  static OracleBudgets from_environment();
};

std::optional<Certificate> syntactic_member(const std::vector<FreeWord>& relators, const FreeWord& target,
                                            const OracleBudgets& budgets = {});
std::optional<Certificate> abelian_nonmember(const std::vector<FreeWord>& relators, const FreeWord& target,
                                             std::size_t rank);
std::optional<Certificate> contraction_nonmember(const MetricGraph& x, const std::vector<DartPath>& relator_loops,
                                                 const DartPath& target);
/// Always returns a certificate; undecided when the table cap is hit first.
Certificate coset_membership(const std::vector<FreeWord>& relators, const FreeWord& target, std::size_t rank,
                             std::size_t cap);

/// Runs the tiers syntactic -> abelian -> contraction (graph queries only) -> coset enumeration.
Certificate decide_membership(const MembershipQuery& query, const OracleBudgets& budgets = {});

/// Builds the graph query from relator loops and a target loop.
MembershipQuery graph_query(const MetricGraph& x, const std::vector<DartPath>& relator_loops,
                            const DartPath& target_loop);

/// Independent re-validation of a member/non_member certificate against its query.
/// Undecided certificates never validate.
bool check_certificate(const MembershipQuery& query, const Certificate& cert, std::string* why = nullptr);

}  // namespace covspec
