#ifndef FUSIONCAT_SOLVER_HPP
#define FUSIONCAT_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fusioncat/fsymbols.hpp"

namespace fusioncat {

// sum_t coef_t * prod(entries of t.keys) = 0, keys given as table positions.
struct Equation {
  struct Term {
    FieldScalar coef;
    std::vector<std::size_t> keys;
  };
  std::vector<Term> terms;
  FieldScalar constant;
  std::string origin;
  std::vector<std::size_t> distinct_keys;
};

struct PartialTable {
  FusionRing ring;
  std::vector<FKey> keys;
  std::vector<std::optional<FieldScalar>> known;
  std::vector<std::string> gauge_log;

  explicit PartialTable(FusionRing r);
  std::size_t known_count() const;
  long index_of(const FKey& k) const;
};

struct SolveReport {
  std::size_t seeds = 0;
  std::size_t rounds = 0;
  std::vector<std::size_t> resolved_per_round;
  std::size_t remaining = 0;
  std::vector<std::string> branch_decisions;
  std::vector<std::string> gauge_log;
  std::size_t branches_explored = 0;
  std::size_t dead_branches = 0;
  std::size_t solutions = 0;
};

// Entries with a unit among a, b, c are 1. Pointed rings are seeded entirely
// with 1. For h3 also F_1^{rho rho rho} = 1 and (F_rho^{rho rho rho})_{rho rho} = -B.
PartialTable seed(const FusionRing& ring);

// Pentagon instances, row and column orthogonality of every block, and for
// h3 the two square-popping relations.
std::vector<Equation> build_equations(const FusionRing& ring);

struct PropagateResult {
  PartialTable table;
  SolveReport report;
  std::vector<PartialTable> solutions;
};

// Fixpoint of single-unknown deductions. With branching, two-root cases are
// explored depth first (after sign gauge fixing where a vertex allows it) and
// every complete consistent assignment is collected. Throws "inconsistent
// seeds" when every branch dies.
PropagateResult propagate(const PartialTable& start, bool branching = true);

// seed + propagate + independent verification of every complete table.
std::vector<FSymbolTable> solve(const FusionRing& ring, SolveReport* report = nullptr);

FSymbolTable to_table(const PartialTable& p);

struct CompareReport {
  std::size_t compared = 0;
  std::size_t exact = 0;          // equal to the table entry as a polynomial in p1, p2
  std::size_t at_assignment = 0;  // equal after substituting the best (p1, p2)
  std::size_t up_to_sign = 0;     // equal up to sign at that assignment
  std::pair<int, int> assignment{1, 1};
  bool all_match() const { return at_assignment == compared; }
};

CompareReport compare_to_dataset(const PartialTable& partial, const FSymbolTable& table);

std::string report_text(const SolveReport& r, std::size_t total_keys);

}  // namespace fusioncat

#endif  // FUSIONCAT_SOLVER_HPP
