#ifndef FUSIONCAT_PENTAGON_HPP
#define FUSIONCAT_PENTAGON_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fusioncat/fsymbols.hpp"

namespace fusioncat {

// (F_u^{xyc})_{da} (F_u^{azw})_{cb} = sum_e (F_d^{yzw})_{ce} (F_u^{xew})_{db} (F_b^{xyz})_{ea}
// where (F)_{ij} has i the right-tree label and j the left-tree label.
struct PentagonInstance {
  Label x, y, z, w, u, a, b, c, d;
  std::vector<Label> e_range;

  FKey lhs1() const { return {x, y, c, u, a, d}; }
  FKey lhs2() const { return {a, z, w, u, b, c}; }
  FKey rhs1(Label e) const { return {y, z, w, d, e, c}; }
  FKey rhs2(Label e) const { return {x, e, w, u, b, d}; }
  FKey rhs3(Label e) const { return {x, y, z, b, a, e}; }
};

// none: every instance counts. unit: drop instances with x, y, z or w the
// unit. identical: drop instances that hold formally, i.e. a single e term
// whose keys cancel against the left side except for keys with a unit among
// (a, b, c). both: unit or identical.
enum class TrivialityRule { none, unit, identical, both };

TrivialityRule triviality_from_name(std::string_view name);
std::string_view triviality_name(TrivialityRule rule);

// All instances whose two left-hand keys are admissible, in lexicographic
// (x, y, z, w, u, a, b, c, d) order.
std::vector<PentagonInstance> enumerate_instances(const FusionRing& ring);

bool is_trivial(const PentagonInstance& inst, TrivialityRule rule);

// Left side minus right side.
ParamScalar residual(const PentagonInstance& inst, const FSymbolTable& table);

struct InstanceCounts {
  std::size_t total = 0, trivial = 0, nontrivial = 0;
};

InstanceCounts count_instances(const FusionRing& ring, TrivialityRule rule);

struct PentagonFailure {
  PentagonInstance instance;
  ParamScalar residual;
};

struct VerifyReport {
  InstanceCounts counts;
  std::vector<PentagonFailure> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

// Evaluates every nontrivial instance on `jobs` threads (0 = hardware).
VerifyReport verify_all(const FSymbolTable& table, TrivialityRule rule = TrivialityRule::none,
                        unsigned jobs = 1);

std::string failure_line(const FusionRing& ring, const PentagonFailure& f);
std::string summary_line(const VerifyReport& report);

struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string note;
  bool ok() const { return failures.empty(); }
};

// F_z^{1xy} F_x^{1zy} = 1 and F_z^{xy1} F_y^{xz1} = 1.
CheckReport check_triangle(const FSymbolTable& table);

// sum_{x3'} (F_u^{a x1 x4})_{x3' x3} (F_{x3'}^{x1 x2 c})^*_{b x4} (F_u^{abc})^*_{y x3'}
//   = (F_u^{x3 x2 c})^*_{y x4} (F_y^{a x1 x2})_{b x3}, with (F^*)_{ij} = F_{ji}.
CheckReport check_additional(const FSymbolTable& table);

// The two square-popping consequences for F_rho^{rho rho rho}; depends on the
// gauge of the table.
CheckReport check_addtriv(const FSymbolTable& table);

// Entries fixed by unit labels and the trivalent structure of H3.
CheckReport check_seeds(const FSymbolTable& table);

}  // namespace fusioncat

#endif  // FUSIONCAT_PENTAGON_HPP
