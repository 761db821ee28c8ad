#ifndef FUSIONCAT_FSYMBOLS_HPP
#define FUSIONCAT_FSYMBOLS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fusioncat/exactnum.hpp"
#include "fusioncat/fusionring.hpp"

namespace fusioncat {

using ParamMatrix = std::vector<std::vector<ParamScalar>>;

// Total map from the ring's admissible keys to values.
class FSymbolTable {
 public:
  // All entries zero.
  explicit FSymbolTable(FusionRing ring);

  const FusionRing& ring() const { return ring_; }
  const std::vector<FKey>& keys() const { return keys_; }
  const std::vector<ParamScalar>& values() const { return values_; }
  std::size_t size() const { return keys_.size(); }

  // Position of an admissible key in keys(), or -1.
  long index_of(const FKey& k) const;
  const ParamScalar& get(const FKey& k) const;
  const ParamScalar& at(std::size_t i) const { return values_[i]; }
  void set(const FKey& k, ParamScalar v);
  void set_at(std::size_t i, ParamScalar v) { values_[i] = std::move(v); }

  // Rows indexed by the right-tree label, columns by the left-tree label,
  // each in ascending label order.
  ParamMatrix f_matrix(Label a, Label b, Label c, Label u) const;

 private:
  std::size_t slot(const FKey& k) const;

  FusionRing ring_;
  std::vector<FKey> keys_;
  std::vector<ParamScalar> values_;
  std::vector<int> lookup_;
};

// The full two-parameter H3 solution.
const FSymbolTable& h3_table();

// Vertex gauge u_c^{ab}, defaulting to 1 on every admissible vertex.
class GaugeAssignment {
 public:
  explicit GaugeAssignment(const FusionRing& ring);
  const FieldScalar& get(Label a, Label b, Label c) const;
  void set(Label a, Label b, Label c, FieldScalar v);
  GaugeAssignment operator*(const GaugeAssignment& other) const;

 private:
  std::size_t n_;
  std::vector<FieldScalar> u_;
};

// F'(a,b,c;u; left, right) = u_u^{a right} u_right^{bc} / (u_left^{ab} u_u^{left c}) F.
FSymbolTable apply_gauge(const FSymbolTable& table, const GaugeAssignment& g);

// Deterministic gauge with small nonzero rational values drawn from seed.
GaugeAssignment random_gauge(const FusionRing& ring, std::uint64_t seed);

struct BlockFailure {
  FBlock block;
  std::string detail;
};

struct OrthogonalityReport {
  std::size_t blocks = 0;
  std::vector<BlockFailure> failures;
  bool ok() const { return failures.empty(); }
};

// F F^T = I for every block, symbolically in p1, p2.
OrthogonalityReport check_orthogonality(const FSymbolTable& table);

FSymbolTable substitute_params(const FSymbolTable& table, int p1, int p2);

// Exact inverse, solved at each sign assignment and interpolated back to
// p1, p2. Throws when the matrix is singular at some assignment.
ParamMatrix invert(const ParamMatrix& m);

// Text format: "h3fsym v1", optional "ring <name>" for non-h3 rings, then
// "F <u> <a> <b> <c> <right> <left> = <expr>" in key order. '#' starts a comment.
std::string serialize(const FSymbolTable& table);
FSymbolTable parse_table(std::string_view text);
FSymbolTable load_table(const std::string& path);

}  // namespace fusioncat

#endif  // FUSIONCAT_FSYMBOLS_HPP
