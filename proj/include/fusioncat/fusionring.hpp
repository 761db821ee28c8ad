#ifndef FUSIONCAT_FUSIONRING_HPP
#define FUSIONCAT_FUSIONRING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fusioncat/exactnum.hpp"

namespace fusioncat {

using Label = std::uint8_t;

class FusionRing {
 public:
  // tokens are the serialization names, display the human names. N is
  // indexed [a][b][c] for N_c^{ab}, flattened. Duals are derived from N.
  FusionRing(std::string name, TowerPtr tower, std::vector<std::string> tokens,
             std::vector<std::string> display, std::vector<int> multiplicities,
             std::vector<FieldScalar> dims);

  const std::string& name() const { return name_; }
  const TowerPtr& tower() const { return tower_; }
  std::size_t size() const { return tokens_.size(); }
  static constexpr Label unit() { return 0; }

  int n(Label a, Label b, Label c) const { return n_[(a * size() + b) * size() + c]; }
  bool fuses(Label a, Label b, Label c) const { return n(a, b, c) != 0; }
  // -1 when the object has no unique dual.
  int dual(Label a) const { return duals_[a]; }
  const FieldScalar& dim(Label a) const { return dims_[a]; }

  const std::string& token(Label a) const { return tokens_[a]; }
  const std::string& display(Label a) const { return display_[a]; }
  Label from_token(std::string_view token) const;

  const std::vector<int>& multiplicities() const { return n_; }
  const std::vector<FieldScalar>& dims() const { return dims_; }
  bool multiplicity_free() const;

 private:
  std::string name_;
  TowerPtr tower_;
  std::vector<std::string> tokens_, display_;
  std::vector<int> n_;
  std::vector<int> duals_;
  std::vector<FieldScalar> dims_;
};

enum class BuiltinRing { h3, z3_pointed, fibonacci, ising };

const FusionRing& builtin_ring(BuiltinRing which);
BuiltinRing builtin_ring_from_name(std::string_view name);

struct RingCheck {
  std::string invariant;
  bool pass;
};

std::vector<RingCheck> check_ring(const FusionRing& ring);

// Entry (F_u^{abc}) with left-tree internal label `left` (in a⊗b) and
// right-tree internal label `right` (in b⊗c).
struct FKey {
  Label a, b, c, u, left, right;
  auto operator<=>(const FKey&) const = default;
};

bool admissible(const FusionRing& ring, const FKey& k);
std::string key_text(const FusionRing& ring, const FKey& k);

// Lexicographic by (a, b, c, u, left, right).
std::vector<FKey> enumerate_fkeys(const FusionRing& ring);

struct FBlock {
  Label a, b, c, u;
  std::vector<Label> left_labels, right_labels;
  std::size_t dim() const { return left_labels.size(); }
};

std::vector<FBlock> f_blocks(const FusionRing& ring);
FBlock f_block(const FusionRing& ring, Label a, Label b, Label c, Label u);

// Block dimension -> number of blocks.
std::map<std::size_t, std::size_t> block_census(const FusionRing& ring);

}  // namespace fusioncat

#endif  // FUSIONCAT_FUSIONRING_HPP
