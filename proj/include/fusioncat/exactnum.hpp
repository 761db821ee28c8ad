#ifndef FUSIONCAT_EXACTNUM_HPP
#define FUSIONCAT_EXACTNUM_HPP

// Exact arithmetic in towers of quadratic extensions of Q.
//
// An element of a k-level tower is stored as 2^k rational coordinates over
// the monomial basis prod_i sqrt(g_i)^{b_i}, where bit i of the coordinate
// index selects the i-th adjoined square root. The real embedding used by
// approx() takes every adjoined square root positive.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fusioncat {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower {
 public:
  struct Level {
    std::string token;                // text name of the adjoined root, e.g. "r13"
    std::vector<Rational> radicand;   // coordinates over the previous level
  };

  struct Term {
    std::uint32_t index;
    Rational coef;
  };

  // Builds a tower; throws if a radicand has the wrong length or is zero.
  static TowerPtr make(std::string name, std::vector<Level> levels);

  const std::string& name() const { return name_; }
  std::size_t num_levels() const { return levels_.size(); }
  std::size_t degree() const { return std::size_t{1} << levels_.size(); }
  const Level& level(std::size_t i) const { return levels_.at(i); }

  // Tower made of the first k levels, k < num_levels().
  const TowerPtr& prefix(std::size_t k) const { return prefixes_.at(k); }
  // Position of a root token among the levels, if any.
  std::optional<std::size_t> find_level(std::string_view token) const;

  // Reduced product of basis monomials i and j.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const {
    return table_[i * degree() + j];
  }

 private:
  Tower() = default;
  std::string name_;
  std::vector<Level> levels_;
  std::vector<TowerPtr> prefixes_;
  std::vector<std::vector<Term>> table_;
};

enum class TowerPreset { h3, fibonacci, ising, rationals };

TowerPtr tower_preset(TowerPreset preset);
TowerPreset tower_preset_from_name(std::string_view name);

// Checks that every level of a preset is a proper extension. For towers whose
// upper radicands all lie in the first quadratic subfield Q(sqrt n), this
// reduces to showing no nonempty product of upper radicands is a square in
// Q(sqrt n); each check is the rational-root test of the induced quartic.
bool tower_is_proper(const Tower& tower);

// True iff x^4 + p x^2 + q has a rational root.
bool biquadratic_has_rational_root(const Rational& p, const Rational& q);

std::optional<Rational> rational_sqrt(const Rational& x);

class FieldScalar {
 public:
  explicit FieldScalar(TowerPtr tower);
  FieldScalar(TowerPtr tower, const Rational& value);
  FieldScalar(TowerPtr tower, std::vector<Rational> coords);

  // The adjoined square root of the given level.
  static FieldScalar root(TowerPtr tower, std::size_t level);

  const TowerPtr& tower() const { return tower_; }
  std::span<const Rational> coords() const { return coords_; }
  const Rational& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_rational() const;

  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs) { return *this *= rhs.inverse(); }
  FieldScalar operator-() const;

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  FieldScalar scaled(const Rational& r) const;
  FieldScalar inverse() const;

  // Some square root inside the tower, if one exists. The sign is not
  // normalised; see sqrt_nonnegative().
  std::optional<FieldScalar> sqrt() const;
  std::optional<FieldScalar> sqrt_nonnegative() const;

  // Sign in the real embedding: -1, 0 or +1 (exact for 0).
  int sign() const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

 private:
  void require_same_tower(const FieldScalar& other) const;

  TowerPtr tower_;
  std::vector<Rational> coords_;
};

// Floating-point approximation with roughly precision_bits correct bits.
double approx(const FieldScalar& x, unsigned precision_bits = 64);

// round(scale * x + offset), half away from zero, with x approximated at the
// given precision.
long round_scaled(const FieldScalar& x, const Rational& scale, const Rational& offset,
                  unsigned precision_bits);

// Default precision taken from FUSIONCAT_PRECISION_BITS (fallback 128).
unsigned default_precision_bits();

enum class Constant { dRho, A, B, C, Dplus, Dminus, sqrtA, bBigon, tTriangle, c1, c2 };

Constant constant_from_name(std::string_view name);
std::string_view constant_name(Constant c);
FieldScalar named_constant(Constant c, const TowerPtr& tower = tower_preset(TowerPreset::h3));

// Polynomial in sign parameters p1, p2 with p1^2 = p2^2 = 1. Term index bit 0
// is p1, bit 1 is p2.
class ParamScalar {
 public:
  explicit ParamScalar(TowerPtr tower);
  ParamScalar(const FieldScalar& constant);  // NOLINT(google-explicit-constructor)
  ParamScalar(TowerPtr tower, std::array<FieldScalar, 4> terms);

  static ParamScalar p1(TowerPtr tower);
  static ParamScalar p2(TowerPtr tower);
  static ParamScalar constant(TowerPtr tower, const Rational& value);

  const TowerPtr& tower() const { return tower_; }
  const FieldScalar& term(std::size_t monomial) const { return terms_[monomial]; }
  const std::array<FieldScalar, 4>& terms() const { return terms_; }

  bool is_zero() const;
  bool is_constant() const;

  ParamScalar& operator+=(const ParamScalar& rhs);
  ParamScalar& operator-=(const ParamScalar& rhs);
  ParamScalar operator-() const;
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);

  // Inverse in Q-tower[p1,p2]/(p1^2-1, p2^2-1); throws when some sign
  // assignment evaluates to zero.
  ParamScalar inverse() const;

  FieldScalar substitute(int p1, int p2) const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TowerPtr tower_;
  std::array<FieldScalar, 4> terms_;
};

inline constexpr std::array<std::pair<int, int>, 4> kSignAssignments{
    {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};

}  // namespace fusioncat

#endif  // FUSIONCAT_EXACTNUM_HPP
