#include "fusioncat/fusionring.hpp"

#include <sstream>

namespace fusioncat {

FusionRing::FusionRing(std::string name, TowerPtr tower, std::vector<std::string> tokens,
                       std::vector<std::string> display, std::vector<int> multiplicities,
                       std::vector<FieldScalar> dims)
    : name_(std::move(name)),
      tower_(std::move(tower)),
      tokens_(std::move(tokens)),
      display_(std::move(display)),
      n_(std::move(multiplicities)),
      dims_(std::move(dims)) {
  std::size_t k = tokens_.size();
  if (display_.size() != k || dims_.size() != k || n_.size() != k * k * k)
    throw Error("fusion ring " + name_ + ": inconsistent sizes");
  duals_.assign(k, -1);
  for (std::size_t a = 0; a < k; ++a) {
    int found = -1, count = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (n(static_cast<Label>(a), static_cast<Label>(b), unit()) != 0) {
        found = static_cast<int>(b);
        ++count;
      }
    if (count == 1) duals_[a] = found;
  }
}

Label FusionRing::from_token(std::string_view token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i] == token) return static_cast<Label>(i);
  throw Error("unknown object token '" + std::string(token) + "' for ring " + name_);
}

bool FusionRing::multiplicity_free() const {
  for (int v : n_)
    if (v > 1) return false;
  return true;
}

namespace {

// Builds N from product rows: rows[a][b] lists the tokens in a⊗b.
std::vector<int> from_rows(const std::vector<std::string>& tokens,
                           const std::vector<std::vector<std::string>>& rows) {
  std::size_t k = tokens.size();
  std::vector<int> n(k * k * k, 0);
  auto index = [&](const std::string& t) {
    for (std::size_t i = 0; i < k; ++i)
      if (tokens[i] == t) return i;
    throw Error("bad token in fusion table: " + t);
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::istringstream in(rows[a][b]);
      std::string t;
      while (in >> t) n[(a * k + b) * k + index(t)] += 1;
    }
  return n;
}

FusionRing make_h3() {
  TowerPtr t = tower_preset(TowerPreset::h3);
  std::vector<std::string> tokens{"1", "a", "as", "r", "ar", "asr"};
  std::vector<std::string> display{"1", "α", "α*", "ρ", "αρ", "α*ρ"};
  std::vector<std::vector<std::string>> rows{
      {"1", "a", "as", "r", "ar", "asr"},
      {"a", "as", "1", "ar", "asr", "r"},
      {"as", "1", "a", "asr", "r", "ar"},
      {"r", "asr", "ar", "1 r ar asr", "as r ar asr", "a r ar asr"},
      {"ar", "r", "asr", "a r ar asr", "1 r ar asr", "as r ar asr"},
      {"asr", "ar", "r", "as r ar asr", "a r ar asr", "1 r ar asr"},
  };
  FieldScalar one(t, Rational(1));
  FieldScalar d = named_constant(Constant::dRho, t);
  return FusionRing("h3", t, tokens, display, from_rows(tokens, rows), {one, one, one, d, d, d});
}

FusionRing make_z3() {
  TowerPtr t = tower_preset(TowerPreset::rationals);
  std::vector<std::string> tokens{"1", "a", "as"};
  std::vector<std::string> display{"1", "α", "α*"};
  std::vector<std::vector<std::string>> rows{
      {"1", "a", "as"}, {"a", "as", "1"}, {"as", "1", "a"}};
  FieldScalar one(t, Rational(1));
  return FusionRing("z3_pointed", t, tokens, display, from_rows(tokens, rows), {one, one, one});
}

FusionRing make_fibonacci() {
  TowerPtr t = tower_preset(TowerPreset::fibonacci);
  std::vector<std::string> tokens{"1", "t"};
  std::vector<std::string> display{"1", "τ"};
  std::vector<std::vector<std::string>> rows{{"1", "t"}, {"t", "1 t"}};
  FieldScalar phi(t, {Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});
  return FusionRing("fibonacci", t, tokens, display, from_rows(tokens, rows),
                    {FieldScalar(t, Rational(1)), phi});
}

FusionRing make_ising() {
  TowerPtr t = tower_preset(TowerPreset::ising);
  std::vector<std::string> tokens{"1", "s", "p"};
  std::vector<std::string> display{"1", "σ", "ψ"};
  std::vector<std::vector<std::string>> rows{
      {"1", "s", "p"}, {"s", "1 p", "s"}, {"p", "s", "1"}};
  FieldScalar one(t, Rational(1));
  return FusionRing("ising", t, tokens, display, from_rows(tokens, rows),
                    {one, FieldScalar::root(t, 0), one});
}

}  // namespace

const FusionRing& builtin_ring(BuiltinRing which) {
  static const FusionRing h3 = make_h3();
  static const FusionRing z3 = make_z3();
  static const FusionRing fib = make_fibonacci();
  static const FusionRing ising = make_ising();
  switch (which) {
    case BuiltinRing::h3: return h3;
    case BuiltinRing::z3_pointed: return z3;
    case BuiltinRing::fibonacci: return fib;
    case BuiltinRing::ising: return ising;
  }
  throw Error("unknown builtin ring");
}

BuiltinRing builtin_ring_from_name(std::string_view name) {
  if (name == "h3") return BuiltinRing::h3;
  if (name == "z3" || name == "z3_pointed") return BuiltinRing::z3_pointed;
  if (name == "fib" || name == "fibonacci") return BuiltinRing::fibonacci;
  if (name == "ising") return BuiltinRing::ising;
  throw Error("unknown ring: " + std::string(name));
}

std::vector<RingCheck> check_ring(const FusionRing& ring) {
  std::size_t k = ring.size();
  auto L = [](std::size_t i) { return static_cast<Label>(i); };
  bool mult_free = ring.multiplicity_free();

  bool unit_ok = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      int delta = a == b ? 1 : 0;
      if (ring.n(0, L(a), L(b)) != delta || ring.n(L(a), 0, L(b)) != delta) unit_ok = false;
    }

  bool dual_ok = true;
  for (std::size_t a = 0; a < k; ++a) {
    int d = ring.dual(L(a));
    if (d < 0 || ring.dual(L(d)) != static_cast<int>(a)) {
      dual_ok = false;
      continue;
    }
    for (std::size_t b = 0; b < k; ++b) {
      int expect = static_cast<int>(b) == d ? 1 : 0;
      if (ring.n(L(a), L(b), 0) != expect) dual_ok = false;
    }
  }

  bool assoc_ok = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
          int lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < k; ++e) {
            lhs += ring.n(L(a), L(b), L(e)) * ring.n(L(e), L(c), L(d));
            rhs += ring.n(L(a), L(e), L(d)) * ring.n(L(b), L(c), L(e));
          }
          if (lhs != rhs) assoc_ok = false;
        }

  bool dims_ok = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      FieldScalar sum(ring.tower());
      for (std::size_t c = 0; c < k; ++c)
        if (int m = ring.n(L(a), L(b), L(c))) sum += ring.dim(L(c)).scaled(m);
      if (!(ring.dim(L(a)) * ring.dim(L(b)) == sum)) dims_ok = false;
    }

  return {{"multiplicity-free", mult_free},
          {"unit", unit_ok},
          {"duals", dual_ok},
          {"associativity", assoc_ok},
          {"dimensions", dims_ok}};
}

bool admissible(const FusionRing& ring, const FKey& k) {
  std::size_t s = ring.size();
  if (k.a >= s || k.b >= s || k.c >= s || k.u >= s || k.left >= s || k.right >= s) return false;
  return ring.fuses(k.a, k.b, k.left) && ring.fuses(k.left, k.c, k.u) &&
         ring.fuses(k.b, k.c, k.right) && ring.fuses(k.a, k.right, k.u);
}

std::string key_text(const FusionRing& ring, const FKey& k) {
  return "F(" + ring.token(k.a) + "," + ring.token(k.b) + "," + ring.token(k.c) + ";" +
         ring.token(k.u) + ";left=" + ring.token(k.left) + ",right=" + ring.token(k.right) + ")";
}

std::vector<FKey> enumerate_fkeys(const FusionRing& ring) {
  if (!ring.multiplicity_free()) throw Error("ring " + ring.name() + " has multiplicities");
  std::vector<FKey> keys;
  Label s = static_cast<Label>(ring.size());
  for (Label a = 0; a < s; ++a)
    for (Label b = 0; b < s; ++b)
      for (Label c = 0; c < s; ++c)
        for (Label u = 0; u < s; ++u)
          for (Label l = 0; l < s; ++l)
            for (Label r = 0; r < s; ++r) {
              FKey k{a, b, c, u, l, r};
              if (admissible(ring, k)) keys.push_back(k);
            }
  return keys;
}

FBlock f_block(const FusionRing& ring, Label a, Label b, Label c, Label u) {
  FBlock blk{a, b, c, u, {}, {}};
  Label s = static_cast<Label>(ring.size());
  for (Label x = 0; x < s; ++x) {
    if (ring.fuses(a, b, x) && ring.fuses(x, c, u)) blk.left_labels.push_back(x);
    if (ring.fuses(b, c, x) && ring.fuses(a, x, u)) blk.right_labels.push_back(x);
  }
  if (blk.left_labels.size() != blk.right_labels.size())
    throw Error("block with unequal left/right label counts");
  return blk;
}

std::vector<FBlock> f_blocks(const FusionRing& ring) {
  std::vector<FBlock> out;
  Label s = static_cast<Label>(ring.size());
  for (Label a = 0; a < s; ++a)
    for (Label b = 0; b < s; ++b)
      for (Label c = 0; c < s; ++c)
        for (Label u = 0; u < s; ++u) {
          FBlock blk = f_block(ring, a, b, c, u);
          if (blk.dim() > 0) out.push_back(std::move(blk));
        }
  return out;
}

std::map<std::size_t, std::size_t> block_census(const FusionRing& ring) {
  std::map<std::size_t, std::size_t> census;
  for (const auto& blk : f_blocks(ring)) ++census[blk.dim()];
  return census;
}

}  // namespace fusioncat
