#include "fusioncat/exactnum.hpp"

#include <cstdlib>
#include <mutex>

#include <mpfr.h>

namespace fusioncat {

namespace {

using Coords = std::vector<Rational>;

// Product in the first k levels, by splitting off the top root:
// (a0 + a1 s)(b0 + b1 s) = (a0 b0 + a1 b1 g) + (a0 b1 + a1 b0) s.
Coords mul_rec(const std::vector<Tower::Level>& levels, std::size_t k, const Coords& a,
               const Coords& b) {
  if (k == 0) return {a[0] * b[0]};
  std::size_t h = std::size_t{1} << (k - 1);
  Coords a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
  Coords b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
  Coords lo = mul_rec(levels, k - 1, a0, b0);
  Coords sq = mul_rec(levels, k - 1, mul_rec(levels, k - 1, a1, b1), levels[k - 1].radicand);
  Coords x = mul_rec(levels, k - 1, a0, b1);
  Coords y = mul_rec(levels, k - 1, a1, b0);
  Coords out(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = lo[i] + sq[i];
    out[h + i] = x[i] + y[i];
  }
  return out;
}

bool all_zero(std::span<const Rational> v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

struct MpfrValue {
  mpfr_t v;
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
};

// Values of all basis monomials at working precision prec.
std::vector<std::unique_ptr<MpfrValue>> monomial_values(const Tower& t, mpfr_prec_t prec);

void eval_coords(mpfr_t out, const Tower& t, std::span<const Rational> coords, mpfr_prec_t prec) {
  auto mono = monomial_values(t, prec);
  MpfrValue term(prec), q(prec);
  mpfr_set_zero(out, 1);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    mpfr_set_q(q.v, coords[i].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.v, q.v, mono[i]->v, MPFR_RNDN);
    mpfr_add(out, out, term.v, MPFR_RNDN);
  }
}

std::vector<std::unique_ptr<MpfrValue>> monomial_values(const Tower& t, mpfr_prec_t prec) {
  std::size_t k = t.num_levels();
  std::vector<std::unique_ptr<MpfrValue>> roots;
  for (std::size_t i = 0; i < k; ++i) {
    roots.push_back(std::make_unique<MpfrValue>(prec));
    // The radicand lives in the i-level prefix; evaluate it with the roots found so far.
    const Coords& r = t.level(i).radicand;
    MpfrValue acc(prec), term(prec), q(prec);
    mpfr_set_zero(acc.v, 1);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (sgn(r[j]) == 0) continue;
      mpfr_set_q(term.v, r[j].get_mpq_t(), MPFR_RNDN);
      for (std::size_t l = 0; l < i; ++l)
        if (j >> l & 1) mpfr_mul(term.v, term.v, roots[l]->v, MPFR_RNDN);
      mpfr_add(acc.v, acc.v, term.v, MPFR_RNDN);
    }
    mpfr_sqrt(roots[i]->v, acc.v, MPFR_RNDN);
  }
  std::vector<std::unique_ptr<MpfrValue>> mono;
  for (std::size_t m = 0; m < t.degree(); ++m) {
    mono.push_back(std::make_unique<MpfrValue>(prec));
    mpfr_set_ui(mono[m]->v, 1, MPFR_RNDN);
    for (std::size_t l = 0; l < k; ++l)
      if (m >> l & 1) mpfr_mul(mono[m]->v, mono[m]->v, roots[l]->v, MPFR_RNDN);
  }
  return mono;
}

// Sum of |c_i m_i|; used as the scale of the rounding error.
void eval_magnitude(mpfr_t out, const Tower& t, std::span<const Rational> coords,
                    mpfr_prec_t prec) {
  Coords abs_coords(coords.begin(), coords.end());
  for (auto& q : abs_coords) q = abs(q);
  eval_coords(out, t, abs_coords, prec);
}

}  // namespace

std::optional<std::size_t> Tower::find_level(std::string_view token) const {
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].token == token) return i;
  return std::nullopt;
}

TowerPtr Tower::make(std::string name, std::vector<Level> levels) {
  auto t = std::shared_ptr<Tower>(new Tower());
  t->name_ = std::move(name);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].radicand.size() != (std::size_t{1} << i))
      throw Error("tower level " + levels[i].token + ": radicand has wrong length");
    if (all_zero(levels[i].radicand))
      throw Error("tower level " + levels[i].token + ": zero radicand");
  }
  for (std::size_t k = 0; k < levels.size(); ++k)
    t->prefixes_.push_back(
        make(t->name_ + "/" + std::to_string(k),
             std::vector<Level>(levels.begin(), levels.begin() + static_cast<long>(k))));
  t->levels_ = std::move(levels);
  std::size_t n = t->degree();
  t->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Coords a(n), b(n);
      a[i] = 1;
      b[j] = 1;
      Coords p = mul_rec(t->levels_, t->levels_.size(), a, b);
      for (std::size_t m = 0; m < n; ++m)
        if (sgn(p[m]) != 0) t->table_[i * n + j].push_back({static_cast<std::uint32_t>(m), p[m]});
    }
  }
  return t;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn = sqrt(num), rd = sqrt(den);
  return Rational(rn, rd);
}

bool biquadratic_has_rational_root(const Rational& p, const Rational& q) {
  // x^2 = (-p +- sqrt(p^2 - 4q)) / 2 must itself be a rational square.
  auto disc = rational_sqrt(p * p - 4 * q);
  if (!disc) return false;
  for (int s : {1, -1}) {
    Rational x2 = (-p + s * *disc) / 2;
    if (rational_sqrt(x2)) return true;
  }
  return false;
}

namespace {

TowerPtr build_h3() {
  using L = Tower::Level;
  // sqrt13, then sqrt(A) with A = (sqrt13 - 3)/2, then sqrt(E) with E = 6 + 6 sqrt13.
  std::vector<L> levels{
      {"r13", {Rational(13)}},
      {"rA", {Rational(-3, 2), Rational(1, 2)}},
      {"rE", {Rational(6), Rational(6), Rational(0), Rational(0)}},
  };
  // Degree-8 certificates over Q(sqrt13):
  //   13 is not a rational square;
  //   A = a + b sqrt13 square => x^2 + 13 y^2 = -3/2, impossible over Q;
  //   E square <=> x^4 - 6x^2 + 117 has a rational root;
  //   A*E = 30 - 6 sqrt13 square <=> x^4 - 30x^2 + 117 has a rational root.
  if (rational_sqrt(Rational(13)) || biquadratic_has_rational_root(-6, 117) ||
      biquadratic_has_rational_root(-30, 117))
    throw Error("h3 tower collapses");
  return Tower::make("h3", std::move(levels));
}

}  // namespace

TowerPtr tower_preset(TowerPreset preset) {
  static const TowerPtr h3 = build_h3();
  static const TowerPtr fib = Tower::make(
      "fibonacci", {{"r5", {Rational(5)}}, {"rphi", {Rational(1, 2), Rational(1, 2)}}});
  static const TowerPtr ising = Tower::make("ising", {{"r2", {Rational(2)}}});
  static const TowerPtr rationals = Tower::make("rationals", {});
  switch (preset) {
    case TowerPreset::h3: return h3;
    case TowerPreset::fibonacci: return fib;
    case TowerPreset::ising: return ising;
    case TowerPreset::rationals: return rationals;
  }
  throw Error("unknown tower preset");
}

TowerPreset tower_preset_from_name(std::string_view name) {
  if (name == "h3") return TowerPreset::h3;
  if (name == "fibonacci") return TowerPreset::fibonacci;
  if (name == "ising") return TowerPreset::ising;
  if (name == "rationals") return TowerPreset::rationals;
  throw Error("unknown tower preset: " + std::string(name));
}

bool tower_is_proper(const Tower& tower) {
  for (std::size_t k = 0; k < tower.num_levels(); ++k) {
    const TowerPtr& below = tower.prefix(k);
    FieldScalar g(below, tower.level(k).radicand);
    if (g.sqrt()) return false;
  }
  return true;
}

// FieldScalar

FieldScalar::FieldScalar(TowerPtr tower) : tower_(std::move(tower)), coords_(tower_->degree()) {}

FieldScalar::FieldScalar(TowerPtr tower, const Rational& value) : FieldScalar(std::move(tower)) {
  coords_[0] = value;
}

FieldScalar::FieldScalar(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_->degree()) throw Error("coordinate count does not match tower");
}

FieldScalar FieldScalar::root(TowerPtr tower, std::size_t level) {
  if (level >= tower->num_levels()) throw Error("no such tower level");
  FieldScalar r(std::move(tower));
  r.coords_[std::size_t{1} << level] = 1;
  return r;
}

bool FieldScalar::is_zero() const { return all_zero(coords_); }

bool FieldScalar::is_rational() const {
  return all_zero(std::span<const Rational>(coords_).subspan(1));
}

void FieldScalar::require_same_tower(const FieldScalar& other) const {
  if (tower_ != other.tower_ && tower_->name() != other.tower_->name())
    throw Error("tower mismatch: " + tower_->name() + " vs " + other.tower_->name());
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  require_same_tower(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (sgn(rhs.coords_[i]) != 0) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  require_same_tower(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (sgn(rhs.coords_[i]) != 0) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  for (auto& q : r.coords_) q = -q;
  return r;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  a.require_same_tower(b);
  const Tower& t = *a.tower_;
  std::size_t n = t.degree();
  FieldScalar r(a.tower_);
  Rational prod;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.coords_[j]) == 0) continue;
      prod = a.coords_[i] * b.coords_[j];
      for (const auto& term : t.product(i, j)) r.coords_[term.index] += prod * term.coef;
    }
  }
  return r;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) { return *this = *this * rhs; }

FieldScalar FieldScalar::scaled(const Rational& r) const {
  FieldScalar out = *this;
  for (auto& q : out.coords_) q *= r;
  return out;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  std::size_t k = tower_->num_levels();
  if (k == 0) return FieldScalar(tower_, Rational(1) / coords_[0]);
  // 1/(x0 + x1 s) = (x0 - x1 s) / (x0^2 - x1^2 g)
  std::size_t h = coords_.size() / 2;
  const TowerPtr& below = tower_->prefix(k - 1);
  FieldScalar x0(below, Coords(coords_.begin(), coords_.begin() + static_cast<long>(h)));
  FieldScalar x1(below, Coords(coords_.begin() + static_cast<long>(h), coords_.end()));
  FieldScalar g(below, tower_->level(k - 1).radicand);
  FieldScalar inv_norm = (x0 * x0 - x1 * x1 * g).inverse();
  FieldScalar y0 = x0 * inv_norm;
  FieldScalar y1 = -(x1 * inv_norm);
  Coords out(coords_.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = y0.coords_[i];
    out[h + i] = y1.coords_[i];
  }
  return FieldScalar(tower_, std::move(out));
}

std::optional<FieldScalar> FieldScalar::sqrt() const {
  std::size_t k = tower_->num_levels();
  if (k == 0) {
    auto r = rational_sqrt(coords_[0]);
    if (!r) return std::nullopt;
    return FieldScalar(tower_, *r);
  }
  std::size_t h = coords_.size() / 2;
  const TowerPtr& below = tower_->prefix(k - 1);
  FieldScalar x0(below, Coords(coords_.begin(), coords_.begin() + static_cast<long>(h)));
  FieldScalar x1(below, Coords(coords_.begin() + static_cast<long>(h), coords_.end()));
  FieldScalar g(below, tower_->level(k - 1).radicand);
  auto lift = [&](const FieldScalar& y0, const FieldScalar& y1) {
    Coords out(coords_.size());
    for (std::size_t i = 0; i < h; ++i) {
      out[i] = y0.coords_[i];
      out[h + i] = y1.coords_[i];
    }
    return FieldScalar(tower_, std::move(out));
  };
  FieldScalar zero(below);
  if (x1.is_zero()) {
    if (auto y = x0.sqrt()) return lift(*y, zero);
    if (auto y = (x0 * g.inverse()).sqrt()) return lift(zero, *y);
    return std::nullopt;
  }
  // (y0 + y1 s)^2 = x forces x0^2 - x1^2 g = (y0^2 - y1^2 g)^2.
  auto n = (x0 * x0 - x1 * x1 * g).sqrt();
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    FieldScalar cand = (x0 + n->scaled(s)).scaled(Rational(1, 2));
    if (cand.is_zero()) continue;
    auto y0 = cand.sqrt();
    if (!y0) continue;
    FieldScalar y1 = x1 * (y0->scaled(2)).inverse();
    FieldScalar y = lift(*y0, y1);
    if (y * y == *this) return y;
  }
  return std::nullopt;
}

std::optional<FieldScalar> FieldScalar::sqrt_nonnegative() const {
  auto r = sqrt();
  if (r && r->sign() < 0) return -*r;
  return r;
}

int FieldScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    MpfrValue v(prec), mag(prec);
    eval_coords(v.v, *tower_, coords_, prec);
    eval_magnitude(mag.v, *tower_, coords_, prec);
    // Accumulated rounding error is far below mag * 2^(16 - prec) for these small towers.
    mpfr_mul_2si(mag.v, mag.v, 16 - prec, MPFR_RNDU);
    MpfrValue absv(prec);
    mpfr_abs(absv.v, v.v, MPFR_RNDN);
    if (mpfr_cmp(absv.v, mag.v) > 0) return mpfr_sgn(v.v);
    if (prec > (1 << 16)) throw Error("sign undecided");
  }
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  a.require_same_tower(b);
  return a.coords_ == b.coords_;
}

double approx(const FieldScalar& x, unsigned precision_bits) {
  if (x.is_zero()) return 0.0;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 32;
  MpfrValue v(prec);
  eval_coords(v.v, *x.tower(), x.coords(), prec);
  return mpfr_get_d(v.v, MPFR_RNDN);
}

long round_scaled(const FieldScalar& x, const Rational& scale, const Rational& offset,
                  unsigned precision_bits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  MpfrValue v(prec), q(prec);
  eval_coords(v.v, *x.tower(), x.coords(), prec);
  mpfr_set_q(q.v, scale.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(v.v, v.v, q.v, MPFR_RNDN);
  mpfr_set_q(q.v, offset.get_mpq_t(), MPFR_RNDN);
  mpfr_add(v.v, v.v, q.v, MPFR_RNDN);
  mpfr_round(v.v, v.v);
  return mpfr_get_si(v.v, MPFR_RNDN);
}

unsigned default_precision_bits() {
  if (const char* env = std::getenv("FUSIONCAT_PRECISION_BITS")) {
    char* end = nullptr;
    unsigned long bits = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 53 && bits <= 100000)
      return static_cast<unsigned>(bits);
  }
  return 128;
}

// Named constants

Constant constant_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, Constant> names[] = {
      {"dRho", Constant::dRho},   {"A", Constant::A},
      {"B", Constant::B},         {"C", Constant::C},
      {"Dplus", Constant::Dplus}, {"Dminus", Constant::Dminus},
      {"sqrtA", Constant::sqrtA}, {"bBigon", Constant::bBigon},
      {"tTriangle", Constant::tTriangle}, {"c1", Constant::c1},
      {"c2", Constant::c2}};
  for (const auto& [n, c] : names)
    if (n == name) return c;
  throw Error("unknown constant: " + std::string(name));
}

std::string_view constant_name(Constant c) {
  switch (c) {
    case Constant::dRho: return "dRho";
    case Constant::A: return "A";
    case Constant::B: return "B";
    case Constant::C: return "C";
    case Constant::Dplus: return "Dplus";
    case Constant::Dminus: return "Dminus";
    case Constant::sqrtA: return "sqrtA";
    case Constant::bBigon: return "bBigon";
    case Constant::tTriangle: return "tTriangle";
    case Constant::c1: return "c1";
    case Constant::c2: return "c2";
  }
  return "?";
}

FieldScalar named_constant(Constant c, const TowerPtr& tower) {
  if (tower->name() != "h3") throw Error("constant requires the h3 tower");
  // basis: 1, r13, rA, r13 rA, rE, r13 rE, rA rE, r13 rA rE
  auto v = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    Coords out(8);
    for (const auto& [i, q] : terms) out[static_cast<std::size_t>(i)] = q;
    return FieldScalar(tower, std::move(out));
  };
  switch (c) {
    case Constant::dRho: return v({{0, Rational(3, 2)}, {1, Rational(1, 2)}});
    case Constant::A: return v({{0, Rational(-3, 2)}, {1, Rational(1, 2)}});
    case Constant::B: return v({{0, Rational(-2, 3)}, {1, Rational(1, 3)}});
    case Constant::C: return v({{0, Rational(1, 6)}, {1, Rational(1, 6)}});
    case Constant::Dplus:
      return v({{0, Rational(5, 12)}, {1, Rational(-1, 12)}, {4, Rational(1, 12)}});
    case Constant::Dminus:
      return v({{0, Rational(5, 12)}, {1, Rational(-1, 12)}, {4, Rational(-1, 12)}});
    case Constant::sqrtA: return v({{2, Rational(1)}});
    // sqrt(d) = d * sqrt(A) since A = 1/d
    case Constant::bBigon: return named_constant(Constant::dRho, tower) * v({{2, Rational(1)}});
    case Constant::tTriangle:
      return -(named_constant(Constant::B, tower) * named_constant(Constant::bBigon, tower));
    case Constant::c1: return v({{0, Rational(7, 18)}, {1, Rational(1, 18)}});
    // (1 + sqrt13) / (6 sqrt d) = (1 + sqrt13) sqrt(A) / 6
    case Constant::c2: return v({{2, Rational(1, 6)}, {3, Rational(1, 6)}});
  }
  throw Error("unknown constant");
}

// ParamScalar

namespace {
std::array<FieldScalar, 4> zeros(const TowerPtr& t) {
  return {FieldScalar(t), FieldScalar(t), FieldScalar(t), FieldScalar(t)};
}
}  // namespace

ParamScalar::ParamScalar(TowerPtr tower) : tower_(std::move(tower)), terms_(zeros(tower_)) {}

ParamScalar::ParamScalar(const FieldScalar& constant)
    : tower_(constant.tower()), terms_(zeros(tower_)) {
  terms_[0] = constant;
}

ParamScalar::ParamScalar(TowerPtr tower, std::array<FieldScalar, 4> terms)
    : tower_(std::move(tower)), terms_(std::move(terms)) {}

ParamScalar ParamScalar::p1(TowerPtr tower) {
  ParamScalar r(tower);
  r.terms_[1] = FieldScalar(tower, Rational(1));
  return r;
}

ParamScalar ParamScalar::p2(TowerPtr tower) {
  ParamScalar r(tower);
  r.terms_[2] = FieldScalar(tower, Rational(1));
  return r;
}

ParamScalar ParamScalar::constant(TowerPtr tower, const Rational& value) {
  return ParamScalar(FieldScalar(std::move(tower), value));
}

bool ParamScalar::is_zero() const {
  for (const auto& t : terms_)
    if (!t.is_zero()) return false;
  return true;
}

bool ParamScalar::is_constant() const {
  return terms_[1].is_zero() && terms_[2].is_zero() && terms_[3].is_zero();
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& rhs) {
  for (std::size_t i = 0; i < 4; ++i)
    if (!rhs.terms_[i].is_zero()) terms_[i] += rhs.terms_[i];
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& rhs) {
  for (std::size_t i = 0; i < 4; ++i)
    if (!rhs.terms_[i].is_zero()) terms_[i] -= rhs.terms_[i];
  return *this;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  for (auto& t : r.terms_) t = -t;
  return r;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar r(a.tower_);
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.terms_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (b.terms_[j].is_zero()) continue;
      r.terms_[i ^ j] += a.terms_[i] * b.terms_[j];
    }
  }
  return r;
}

FieldScalar ParamScalar::substitute(int p1, int p2) const {
  FieldScalar r = terms_[0];
  r += p1 > 0 ? terms_[1] : -terms_[1];
  r += p2 > 0 ? terms_[2] : -terms_[2];
  r += p1 * p2 > 0 ? terms_[3] : -terms_[3];
  return r;
}

ParamScalar ParamScalar::inverse() const {
  if (is_constant()) return ParamScalar(terms_[0].inverse());
  // The ring is Q-tower^4 via the four evaluations; invert pointwise and
  // interpolate: coef(m) = 1/4 sum_s s1^{m&1} s2^{m>>1} / value(s).
  ParamScalar r(tower_);
  for (auto [s1, s2] : kSignAssignments) {
    FieldScalar inv = substitute(s1, s2).inverse().scaled(Rational(1, 4));
    for (std::size_t m = 0; m < 4; ++m) {
      int sign = ((m & 1) ? s1 : 1) * ((m & 2) ? s2 : 1);
      r.terms_[m] += sign > 0 ? inv : -inv;
    }
  }
  return r;
}

}  // namespace fusioncat
