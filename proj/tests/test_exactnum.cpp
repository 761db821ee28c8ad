#include <doctest.h>

#include <cmath>
#include <random>

#include "fusioncat/exactnum.hpp"

using namespace fusioncat;

namespace {

FieldScalar random_element(const TowerPtr& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < t->degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return FieldScalar(t, c);
}

const double kSqrt13 = std::sqrt(13.0);

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("presets are proper towers") {
    for (auto p : {TowerPreset::h3, TowerPreset::fibonacci, TowerPreset::ising, TowerPreset::rationals})
      CHECK(tower_is_proper(*tower_preset(p)));
    CHECK(tower_preset(TowerPreset::h3)->degree() == 8);
    CHECK(tower_preset(TowerPreset::fibonacci)->degree() == 4);
    CHECK(tower_preset_from_name("ising") == TowerPreset::ising);
    CHECK_THROWS_AS(tower_preset_from_name("nope"), Error);
  }

  TEST_CASE("rational roots of biquadratics") {
    CHECK(biquadratic_has_rational_root(Rational(-5), Rational(4)));  // (x^2-1)(x^2-4)
    CHECK_FALSE(biquadratic_has_rational_root(Rational(-6), Rational(117)));
    CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  }

  TEST_CASE("named constants against floating point") {
    auto t = tower_preset(TowerPreset::h3);
    double d = (3 + kSqrt13) / 2;
    CHECK(approx(named_constant(Constant::dRho, t)) == doctest::Approx(d).epsilon(1e-14));
    CHECK(approx(named_constant(Constant::A, t)) == doctest::Approx((kSqrt13 - 3) / 2).epsilon(1e-14));
    CHECK(approx(named_constant(Constant::B, t)) == doctest::Approx((kSqrt13 - 2) / 3).epsilon(1e-14));
    CHECK(approx(named_constant(Constant::C, t)) == doctest::Approx((kSqrt13 + 1) / 6).epsilon(1e-14));
    double root = std::sqrt(6 + 6 * kSqrt13);
    CHECK(approx(named_constant(Constant::Dplus, t)) ==
          doctest::Approx((5 - kSqrt13 + root) / 12).epsilon(1e-14));
    CHECK(approx(named_constant(Constant::Dminus, t)) ==
          doctest::Approx((5 - kSqrt13 - root) / 12).epsilon(1e-14));
    CHECK(approx(named_constant(Constant::sqrtA, t)) ==
          doctest::Approx(std::sqrt((kSqrt13 - 3) / 2)).epsilon(1e-14));
    CHECK(approx(named_constant(Constant::c1, t)) == doctest::Approx((kSqrt13 + 7) / 18).epsilon(1e-14));
    double c2 = named_constant(Constant::c2, t).sign() > 0 ? approx(named_constant(Constant::c2, t)) : -1;
    CHECK(c2 == doctest::Approx(std::sqrt(kSqrt13 - 2) / 3).epsilon(1e-14));
  }

  TEST_CASE("algebraic identities of the constants") {
    auto t = tower_preset(TowerPreset::h3);
    FieldScalar d = named_constant(Constant::dRho, t);
    FieldScalar one(t, Rational(1));
    CHECK(d * d == d.scaled(3) + one);  // d^2 = 3d + 1
    FieldScalar a = named_constant(Constant::sqrtA, t);
    CHECK(a * a == named_constant(Constant::A, t));
    CHECK(named_constant(Constant::bBigon, t) == d * a);
    FieldScalar c2 = named_constant(Constant::c2, t);
    FieldScalar r13 = FieldScalar::root(t, 0);
    CHECK(c2 * c2 == (r13 - one.scaled(2)).scaled(Rational(1, 9)));
  }

  TEST_CASE("random field axioms and the real embedding") {
    std::mt19937_64 rng(7);
    for (auto preset : {TowerPreset::h3, TowerPreset::fibonacci, TowerPreset::ising}) {
      auto t = tower_preset(preset);
      for (int i = 0; i < 40; ++i) {
        FieldScalar x = random_element(t, rng), y = random_element(t, rng), z = random_element(t, rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == FieldScalar(t));
        if (!x.is_zero()) {
          CHECK(x * x.inverse() == FieldScalar(t, Rational(1)));
          CHECK((y / x) * x == y);
        }
        double ax = approx(x), ay = approx(y);
        CHECK(approx(x * y) == doctest::Approx(ax * ay).epsilon(1e-12).scale(1));
        CHECK(approx(x + y) == doctest::Approx(ax + ay).epsilon(1e-12).scale(1));
        int expect = ax > 1e-9 ? 1 : (ax < -1e-9 ? -1 : 0);
        if (expect != 0) CHECK(x.sign() == expect);
      }
    }
  }

  TEST_CASE("square roots") {
    std::mt19937_64 rng(11);
    auto t = tower_preset(TowerPreset::h3);
    for (int i = 0; i < 20; ++i) {
      FieldScalar x = random_element(t, rng);
      auto r = (x * x).sqrt_nonnegative();
      REQUIRE(r.has_value());
      CHECK((*r == x || *r == -x));
      CHECK(r->sign() >= 0);
    }
    FieldScalar two(tower_preset(TowerPreset::rationals), Rational(2));
    CHECK_FALSE(two.sqrt().has_value());
    auto phi2 = FieldScalar(tower_preset(TowerPreset::fibonacci),
                            std::vector<Rational>{Rational(3, 2), Rational(1, 2), 0, 0});
    auto phi = phi2.sqrt_nonnegative();
    REQUIRE(phi.has_value());  // phi^2 = (3+r5)/2
    CHECK(approx(*phi) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  }

  TEST_CASE("sign of tiny differences") {
    auto t = tower_preset(TowerPreset::h3);
    FieldScalar r13 = FieldScalar::root(t, 0);
    // 3.605551275... vs 3605551275/10^9
    CHECK((r13 - FieldScalar(t, Rational(3605551275, 1000000000))).sign() == 1);
    CHECK((r13 - FieldScalar(t, Rational(3605551276, 1000000000))).sign() == -1);
    CHECK(FieldScalar(t).sign() == 0);
  }

  TEST_CASE("round_scaled rounds half away from zero") {
    auto t = tower_preset(TowerPreset::rationals);
    CHECK(round_scaled(FieldScalar(t, Rational(1, 2)), 1, 0, 64) == 1);
    CHECK(round_scaled(FieldScalar(t, Rational(-1, 2)), 1, 0, 64) == -1);
    CHECK(round_scaled(FieldScalar(t, Rational(5, 2)), 1, 0, 64) == 3);
    CHECK(round_scaled(FieldScalar(t, Rational(1, 3)), 3, 1, 64) == 2);
  }

  TEST_CASE("sign parameters") {
    auto t = tower_preset(TowerPreset::h3);
    ParamScalar p1 = ParamScalar::p1(t), p2 = ParamScalar::p2(t);
    ParamScalar one = ParamScalar::constant(t, 1);
    CHECK(p1 * p1 == one);
    CHECK(p2 * p2 == one);
    ParamScalar x = one + p1 * p2 + p1.inverse();
    for (auto [a, b] : kSignAssignments)
      CHECK(x.substitute(a, b) == FieldScalar(t, Rational(1 + a * b + a)));
    ParamScalar y = ParamScalar::constant(t, 3) + p1;  // 2 or 4
    ParamScalar yi = y.inverse();
    CHECK(y * yi == one);
    CHECK_THROWS_AS((one + p1).inverse(), Error);
  }
}
