#include <doctest.h>

#include <random>

#include "fusioncat/scalar_text.hpp"

using namespace fusioncat;

TEST_SUITE("scalar_text") {
  TEST_CASE("canonical forms") {
    auto t = tower_preset(TowerPreset::h3);
    CHECK(to_text(named_constant(Constant::A, t)) == "(-3/2+1/2*r13)");
    CHECK(to_text(named_constant(Constant::sqrtA, t)) == "(1)*rA");
    CHECK(to_text(FieldScalar::root(t, 0)) == "(r13)");
    CHECK(to_text(-FieldScalar::root(t, 0)) == "(-r13)");
    CHECK(to_text(FieldScalar(t)) == "0");
    CHECK(to_text(ParamScalar(named_constant(Constant::A, t)) * ParamScalar::p1(t)) ==
          "(-3/2+1/2*r13)*p1");
    CHECK(to_text_expanded(named_constant(Constant::c1, t)) == "(7/18)+(1/18)*r13");
  }

  TEST_CASE("round trip on random elements") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
    for (auto preset : {TowerPreset::h3, TowerPreset::fibonacci, TowerPreset::ising,
                        TowerPreset::rationals}) {
      auto t = tower_preset(preset);
      for (int i = 0; i < 30; ++i) {
        std::array<FieldScalar, 4> terms{FieldScalar(t), FieldScalar(t), FieldScalar(t), FieldScalar(t)};
        for (auto& term : terms) {
          std::vector<Rational> c;
          for (std::size_t j = 0; j < t->degree(); ++j) {
            Rational q(num(rng) * (rng() % 3 == 0 ? 0 : 1), den(rng));
            q.canonicalize();
            c.push_back(q);
          }
          term = FieldScalar(t, c);
        }
        ParamScalar x(t, terms);
        CHECK(parse_scalar(to_text(x), t) == x);
        CHECK(parse_scalar(to_text_expanded(terms[0]), t) == ParamScalar(terms[0]));
      }
    }
  }

  TEST_CASE("grammar") {
    auto t = tower_preset(TowerPreset::h3);
    CHECK(parse_scalar("3/2+1/2*r13", t) == ParamScalar(named_constant(Constant::dRho, t)));
    CHECK(parse_scalar("-(2/3) + r13/3", t) == ParamScalar(named_constant(Constant::B, t)));
    CHECK(parse_scalar("rA*rA", t) == ParamScalar(named_constant(Constant::A, t)));
    CHECK(parse_scalar("p1*p1 - 1", t).is_zero());
    CHECK(parse_scalar("1/(1+r13)", t) * parse_scalar("1+r13", t) == ParamScalar::constant(t, 1));
    SymbolMap syms{{"B", ParamScalar(named_constant(Constant::B, t))}};
    CHECK(parse_scalar("-B*p2", t, 1, 1, &syms) ==
          -ParamScalar(named_constant(Constant::B, t)) * ParamScalar::p2(t));
  }

  TEST_CASE("errors carry positions") {
    auto t = tower_preset(TowerPreset::h3);
    try {
      parse_scalar("1 + foo", t, 4, 10);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() == 14);
      CHECK(e.reason().find("unknown token 'foo'") != std::string::npos);
    }
    try {
      parse_scalar("1/(1-1)", t);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.reason() == "zero denominator");
    }
    CHECK_THROWS_AS(parse_scalar("(1+2", t), ParseError);
    CHECK_THROWS_AS(parse_scalar("", t), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 2", t), ParseError);
    CHECK_THROWS_AS(parse_scalar("r5", t), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/(1+p1)", t), ParseError);
  }
}
