#include <doctest.h>

#include "fusioncat/fsymbols.hpp"
#include "fusioncat/scalar_text.hpp"

using namespace fusioncat;

namespace {

const FusionRing& h3() { return builtin_ring(BuiltinRing::h3); }

// Value of the 1x1 block F_u^{abc}.
ParamScalar one_dim(const FSymbolTable& t, const char* a, const char* b, const char* c, const char* u) {
  const FusionRing& r = t.ring();
  FBlock blk = f_block(r, r.from_token(a), r.from_token(b), r.from_token(c), r.from_token(u));
  REQUIRE(blk.dim() == 1);
  return t.get({blk.a, blk.b, blk.c, blk.u, blk.left_labels[0], blk.right_labels[0]});
}

ParamScalar text(const char* s) {
  auto tw = tower_preset(TowerPreset::h3);
  SymbolMap syms;
  for (auto c : {Constant::A, Constant::B, Constant::C, Constant::Dplus, Constant::Dminus, Constant::sqrtA})
    syms.emplace(std::string(constant_name(c)), ParamScalar(named_constant(c, tw)));
  return parse_scalar(s, tw, 1, 1, &syms);
}

}  // namespace

TEST_SUITE("fsymbols") {
  TEST_CASE("published entries") {
    const FSymbolTable& t = h3_table();
    CHECK(t.size() == 1431);
    CHECK(one_dim(t, "1", "1", "1", "1") == text("1"));
    CHECK(one_dim(t, "a", "ar", "asr", "1") == text("-p1"));
    CHECK(one_dim(t, "r", "asr", "ar", "1") == text("p1*p2"));
    CHECK(one_dim(t, "ar", "r", "asr", "1") == text("p2"));
    CHECK(one_dim(t, "r", "ar", "asr", "1") == text("-1"));
    CHECK(one_dim(t, "r", "r", "1", "r") == text("1"));
    CHECK(one_dim(t, "r", "1", "r", "ar") == text("1"));
    const Label r = 3;
    CHECK(t.get({r, r, r, r, r, r}) == text("-B"));
    CHECK_THROWS_AS(t.get({r, r, r, r, 1, r}), Error);
  }

  TEST_CASE("matrix layout") {
    const FSymbolTable& t = h3_table();
    const Label r = 3;
    ParamMatrix m = t.f_matrix(r, r, r, r);
    REQUIRE(m.size() == 4);
    FBlock blk = f_block(h3(), r, r, r, r);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(m[i][j] == t.get({r, r, r, r, blk.left_labels[j], blk.right_labels[i]}));
  }

  TEST_CASE("orthogonality, symbolic and per assignment") {
    auto rep = check_orthogonality(h3_table());
    CHECK(rep.blocks == 513 + 54 + 27);
    CHECK(rep.ok());
    for (auto [p1, p2] : kSignAssignments) CHECK(check_orthogonality(substitute_params(h3_table(), p1, p2)).ok());
  }

  TEST_CASE("orthogonality notices a flipped entry") {
    FSymbolTable t = h3_table();
    const Label r = 3;
    t.set({r, r, r, r, r, r}, -t.get({r, r, r, r, r, r}));
    CHECK_FALSE(check_orthogonality(t).ok());
  }

  TEST_CASE("gauges") {
    const FSymbolTable& t = h3_table();
    GaugeAssignment id(h3());
    CHECK(apply_gauge(t, id).values() == t.values());
    GaugeAssignment g = random_gauge(h3(), 5), h = random_gauge(h3(), 6);
    CHECK(apply_gauge(apply_gauge(t, g), h).values() == apply_gauge(t, g * h).values());
    CHECK(random_gauge(h3(), 5).get(3, 3, 3) == g.get(3, 3, 3));
    // u_rho^{rho rho} = 2. The entry with left = right = 1 never touches that vertex.
    GaugeAssignment two(h3());
    auto tw = tower_preset(TowerPreset::h3);
    two.set(3, 3, 3, FieldScalar(tw, Rational(2)));
    FSymbolTable moved = apply_gauge(t, two);
    const Label r = 3;
    CHECK(moved.get({r, r, r, r, 0, 0}) == t.get({r, r, r, r, 0, 0}));
    // left = rho, right = 1: u(r,1;r) u(r,r;1) / (u(r,r;r) u(r,r;r)) = 1/4
    CHECK(moved.get({r, r, r, r, r, 0}) ==
          t.get({r, r, r, r, r, 0}) * ParamScalar::constant(tw, Rational(1, 4)));
    CHECK_THROWS_AS(two.set(3, 3, 3, FieldScalar(tw)), Error);
  }

  TEST_CASE("serialization round trip") {
    const FSymbolTable& t = h3_table();
    std::string text1 = serialize(t);
    CHECK(text1.rfind("h3fsym v1\n", 0) == 0);
    FSymbolTable back = parse_table(text1);
    CHECK(back.values() == t.values());
    CHECK(serialize(back) == text1);
    FSymbolTable fib(builtin_ring(BuiltinRing::fibonacci));
    for (std::size_t i = 0; i < fib.size(); ++i)
      fib.set_at(i, ParamScalar::constant(fib.ring().tower(), Rational(static_cast<long>(i) + 1)));
    FSymbolTable fb = parse_table(serialize(fib));
    CHECK(fb.ring().name() == "fibonacci");
    CHECK(fb.values() == fib.values());
  }

  TEST_CASE("parse errors name the line") {
    std::string good = serialize(h3_table());
    auto line_of = [](const std::string& s) {
      try {
        parse_table(s);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("h3fsym v2\n") == 1);
    std::string bad = good;
    auto pos = bad.find(" = ", bad.find("\nF "));
    bad.replace(pos, 3, "   ");
    std::size_t expect = 1 + std::count(good.begin(), good.begin() + static_cast<long>(pos), '\n');
    CHECK(line_of(bad) == expect);
    // duplicate entry
    auto first = good.find("\nF ");
    auto end = good.find('\n', first + 1);
    std::string dup = good + good.substr(first + 1, end - first);
    CHECK(line_of(dup) > 0);
    // missing entry
    std::string missing = good;
    missing.erase(first + 1, end - first);
    CHECK_THROWS_AS(parse_table(missing), ParseError);
    // inadmissible key
    CHECK(line_of("h3fsym v1\nF r r r r a r = 1\n") == 2);
    CHECK_THROWS_AS(load_table("/nonexistent/path"), Error);
  }

  TEST_CASE("substitution") {
    FSymbolTable s = substitute_params(h3_table(), -1, 1);
    CHECK(one_dim(s, "a", "ar", "asr", "1") == text("1"));
    for (const auto& v : s.values()) CHECK(v.is_constant());
  }
}
