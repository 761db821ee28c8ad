#include <doctest.h>

#include <optional>
#include <random>

#include "fusioncat/scalar_text.hpp"
#include "fusioncat/skein.hpp"

using namespace fusioncat;

namespace {

SkeinParams rational_params(long d, long b, long t) {
  auto q = tower_preset(TowerPreset::rationals);
  return {FieldScalar(q, Rational(d)), FieldScalar(q, Rational(b)), FieldScalar(q, Rational(t))};
}

// Every order of moves must give the same value.
void all_orders(const TrivalentGraph& g, const SkeinParams& p, const FieldScalar& acc,
                std::vector<FieldScalar>& out, std::size_t& paths) {
  if (is_empty(g)) {
    out.push_back(acc);
    ++paths;
    return;
  }
  auto moves = available_moves(g);
  REQUIRE_FALSE(moves.empty());
  for (const auto& m : moves) {
    TrivalentGraph h = g;
    FieldScalar f = apply_move(h, m, p);
    h.validate();
    all_orders(h, p, acc * f, out, paths);
  }
}

}  // namespace

TEST_SUITE("skein") {
  TEST_CASE("closed diagrams from the local rules") {
    SkeinParams p = rational_params(3, 5, 7);
    auto val = [&](const TrivalentGraph& g) { return approx(evaluate_closed(g, p)); };
    CHECK(val(circle()) == 3);
    CHECK(val(theta()) == 15);         // bigon then loop: b d
    CHECK(val(tetrahedron()) == 105);  // triangle, theta: t b d
    CHECK(val(prism()) == 735);        // two triangles, theta: t^2 b d
  }

  TEST_CASE("move order does not matter") {
    SkeinParams p = rational_params(3, 5, 7);
    for (const TrivalentGraph& g : {theta(), tetrahedron(), prism()}) {
      std::vector<FieldScalar> vals;
      std::size_t paths = 0;
      all_orders(g, p, FieldScalar(p.d.tower(), Rational(1)), vals, paths);
      CHECK(paths >= 1);
      for (const auto& v : vals) CHECK(v == evaluate_closed(g, p));
    }
  }

  TEST_CASE("graphs are well formed") {
    for (const auto& g : c4_basis()) CHECK_NOTHROW(g.validate());
    CHECK_NOTHROW(square_diagram().validate());
    CHECK(square_diagram().vertex_count() == 4);
    CHECK(square_diagram().boundary_count() == 4);
    TrivalentGraph r = tetrahedron().reflected();
    CHECK_NOTHROW(r.validate());
    SkeinParams p = rational_params(3, 5, 7);
    CHECK(evaluate_closed(r, p) == evaluate_closed(tetrahedron(), p));
  }

  TEST_CASE("square pairings need square-pop") {
    SkeinParams p = rational_params(3, 5, 7);
    auto sq = square_diagram();
    CHECK_THROWS_WITH_AS(evaluate_closed(glue(sq, sq), p), "requires square-pop", Error);
  }

  TEST_CASE("gram matrix") {
    SkeinParams p = rational_params(3, 5, 7);
    auto g = gram_matrix(p);
    // w1,w2 pair to loops; H diagrams pair with loops to a tadpole or a theta,
    // with each other to b * theta and to a tetrahedron.
    long expect[4][4] = {{9, 3, 0, 15}, {3, 9, 15, 0}, {0, 15, 75, 105}, {15, 0, 105, 75}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(g[i][j] == FieldScalar(p.d.tower(), Rational(expect[i][j])));
  }

  TEST_CASE("square-pop against the closed forms on random parameters") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    auto q = tower_preset(TowerPreset::rationals);
    int done = 0;
    while (done < 25) {
      auto r = [&] {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        return FieldScalar(q, x);
      };
      SkeinParams p{r(), r(), r()};
      if (p.b.is_zero() || p.d.is_zero()) continue;
      FieldScalar denom = p.b * p.d + p.t + p.d * p.t;
      if (denom.is_zero()) continue;
      std::optional<SquarePop> got;
      try {
        got = derive_square_pop(p);
      } catch (const Error&) {
        continue;  // singular Gram matrix
      }
      SquarePop closed = square_pop_closed_form(p);
      CHECK(got->cup == closed.cup);
      CHECK(got->tri == closed.tri);
      // the printed formulas, written out again
      FieldScalar cup = p.b * (p.b * p.b + p.b * p.t - p.t * p.t) / denom;
      FieldScalar tri = (p.t * p.t * (p.d + FieldScalar(q, Rational(1))) - p.b * p.b) / denom;
      CHECK(closed.cup == cup);
      CHECK(closed.tri == tri);
      ++done;
    }
  }

  TEST_CASE("h3 constants") {
    H3Constants k = h3_constants();
    auto t = tower_preset(TowerPreset::h3);
    FieldScalar r13 = FieldScalar::root(t, 0), one(t, Rational(1));
    CHECK(k.c1 == (r13 + one.scaled(7)).scaled(Rational(1, 18)));
    CHECK(k.c2 * k.c2 == (r13 - one.scaled(2)).scaled(Rational(1, 9)));
    CHECK(k.c2.sign() > 0);
    CHECK(to_text_expanded(k.c1) == "(7/18)+(1/18)*r13");
    CHECK(k.d == named_constant(Constant::dRho, t));
    CHECK(k.b * k.b == k.d);  // bigon normalised to sqrt(d)
    SquarePop closed = square_pop_closed_form(h3_skein_params());
    CHECK(closed.cup == k.c1);
    CHECK(closed.tri == k.c2);
  }

  TEST_CASE("t sign placement") {
    H3Constants k = h3_constants();
    auto t = tower_preset(TowerPreset::h3);
    FieldScalar B = named_constant(Constant::B, t);
    FieldScalar sqrt_d = named_constant(Constant::bBigon, t);
    CHECK(k.t == -B * sqrt_d);
    FieldScalar five_thirds(t, Rational(5, 3));
    FieldScalar adopted = (five_thirds - k.d.scaled(Rational(2, 3))) * sqrt_d;
    FieldScalar variant = -(k.d.scaled(Rational(2, 3)) + five_thirds) * sqrt_d;
    CHECK(adopted == k.t);
    CHECK_FALSE(variant == k.t);
    CHECK(k.t / sqrt_d == -B);
  }

  TEST_CASE("linear solve") {
    auto q = tower_preset(TowerPreset::rationals);
    auto f = [&](long v) { return FieldScalar(q, Rational(v)); };
    auto x = solve_linear({{f(2), f(1)}, {f(1), f(3)}}, {f(3), f(4)});
    CHECK(x[0] == f(1));
    CHECK(x[1] == f(1));
    CHECK_THROWS_AS(solve_linear({{f(1), f(2)}, {f(2), f(4)}}, {f(1), f(1)}), Error);
  }
}
