#include <doctest.h>

#include <cmath>

#include "fusioncat/pentagon.hpp"
#include "fusioncat/solver.hpp"
#include "oracle.hpp"

using namespace fusioncat;

namespace {

// Every solver table agrees with some brute-force solution up to +-1 vertex
// gauges, and every brute-force solution is reached this way.
void check_against_oracle(const FusionRing& ring) {
  auto refs = oracle::brute_force(ring);
  REQUIRE_FALSE(refs.empty());
  auto tables = solve(ring);
  REQUIRE_FALSE(tables.empty());
  std::vector<bool> reached(refs.size(), false);
  for (const auto& t : tables) {
    auto got = oracle::approx_values(t);
    bool any = false;
    for (std::size_t i = 0; i < refs.size(); ++i)
      if (oracle::equal_up_to_sign_gauge(ring, refs[i], got)) any = reached[i] = true;
    CHECK(any);
    CHECK(verify_all(t).ok());
    CHECK(check_orthogonality(t).ok());
    CHECK(check_triangle(t).ok());
  }
  for (bool r : reached) CHECK(r);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("seeds") {
    CHECK(seed(builtin_ring(BuiltinRing::z3_pointed)).known_count() == 27);
    // all entries with a unit among a, b, c (ten for fibonacci)
    CHECK(seed(builtin_ring(BuiltinRing::fibonacci)).known_count() == 10);
    PartialTable h = seed(builtin_ring(BuiltinRing::h3));
    CHECK(h.known_count() == 174);
    auto cmp = compare_to_dataset(h, h3_table());
    CHECK(cmp.compared == 174);
    CHECK(cmp.exact == 174);
  }

  TEST_CASE("h3 seeds never contradict each other") {
    PartialTable h = seed(builtin_ring(BuiltinRing::h3));
    FSymbolTable t = h3_table();
    for (std::size_t i = 0; i < h.keys.size(); ++i)
      if (h.known[i]) t.set(h.keys[i], ParamScalar(*h.known[i]));
    std::size_t checked = 0;
    for (const auto& in : enumerate_instances(t.ring())) {
      std::vector<FKey> ks{in.lhs1(), in.lhs2()};
      for (Label e : in.e_range) ks.insert(ks.end(), {in.rhs1(e), in.rhs2(e), in.rhs3(e)});
      bool seeded = true;
      for (const auto& k : ks) seeded = seeded && h.known[static_cast<std::size_t>(h.index_of(k))];
      if (!seeded) continue;
      ++checked;
      CHECK(residual(in, t).is_zero());
    }
    CHECK(checked > 0);
  }

  TEST_CASE("pointed ring is complete after seeding") {
    auto res = propagate(seed(builtin_ring(BuiltinRing::z3_pointed)));
    CHECK(res.report.rounds == 0);
    CHECK(res.report.remaining == 0);
    auto tables = solve(builtin_ring(BuiltinRing::z3_pointed));
    REQUIRE(tables.size() == 1);
    for (const auto& v : tables[0].values()) CHECK(v == ParamScalar::constant(v.tower(), 1));
  }

  TEST_CASE("fibonacci matches the brute-force oracle") {
    const FusionRing& ring = builtin_ring(BuiltinRing::fibonacci);
    check_against_oracle(ring);
    // the 2x2 block up to signs
    auto t = solve(ring).front();
    double phi = (1 + std::sqrt(5.0)) / 2;
    ParamMatrix m = t.f_matrix(1, 1, 1, 1);
    CHECK(std::abs(approx(m[0][0].term(0))) == doctest::Approx(1 / phi));
    CHECK(std::abs(approx(m[0][1].term(0))) == doctest::Approx(1 / std::sqrt(phi)));
    CHECK(std::abs(approx(m[1][0].term(0))) == doctest::Approx(1 / std::sqrt(phi)));
    CHECK(std::abs(approx(m[1][1].term(0))) == doctest::Approx(1 / phi));
    CHECK(approx(m[0][0].term(0) * m[1][1].term(0)) < 0);
  }

  TEST_CASE("ising matches the brute-force oracle") {
    const FusionRing& ring = builtin_ring(BuiltinRing::ising);
    check_against_oracle(ring);
    Label s = ring.from_token("s"), p = ring.from_token("p");
    for (const auto& t : solve(ring)) {
      ParamMatrix m = t.f_matrix(s, s, s, s);
      for (const auto& row : m)
        for (const auto& v : row) CHECK(std::abs(approx(v.term(0))) == doctest::Approx(std::sqrt(0.5)));
      FBlock b1 = f_block(ring, p, s, p, s), b2 = f_block(ring, s, p, s, p);
      CHECK(t.get({p, s, p, s, b1.left_labels[0], b1.right_labels[0]}) ==
            ParamScalar::constant(ring.tower(), -1));
      CHECK(t.get({s, p, s, p, b2.left_labels[0], b2.right_labels[0]}) ==
            ParamScalar::constant(ring.tower(), -1));
    }
  }

  TEST_CASE("reports are deterministic") {
    const FusionRing& ring = builtin_ring(BuiltinRing::ising);
    SolveReport a, b;
    solve(ring, &a);
    solve(ring, &b);
    std::size_t n = enumerate_fkeys(ring).size();
    CHECK(report_text(a, n) == report_text(b, n));
    std::size_t sum = 0;
    for (auto r : a.resolved_per_round) sum += r;
    CHECK(sum == n - a.remaining - a.seeds);
  }

  TEST_CASE("h3 propagation agrees with the dataset where it resolves") {
    auto res = propagate(seed(builtin_ring(BuiltinRing::h3)), false);
    CHECK(res.table.known_count() >= 174);
    std::size_t sum = 0;
    for (auto r : res.report.resolved_per_round) sum += r;
    CHECK(sum == res.table.known_count() - res.report.seeds);
    auto cmp = compare_to_dataset(res.table, h3_table());
    CHECK(cmp.all_match());
  }

  TEST_CASE("empty partial compares vacuously") {
    PartialTable empty(builtin_ring(BuiltinRing::h3));
    auto cmp = compare_to_dataset(empty, h3_table());
    CHECK(cmp.compared == 0);
    CHECK(cmp.all_match());
  }

  TEST_CASE("contradictory seeds") {
    PartialTable p = seed(builtin_ring(BuiltinRing::fibonacci));
    // F_1^{ttt} = 2 is not orthogonal
    long i = p.index_of({1, 1, 1, 0, 1, 1});
    REQUIRE(i >= 0);
    p.known[static_cast<std::size_t>(i)] = FieldScalar(p.ring.tower(), Rational(2));
    CHECK_THROWS_WITH_AS(propagate(p), "inconsistent seeds", Error);
  }
}
