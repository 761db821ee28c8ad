#include <doctest.h>

#include <cmath>

#include "fusioncat/fusionring.hpp"

using namespace fusioncat;

namespace {

// Count of (a,b,c,u,left,right) with all four vertices allowed, by direct loop.
std::size_t count_keys(const FusionRing& r) {
  std::size_t n = 0, s = r.size();
  for (Label a = 0; a < s; ++a)
    for (Label b = 0; b < s; ++b)
      for (Label c = 0; c < s; ++c)
        for (Label u = 0; u < s; ++u)
          for (Label f = 0; f < s; ++f)
            for (Label e = 0; e < s; ++e)
              n += r.n(a, b, f) && r.n(f, c, u) && r.n(b, c, e) && r.n(a, e, u);
  return n;
}

}  // namespace

TEST_SUITE("fusionring") {
  TEST_CASE("built-in rings pass the ring checks") {
    for (auto w : {BuiltinRing::h3, BuiltinRing::z3_pointed, BuiltinRing::fibonacci, BuiltinRing::ising}) {
      const FusionRing& r = builtin_ring(w);
      CHECK(r.multiplicity_free());
      for (const auto& c : check_ring(r)) {
        INFO(r.name() << ": " << c.invariant);
        CHECK(c.pass);
      }
      CHECK(enumerate_fkeys(r).size() == count_keys(r));
    }
  }

  TEST_CASE("h3 fusion rules") {
    const FusionRing& r = builtin_ring(BuiltinRing::h3);
    Label one = r.from_token("1"), a = r.from_token("a"), as = r.from_token("as"),
          rho = r.from_token("r"), ar = r.from_token("ar"), asr = r.from_token("asr");
    CHECK(r.fuses(a, a, as));
    CHECK(r.fuses(a, as, one));
    CHECK(r.dual(a) == as);
    CHECK(r.dual(rho) == rho);
    CHECK(r.fuses(a, rho, ar));
    CHECK(r.fuses(rho, a, asr));  // rho alpha = alpha* rho
    for (Label c : {one, rho, ar, asr}) CHECK(r.fuses(rho, rho, c));
    CHECK_FALSE(r.fuses(rho, rho, a));
    double d = approx(r.dim(rho));
    CHECK(d == doctest::Approx((3 + std::sqrt(13.0)) / 2));
    CHECK(approx(r.dim(a)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(r.from_token("q"), Error);
  }

  TEST_CASE("key counts and block census") {
    const FusionRing& h3 = builtin_ring(BuiltinRing::h3);
    CHECK(enumerate_fkeys(h3).size() == 1431);
    auto census = block_census(h3);
    CHECK(census[1] == 513);
    CHECK(census[3] == 54);
    CHECK(census[4] == 27);
    CHECK(513 + 54 * 9 + 27 * 16 == 1431);
    CHECK(enumerate_fkeys(builtin_ring(BuiltinRing::z3_pointed)).size() == 27);
    auto fib = block_census(builtin_ring(BuiltinRing::fibonacci));
    CHECK(fib[2] == 1);
  }

  TEST_CASE("keys") {
    const FusionRing& r = builtin_ring(BuiltinRing::h3);
    auto keys = enumerate_fkeys(r);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    for (const auto& k : keys) CHECK(admissible(r, k));
    CHECK_FALSE(admissible(r, FKey{3, 3, 3, 3, 1, 3}));
    FBlock b = f_block(r, 3, 3, 3, 3);
    CHECK(b.dim() == 4);
    CHECK(builtin_ring_from_name("fib") == BuiltinRing::fibonacci);
    CHECK(builtin_ring_from_name("z3") == BuiltinRing::z3_pointed);
  }
}
