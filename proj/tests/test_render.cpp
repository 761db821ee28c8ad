#include <doctest.h>

#include "fusioncat/render.hpp"

using namespace fusioncat;

TEST_SUITE("render") {
  TEST_CASE("pixel mapping") {
    auto t = tower_preset(TowerPreset::h3);
    CHECK(pixel_for(FieldScalar(t, Rational(1))) == Rgb{0, 0, 0});
    CHECK(pixel_for(FieldScalar(t, Rational(-1))) == Rgb{255, 255, 255});
    CHECK(pixel_for(-named_constant(Constant::B, t)) == Rgb{0, 196, 0});
    CHECK(pixel_for(FieldScalar(t)) == Rgb{0, 128, 0});  // 127.5 rounds away from zero
    CHECK_THROWS_AS(pixel_for(named_constant(Constant::dRho, t)), Error);
    CHECK_THROWS_AS(pixel_for(FieldScalar(t, Rational(-1001, 1000))), Error);
  }

  TEST_CASE("seeded order") {
    auto p = seeded_permutation(1431, 42);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
    CHECK(p == seeded_permutation(1431, 42));
    CHECK(p != seeded_permutation(1431, 43));
    std::uint64_t seed = 0;
    CHECK(parse_order("seeded:17", seed) == RenderSpec::Order::seeded);
    CHECK(seed == 17);
    CHECK(parse_order("sorted", seed) == RenderSpec::Order::sorted);
    CHECK_THROWS_AS(parse_order("seeded:", seed), Error);
    CHECK_THROWS_AS(parse_order("random", seed), Error);
  }

  TEST_CASE("h3 image") {
    const FSymbolTable& table = h3_table();
    Image img = render_table(table, 1, 1, {});
    CHECK(img.width == 38);
    CHECK(img.height == 38);
    std::size_t plus = 0, minus = 0;
    auto tw = table.ring().tower();
    for (std::size_t i = 0; i < table.size(); ++i) {
      FieldScalar v = table.at(i).substitute(1, 1);
      Rgb px = img.pixels[i];
      if (v == FieldScalar(tw, Rational(1))) {
        ++plus;
        CHECK(px == Rgb{0, 0, 0});
      } else if (v == FieldScalar(tw, Rational(-1))) {
        ++minus;
        CHECK(px == Rgb{255, 255, 255});
      } else {
        CHECK(px.r == 0);
        CHECK(px.b == 0);
      }
    }
    CHECK(plus > 0);
    CHECK(minus > 0);
    for (std::size_t i = table.size(); i < img.pixels.size(); ++i) CHECK(img.pixels[i] == Rgb{128, 128, 128});

    std::string ppm = to_ppm(img);
    CHECK(ppm.rfind("P6\n38 38\n255\n", 0) == 0);
    CHECK(ppm.size() == std::string("P6\n38 38\n255\n").size() + 38 * 38 * 3);
    CHECK(ppm == to_ppm(render_table(table, 1, 1, {})));

    RenderSpec shuffled{RenderSpec::Order::seeded, 9, 0};
    Image s = render_table(table, 1, 1, shuffled);
    auto perm = seeded_permutation(table.size(), 9);
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(s.pixels[i] == img.pixels[perm[i]]);

    Image wide = render_table(table, 1, 1, {RenderSpec::Order::sorted, 0, 100});
    CHECK(wide.width == 100);
    CHECK(wide.height == 15);
  }
}
