#include "fusioncat/render.hpp"

#include <charconv>
#include <numeric>

namespace fusioncat {

RenderSpec::Order parse_order(std::string_view text, std::uint64_t& seed) {
  if (text == "sorted") return RenderSpec::Order::sorted;
  constexpr std::string_view prefix = "seeded:";
  if (text.starts_with(prefix)) {
    std::string_view digits = text.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return RenderSpec::Order::seeded;
  }
  throw Error("bad order '" + std::string(text) + "' (expected sorted or seeded:<n>)");
}

Rgb pixel_for(const FieldScalar& v) {
  const TowerPtr& t = v.tower();
  FieldScalar one(t, Rational(1));
  if (v == one) return {0, 0, 0};
  if (v == -one) return {255, 255, 255};
  if ((v - one).sign() > 0 || (v + one).sign() < 0)
    throw Error("value " + std::to_string(approx(v)) + " outside [-1, 1]");
  long g = round_scaled(v, Rational(-255, 2), Rational(255, 2), 64);
  return {0, static_cast<std::uint8_t>(g), 0};
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t state = seed;
  for (std::size_t i = n; i > 1; --i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::size_t j = static_cast<std::size_t>((state >> 32) % i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

Image render_table(const FSymbolTable& table, int p1, int p2, const RenderSpec& spec) {
  std::size_t n = table.size();
  Image img;
  img.width = spec.width;
  if (img.width == 0) {
    img.width = 1;
    while (img.width * img.width < n) ++img.width;
  }
  img.height = n == 0 ? 0 : (n + img.width - 1) / img.width;
  img.pixels.assign(img.width * img.height, Rgb{128, 128, 128});

  std::vector<std::size_t> order(n);
  if (spec.order == RenderSpec::Order::seeded)
    order = seeded_permutation(n, spec.seed);
  else
    std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i)
    img.pixels[i] = pixel_for(table.at(order[i]).substitute(p1, p2));
  return img;
}

std::string to_ppm(const Image& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.reserve(out.size() + img.pixels.size() * 3);
  for (const Rgb& p : img.pixels) {
    out.push_back(static_cast<char>(p.r));
    out.push_back(static_cast<char>(p.g));
    out.push_back(static_cast<char>(p.b));
  }
  return out;
}

}  // namespace fusioncat
