#ifndef FUSIONCAT_RENDER_HPP
#define FUSIONCAT_RENDER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusioncat/fsymbols.hpp"

namespace fusioncat {

struct RenderSpec {
  enum class Order { sorted, seeded } order = Order::sorted;
  std::uint64_t seed = 0;
  std::size_t width = 0;  // 0: ceil(sqrt(count))
};

// "sorted" or "seeded:<n>".
RenderSpec::Order parse_order(std::string_view text, std::uint64_t& seed);

struct Rgb {
  std::uint8_t r, g, b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// +1 black, -1 white, anything else (0, round(255(1-v)/2), 0). Throws when v
// lies outside [-1, 1].
Rgb pixel_for(const FieldScalar& v);

// 64-bit LCG x -> 6364136223846793005 x + 1442695040888963407 driving a
// Fisher-Yates shuffle; j is taken from the high 32 bits.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

struct Image {
  std::size_t width = 0, height = 0;
  std::vector<Rgb> pixels;  // row major
};

// One pixel per entry of the table at (p1, p2); trailing cells gray.
Image render_table(const FSymbolTable& table, int p1, int p2, const RenderSpec& spec);

// Binary P6 with maxval 255.
std::string to_ppm(const Image& img);

}  // namespace fusioncat

#endif  // FUSIONCAT_RENDER_HPP
