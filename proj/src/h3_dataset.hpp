#ifndef FUSIONCAT_SRC_H3_DATASET_HPP
#define FUSIONCAT_SRC_H3_DATASET_HPP

#include <vector>

namespace fusioncat::detail {

struct H3RawEntry {
  const char *u, *a, *b, *c, *right, *left, *value;
};

// Values are products of A, B, C, Dplus, Dminus, sqrtA, p1, p2 with an optional sign.
const std::vector<H3RawEntry>& h3_raw_entries();

}  // namespace fusioncat::detail

#endif
