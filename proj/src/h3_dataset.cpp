// F-symbol values of the H3 fusion category, two-parameter real solution.
// Fields: u a b c right left value. Rows of the printed 3x3 and 4x4 tables
// are the right-tree label, columns the left-tree label.

#include "h3_dataset.hpp"

namespace fusioncat::detail {

const std::vector<H3RawEntry>& h3_raw_entries() {
  static const std::vector<H3RawEntry> entries{
    // one-dimensional
    {"1", "1", "1", "1", "1", "1", "1"},
    {"1", "1", "a", "as", "1", "a", "1"},
    {"1", "1", "as", "a", "1", "as", "1"},
    {"1", "1", "r", "r", "1", "r", "1"},
    {"1", "1", "ar", "ar", "1", "ar", "1"},
    {"1", "1", "asr", "asr", "1", "asr", "1"},
    {"1", "a", "1", "as", "as", "a", "1"},
    {"1", "a", "a", "a", "as", "as", "1"},
    {"1", "a", "as", "1", "as", "1", "1"},
    {"1", "a", "r", "ar", "as", "ar", "1"},
    {"1", "a", "ar", "asr", "as", "asr", "-p1"},
    {"1", "a", "asr", "r", "as", "r", "1"},
    {"1", "as", "1", "a", "a", "as", "1"},
    {"1", "as", "a", "1", "a", "1", "1"},
    {"1", "as", "as", "as", "a", "a", "1"},
    {"1", "as", "r", "asr", "a", "asr", "1"},
    {"1", "as", "ar", "r", "a", "r", "1"},
    {"1", "as", "asr", "ar", "a", "ar", "-p1"},
    {"1", "r", "1", "r", "r", "r", "1"},
    {"1", "r", "a", "asr", "r", "asr", "1"},
    {"1", "r", "as", "ar", "r", "ar", "1"},
    {"1", "r", "r", "1", "r", "1", "1"},
    {"1", "r", "r", "r", "r", "r", "1"},
    {"1", "r", "r", "ar", "r", "ar", "1"},
    {"1", "r", "r", "asr", "r", "asr", "1"},
    {"1", "r", "ar", "a", "r", "as", "1"},
    {"1", "r", "ar", "r", "r", "r", "1"},
    {"1", "r", "ar", "ar", "r", "ar", "1"},
    {"1", "r", "ar", "asr", "r", "asr", "-1"},
    {"1", "r", "asr", "as", "r", "a", "1"},
    {"1", "r", "asr", "r", "r", "r", "1"},
    {"1", "r", "asr", "ar", "r", "ar", "p1*p2"},
    {"1", "r", "asr", "asr", "r", "asr", "-p1*p2"},
    {"1", "ar", "1", "ar", "ar", "ar", "1"},
    {"1", "ar", "a", "r", "ar", "r", "1"},
    {"1", "ar", "as", "asr", "ar", "asr", "1"},
    {"1", "ar", "r", "as", "ar", "a", "1"},
    {"1", "ar", "r", "r", "ar", "r", "1"},
    {"1", "ar", "r", "ar", "ar", "ar", "1"},
    {"1", "ar", "r", "asr", "ar", "asr", "p2"},
    {"1", "ar", "ar", "1", "ar", "1", "1"},
    {"1", "ar", "ar", "r", "ar", "r", "1"},
    {"1", "ar", "ar", "ar", "ar", "ar", "1"},
    {"1", "ar", "ar", "asr", "ar", "asr", "-1"},
    {"1", "ar", "asr", "a", "ar", "as", "-p1"},
    {"1", "ar", "asr", "r", "ar", "r", "p1"},
    {"1", "ar", "asr", "ar", "ar", "ar", "1"},
    {"1", "ar", "asr", "asr", "ar", "asr", "-1"},
    {"1", "asr", "1", "asr", "asr", "asr", "1"},
    {"1", "asr", "a", "ar", "asr", "ar", "1"},
    {"1", "asr", "as", "r", "asr", "r", "1"},
    {"1", "asr", "r", "a", "asr", "as", "1"},
    {"1", "asr", "r", "r", "asr", "r", "1"},
    {"1", "asr", "r", "ar", "asr", "ar", "-p1"},
    {"1", "asr", "r", "asr", "asr", "asr", "1"},
    {"1", "asr", "ar", "as", "asr", "a", "-p1"},
    {"1", "asr", "ar", "r", "asr", "r", "p1"},
    {"1", "asr", "ar", "ar", "asr", "ar", "-1"},
    {"1", "asr", "ar", "asr", "asr", "asr", "1"},
    {"1", "asr", "asr", "1", "asr", "1", "1"},
    {"1", "asr", "asr", "r", "asr", "r", "-p1*p2"},
    {"1", "asr", "asr", "ar", "asr", "ar", "-1"},
    {"1", "asr", "asr", "asr", "asr", "asr", "1"},
    {"a", "1", "1", "a", "a", "1", "1"},
    {"a", "1", "a", "1", "a", "a", "1"},
    {"a", "1", "as", "as", "a", "as", "1"},
    {"a", "1", "r", "asr", "a", "r", "1"},
    {"a", "1", "ar", "r", "a", "ar", "1"},
    {"a", "1", "asr", "ar", "a", "asr", "1"},
    {"a", "a", "1", "1", "1", "a", "1"},
    {"a", "a", "a", "as", "1", "as", "1"},
    {"a", "a", "as", "a", "1", "1", "1"},
    {"a", "a", "r", "r", "1", "ar", "1"},
    {"a", "a", "ar", "ar", "1", "asr", "1"},
    {"a", "a", "asr", "asr", "1", "r", "1"},
    {"a", "as", "1", "as", "as", "as", "1"},
    {"a", "as", "a", "a", "as", "1", "1"},
    {"a", "as", "as", "1", "as", "a", "1"},
    {"a", "as", "r", "ar", "as", "asr", "1"},
    {"a", "as", "ar", "asr", "as", "r", "-p1"},
    {"a", "as", "asr", "r", "as", "ar", "-p1"},
    {"a", "r", "1", "asr", "asr", "r", "1"},
    {"a", "r", "a", "ar", "asr", "asr", "-p1"},
    {"a", "r", "as", "r", "asr", "ar", "-1"},
    {"a", "r", "r", "a", "asr", "1", "1"},
    {"a", "r", "r", "r", "asr", "ar", "1"},
    {"a", "r", "r", "ar", "asr", "asr", "1"},
    {"a", "r", "r", "asr", "asr", "r", "1"},
    {"a", "r", "ar", "as", "asr", "as", "-p1"},
    {"a", "r", "ar", "r", "asr", "ar", "p1"},
    {"a", "r", "ar", "ar", "asr", "asr", "p1"},
    {"a", "r", "ar", "asr", "asr", "r", "1"},
    {"a", "r", "asr", "1", "asr", "a", "1"},
    {"a", "r", "asr", "r", "asr", "ar", "-p1*p2"},
    {"a", "r", "asr", "ar", "asr", "asr", "p1"},
    {"a", "r", "asr", "asr", "asr", "r", "1"},
    {"a", "ar", "1", "r", "r", "ar", "1"},
    {"a", "ar", "a", "asr", "r", "r", "-1"},
    {"a", "ar", "as", "ar", "r", "asr", "-1"},
    {"a", "ar", "r", "1", "r", "a", "1"},
    {"a", "ar", "r", "r", "r", "ar", "1"},
    {"a", "ar", "r", "ar", "r", "asr", "1"},
    {"a", "ar", "r", "asr", "r", "r", "-1"},
    {"a", "ar", "ar", "a", "r", "1", "1"},
    {"a", "ar", "ar", "r", "r", "ar", "1"},
    {"a", "ar", "ar", "ar", "r", "asr", "1"},
    {"a", "ar", "ar", "asr", "r", "r", "-1"},
    {"a", "ar", "asr", "as", "r", "as", "-p1"},
    {"a", "ar", "asr", "r", "r", "ar", "1"},
    {"a", "ar", "asr", "ar", "r", "asr", "1"},
    {"a", "ar", "asr", "asr", "r", "r", "-p1*p2"},
    {"a", "asr", "1", "ar", "ar", "asr", "1"},
    {"a", "asr", "a", "r", "ar", "ar", "p1"},
    {"a", "asr", "as", "asr", "ar", "r", "1"},
    {"a", "asr", "r", "as", "ar", "as", "1"},
    {"a", "asr", "r", "r", "ar", "ar", "p1"},
    {"a", "asr", "r", "ar", "ar", "asr", "1"},
    {"a", "asr", "r", "asr", "ar", "r", "p2"},
    {"a", "asr", "ar", "1", "ar", "a", "1"},
    {"a", "asr", "ar", "r", "ar", "ar", "-p1"},
    {"a", "asr", "ar", "ar", "ar", "asr", "1"},
    {"a", "asr", "ar", "asr", "ar", "r", "-1"},
    {"a", "asr", "asr", "a", "ar", "1", "1"},
    {"a", "asr", "asr", "r", "ar", "ar", "-1"},
    {"a", "asr", "asr", "ar", "ar", "asr", "1"},
    {"a", "asr", "asr", "asr", "ar", "r", "-p1*p2"},
    {"as", "1", "1", "as", "as", "1", "1"},
    {"as", "1", "a", "a", "as", "a", "1"},
    {"as", "1", "as", "1", "as", "as", "1"},
    {"as", "1", "r", "ar", "as", "r", "1"},
    {"as", "1", "ar", "asr", "as", "ar", "1"},
    {"as", "1", "asr", "r", "as", "asr", "1"},
    {"as", "a", "1", "a", "a", "a", "1"},
    {"as", "a", "a", "1", "a", "as", "1"},
    {"as", "a", "as", "as", "a", "1", "1"},
    {"as", "a", "r", "asr", "a", "ar", "-p1"},
    {"as", "a", "ar", "r", "a", "asr", "1"},
    {"as", "a", "asr", "ar", "a", "r", "1"},
    {"as", "as", "1", "1", "1", "as", "1"},
    {"as", "as", "a", "as", "1", "1", "1"},
    {"as", "as", "as", "a", "1", "a", "1"},
    {"as", "as", "r", "r", "1", "asr", "1"},
    {"as", "as", "ar", "ar", "1", "r", "1"},
    {"as", "as", "asr", "asr", "1", "ar", "1"},
    {"as", "r", "1", "ar", "ar", "r", "1"},
    {"as", "r", "a", "r", "ar", "asr", "-1"},
    {"as", "r", "as", "asr", "ar", "ar", "p1"},
    {"as", "r", "r", "as", "ar", "1", "1"},
    {"as", "r", "r", "r", "ar", "asr", "-1"},
    {"as", "r", "r", "ar", "ar", "r", "1"},
    {"as", "r", "r", "asr", "ar", "ar", "-p1*p2"},
    {"as", "r", "ar", "1", "ar", "as", "1"},
    {"as", "r", "ar", "r", "ar", "asr", "1"},
    {"as", "r", "ar", "ar", "ar", "r", "1"},
    {"as", "r", "ar", "asr", "ar", "ar", "p1"},
    {"as", "r", "asr", "a", "ar", "a", "1"},
    {"as", "r", "asr", "r", "ar", "asr", "p1"},
    {"as", "r", "asr", "ar", "ar", "r", "1"},
    {"as", "r", "asr", "asr", "ar", "ar", "p2"},
    {"as", "ar", "1", "asr", "asr", "ar", "1"},
    {"as", "ar", "a", "ar", "asr", "r", "-1"},
    {"as", "ar", "as", "r", "asr", "asr", "-p1"},
    {"as", "ar", "r", "a", "asr", "a", "-p1"},
    {"as", "ar", "r", "r", "asr", "asr", "-p1"},
    {"as", "ar", "r", "ar", "asr", "r", "p1"},
    {"as", "ar", "r", "asr", "asr", "ar", "1"},
    {"as", "ar", "ar", "as", "asr", "1", "1"},
    {"as", "ar", "ar", "r", "asr", "asr", "-1"},
    {"as", "ar", "ar", "ar", "asr", "r", "-1"},
    {"as", "ar", "ar", "asr", "asr", "ar", "1"},
    {"as", "ar", "asr", "1", "asr", "as", "1"},
    {"as", "ar", "asr", "r", "asr", "asr", "p1"},
    {"as", "ar", "asr", "ar", "asr", "r", "-1"},
    {"as", "ar", "asr", "asr", "asr", "ar", "1"},
    {"as", "asr", "1", "r", "r", "asr", "1"},
    {"as", "asr", "a", "asr", "r", "ar", "1"},
    {"as", "asr", "as", "ar", "r", "r", "-1"},
    {"as", "asr", "r", "1", "r", "as", "1"},
    {"as", "asr", "r", "r", "r", "asr", "1"},
    {"as", "asr", "r", "ar", "r", "r", "1"},
    {"as", "asr", "r", "asr", "r", "ar", "1"},
    {"as", "asr", "ar", "a", "r", "a", "1"},
    {"as", "asr", "ar", "r", "r", "asr", "1"},
    {"as", "asr", "ar", "ar", "r", "r", "1"},
    {"as", "asr", "ar", "asr", "r", "ar", "-1"},
    {"as", "asr", "asr", "as", "r", "1", "1"},
    {"as", "asr", "asr", "r", "r", "asr", "1"},
    {"as", "asr", "asr", "ar", "r", "r", "p1*p2"},
    {"as", "asr", "asr", "asr", "r", "ar", "-p1*p2"},
    {"r", "1", "1", "r", "r", "1", "1"},
    {"r", "1", "a", "asr", "r", "a", "1"},
    {"r", "1", "as", "ar", "r", "as", "1"},
    {"r", "1", "r", "1", "r", "r", "1"},
    {"r", "1", "r", "r", "r", "r", "1"},
    {"r", "1", "r", "ar", "r", "r", "1"},
    {"r", "1", "r", "asr", "r", "r", "1"},
    {"r", "1", "ar", "a", "r", "ar", "1"},
    {"r", "1", "ar", "r", "r", "ar", "1"},
    {"r", "1", "ar", "ar", "r", "ar", "1"},
    {"r", "1", "ar", "asr", "r", "ar", "1"},
    {"r", "1", "asr", "as", "r", "asr", "1"},
    {"r", "1", "asr", "r", "r", "asr", "1"},
    {"r", "1", "asr", "ar", "r", "asr", "1"},
    {"r", "1", "asr", "asr", "r", "asr", "1"},
    {"r", "a", "1", "asr", "asr", "a", "1"},
    {"r", "a", "a", "ar", "asr", "as", "1"},
    {"r", "a", "as", "r", "asr", "1", "1"},
    {"r", "a", "r", "a", "asr", "ar", "-1"},
    {"r", "a", "r", "r", "asr", "ar", "-1"},
    {"r", "a", "r", "ar", "asr", "ar", "1"},
    {"r", "a", "r", "asr", "asr", "ar", "1"},
    {"r", "a", "ar", "as", "asr", "asr", "1"},
    {"r", "a", "ar", "r", "asr", "asr", "1"},
    {"r", "a", "ar", "ar", "asr", "asr", "1"},
    {"r", "a", "ar", "asr", "asr", "asr", "p1*p2"},
    {"r", "a", "asr", "1", "asr", "r", "1"},
    {"r", "a", "asr", "r", "asr", "r", "1"},
    {"r", "a", "asr", "ar", "asr", "r", "1"},
    {"r", "a", "asr", "asr", "asr", "r", "1"},
    {"r", "as", "1", "ar", "ar", "as", "1"},
    {"r", "as", "a", "r", "ar", "1", "1"},
    {"r", "as", "as", "asr", "ar", "a", "-p1"},
    {"r", "as", "r", "as", "ar", "asr", "-1"},
    {"r", "as", "r", "r", "ar", "asr", "1"},
    {"r", "as", "r", "ar", "ar", "asr", "1"},
    {"r", "as", "r", "asr", "ar", "asr", "1"},
    {"r", "as", "ar", "1", "ar", "r", "1"},
    {"r", "as", "ar", "r", "ar", "r", "1"},
    {"r", "as", "ar", "ar", "ar", "r", "1"},
    {"r", "as", "ar", "asr", "ar", "r", "1"},
    {"r", "as", "asr", "a", "ar", "ar", "-1"},
    {"r", "as", "asr", "r", "ar", "ar", "-1"},
    {"r", "as", "asr", "ar", "ar", "ar", "1"},
    {"r", "as", "asr", "asr", "ar", "ar", "1"},
    {"r", "r", "1", "1", "1", "r", "1"},
    {"r", "r", "1", "r", "r", "r", "1"},
    {"r", "r", "1", "ar", "ar", "r", "1"},
    {"r", "r", "1", "asr", "asr", "r", "1"},
    {"r", "r", "a", "as", "1", "asr", "1"},
    {"r", "r", "a", "r", "ar", "asr", "-1"},
    {"r", "r", "a", "ar", "asr", "asr", "p1"},
    {"r", "r", "a", "asr", "r", "asr", "-p1*p2"},
    {"r", "r", "as", "a", "1", "ar", "1"},
    {"r", "r", "as", "r", "asr", "ar", "1"},
    {"r", "r", "as", "ar", "r", "ar", "1"},
    {"r", "r", "as", "asr", "ar", "ar", "-p1"},
    {"r", "r", "r", "1", "r", "r", "1"},
    {"r", "r", "r", "a", "asr", "ar", "-1"},
    {"r", "r", "r", "as", "ar", "asr", "1"},
    {"r", "r", "ar", "1", "ar", "r", "1"},
    {"r", "r", "ar", "a", "r", "ar", "1"},
    {"r", "r", "ar", "as", "asr", "asr", "-p1"},
    {"r", "r", "asr", "1", "asr", "r", "1"},
    {"r", "r", "asr", "a", "ar", "ar", "p2"},
    {"r", "r", "asr", "as", "r", "asr", "1"},
    {"r", "ar", "1", "a", "a", "ar", "1"},
    {"r", "ar", "1", "r", "r", "ar", "1"},
    {"r", "ar", "1", "ar", "ar", "ar", "1"},
    {"r", "ar", "1", "asr", "asr", "ar", "1"},
    {"r", "ar", "a", "1", "a", "r", "1"},
    {"r", "ar", "a", "r", "ar", "r", "1"},
    {"r", "ar", "a", "ar", "asr", "r", "1"},
    {"r", "ar", "a", "asr", "r", "r", "1"},
    {"r", "ar", "as", "as", "a", "asr", "-p1"},
    {"r", "ar", "as", "r", "asr", "asr", "p1"},
    {"r", "ar", "as", "ar", "r", "asr", "-1"},
    {"r", "ar", "as", "asr", "ar", "asr", "-p1*p2"},
    {"r", "ar", "r", "1", "r", "r", "1"},
    {"r", "ar", "r", "a", "asr", "ar", "-1"},
    {"r", "ar", "r", "as", "ar", "asr", "p1"},
    {"r", "ar", "ar", "1", "ar", "r", "1"},
    {"r", "ar", "ar", "a", "r", "ar", "1"},
    {"r", "ar", "ar", "as", "asr", "asr", "1"},
    {"r", "ar", "asr", "1", "asr", "r", "1"},
    {"r", "ar", "asr", "a", "ar", "ar", "-1"},
    {"r", "ar", "asr", "as", "r", "asr", "1"},
    {"r", "asr", "1", "as", "as", "asr", "1"},
    {"r", "asr", "1", "r", "r", "asr", "1"},
    {"r", "asr", "1", "ar", "ar", "asr", "1"},
    {"r", "asr", "1", "asr", "asr", "asr", "1"},
    {"r", "asr", "a", "a", "as", "ar", "1"},
    {"r", "asr", "a", "r", "ar", "ar", "p1"},
    {"r", "asr", "a", "ar", "asr", "ar", "-p1*p2"},
    {"r", "asr", "a", "asr", "r", "ar", "-1"},
    {"r", "asr", "as", "1", "as", "r", "1"},
    {"r", "asr", "as", "r", "asr", "r", "-p1*p2"},
    {"r", "asr", "as", "ar", "r", "r", "-1"},
    {"r", "asr", "as", "asr", "ar", "r", "-1"},
    {"r", "asr", "r", "1", "r", "r", "1"},
    {"r", "asr", "r", "a", "asr", "ar", "-p2"},
    {"r", "asr", "r", "as", "ar", "asr", "-1"},
    {"r", "asr", "ar", "1", "ar", "r", "1"},
    {"r", "asr", "ar", "a", "r", "ar", "1"},
    {"r", "asr", "ar", "as", "asr", "asr", "p1*p2"},
    {"r", "asr", "asr", "1", "asr", "r", "1"},
    {"r", "asr", "asr", "a", "ar", "ar", "-1"},
    {"r", "asr", "asr", "as", "r", "asr", "1"},
    {"ar", "1", "1", "ar", "ar", "1", "1"},
    {"ar", "1", "a", "r", "ar", "a", "1"},
    {"ar", "1", "as", "asr", "ar", "as", "1"},
    {"ar", "1", "r", "as", "ar", "r", "1"},
    {"ar", "1", "r", "r", "ar", "r", "1"},
    {"ar", "1", "r", "ar", "ar", "r", "1"},
    {"ar", "1", "r", "asr", "ar", "r", "1"},
    {"ar", "1", "ar", "1", "ar", "ar", "1"},
    {"ar", "1", "ar", "r", "ar", "ar", "1"},
    {"ar", "1", "ar", "ar", "ar", "ar", "1"},
    {"ar", "1", "ar", "asr", "ar", "ar", "1"},
    {"ar", "1", "asr", "a", "ar", "asr", "1"},
    {"ar", "1", "asr", "r", "ar", "asr", "1"},
    {"ar", "1", "asr", "ar", "ar", "asr", "1"},
    {"ar", "1", "asr", "asr", "ar", "asr", "1"},
    {"ar", "a", "1", "r", "r", "a", "1"},
    {"ar", "a", "a", "asr", "r", "as", "-p1"},
    {"ar", "a", "as", "ar", "r", "1", "1"},
    {"ar", "a", "r", "1", "r", "ar", "1"},
    {"ar", "a", "r", "r", "r", "ar", "1"},
    {"ar", "a", "r", "ar", "r", "ar", "1"},
    {"ar", "a", "r", "asr", "r", "ar", "1"},
    {"ar", "a", "ar", "a", "r", "asr", "p1"},
    {"ar", "a", "ar", "r", "r", "asr", "p1"},
    {"ar", "a", "ar", "ar", "r", "asr", "-p1"},
    {"ar", "a", "ar", "asr", "r", "asr", "-p1"},
    {"ar", "a", "asr", "as", "r", "r", "-1"},
    {"ar", "a", "asr", "r", "r", "r", "1"},
    {"ar", "a", "asr", "ar", "r", "r", "1"},
    {"ar", "a", "asr", "asr", "r", "r", "1"},
    {"ar", "as", "1", "asr", "asr", "as", "1"},
    {"ar", "as", "a", "ar", "asr", "1", "-p1"},
    {"ar", "as", "as", "r", "asr", "a", "-p1"},
    {"ar", "as", "r", "a", "asr", "asr", "1"},
    {"ar", "as", "r", "r", "asr", "asr", "1"},
    {"ar", "as", "r", "ar", "asr", "asr", "1"},
    {"ar", "as", "r", "asr", "asr", "asr", "1"},
    {"ar", "as", "ar", "as", "asr", "r", "p1"},
    {"ar", "as", "ar", "r", "asr", "r", "-p1"},
    {"ar", "as", "ar", "ar", "asr", "r", "-p1"},
    {"ar", "as", "ar", "asr", "asr", "r", "-p2"},
    {"ar", "as", "asr", "1", "asr", "ar", "1"},
    {"ar", "as", "asr", "r", "asr", "ar", "1"},
    {"ar", "as", "asr", "ar", "asr", "ar", "1"},
    {"ar", "as", "asr", "asr", "asr", "ar", "1"},
    {"ar", "r", "1", "as", "as", "r", "1"},
    {"ar", "r", "1", "r", "r", "r", "1"},
    {"ar", "r", "1", "ar", "ar", "r", "1"},
    {"ar", "r", "1", "asr", "asr", "r", "1"},
    {"ar", "r", "a", "a", "as", "asr", "1"},
    {"ar", "r", "a", "r", "ar", "asr", "-p1"},
    {"ar", "r", "a", "ar", "asr", "asr", "-p1*p2"},
    {"ar", "r", "a", "asr", "r", "asr", "-1"},
    {"ar", "r", "as", "1", "as", "ar", "1"},
    {"ar", "r", "as", "r", "asr", "ar", "p1*p2"},
    {"ar", "r", "as", "ar", "r", "ar", "1"},
    {"ar", "r", "as", "asr", "ar", "ar", "1"},
    {"ar", "r", "r", "1", "r", "ar", "1"},
    {"ar", "r", "r", "a", "asr", "asr", "p2"},
    {"ar", "r", "r", "as", "ar", "r", "1"},
    {"ar", "r", "ar", "1", "ar", "ar", "1"},
    {"ar", "r", "ar", "a", "r", "asr", "-1"},
    {"ar", "r", "ar", "as", "asr", "r", "-p1*p2"},
    {"ar", "r", "asr", "1", "asr", "ar", "1"},
    {"ar", "r", "asr", "a", "ar", "asr", "1"},
    {"ar", "r", "asr", "as", "r", "r", "-1"},
    {"ar", "ar", "1", "1", "1", "ar", "1"},
    {"ar", "ar", "1", "r", "r", "ar", "1"},
    {"ar", "ar", "1", "ar", "ar", "ar", "1"},
    {"ar", "ar", "1", "asr", "asr", "ar", "1"},
    {"ar", "ar", "a", "as", "1", "r", "1"},
    {"ar", "ar", "a", "r", "ar", "r", "1"},
    {"ar", "ar", "a", "ar", "asr", "r", "-p1"},
    {"ar", "ar", "a", "asr", "r", "r", "p1*p2"},
    {"ar", "ar", "as", "a", "1", "asr", "-p1"},
    {"ar", "ar", "as", "r", "asr", "asr", "-p1"},
    {"ar", "ar", "as", "ar", "r", "asr", "p1"},
    {"ar", "ar", "as", "asr", "ar", "asr", "-1"},
    {"ar", "ar", "r", "1", "r", "ar", "1"},
    {"ar", "ar", "r", "a", "asr", "asr", "-p1"},
    {"ar", "ar", "r", "as", "ar", "r", "1"},
    {"ar", "ar", "ar", "1", "ar", "ar", "1"},
    {"ar", "ar", "ar", "a", "r", "asr", "p1"},
    {"ar", "ar", "ar", "as", "asr", "r", "p1"},
    {"ar", "ar", "asr", "1", "asr", "ar", "1"},
    {"ar", "ar", "asr", "a", "ar", "asr", "1"},
    {"ar", "ar", "asr", "as", "r", "r", "-1"},
    {"ar", "asr", "1", "a", "a", "asr", "1"},
    {"ar", "asr", "1", "r", "r", "asr", "1"},
    {"ar", "asr", "1", "ar", "ar", "asr", "1"},
    {"ar", "asr", "1", "asr", "asr", "asr", "1"},
    {"ar", "asr", "a", "1", "a", "ar", "1"},
    {"ar", "asr", "a", "r", "ar", "ar", "-1"},
    {"ar", "asr", "a", "ar", "asr", "ar", "-1"},
    {"ar", "asr", "a", "asr", "r", "ar", "1"},
    {"ar", "asr", "as", "as", "a", "r", "1"},
    {"ar", "asr", "as", "r", "asr", "r", "-1"},
    {"ar", "asr", "as", "ar", "r", "r", "-p1"},
    {"ar", "asr", "as", "asr", "ar", "r", "p2"},
    {"ar", "asr", "r", "1", "r", "ar", "1"},
    {"ar", "asr", "r", "a", "asr", "asr", "1"},
    {"ar", "asr", "r", "as", "ar", "r", "1"},
    {"ar", "asr", "ar", "1", "ar", "ar", "1"},
    {"ar", "asr", "ar", "a", "r", "asr", "1"},
    {"ar", "asr", "ar", "as", "asr", "r", "p1"},
    {"ar", "asr", "asr", "1", "asr", "ar", "1"},
    {"ar", "asr", "asr", "a", "ar", "asr", "1"},
    {"ar", "asr", "asr", "as", "r", "r", "-p2"},
    {"asr", "1", "1", "asr", "asr", "1", "1"},
    {"asr", "1", "a", "ar", "asr", "a", "1"},
    {"asr", "1", "as", "r", "asr", "as", "1"},
    {"asr", "1", "r", "a", "asr", "r", "1"},
    {"asr", "1", "r", "r", "asr", "r", "1"},
    {"asr", "1", "r", "ar", "asr", "r", "1"},
    {"asr", "1", "r", "asr", "asr", "r", "1"},
    {"asr", "1", "ar", "as", "asr", "ar", "1"},
    {"asr", "1", "ar", "r", "asr", "ar", "1"},
    {"asr", "1", "ar", "ar", "asr", "ar", "1"},
    {"asr", "1", "ar", "asr", "asr", "ar", "1"},
    {"asr", "1", "asr", "1", "asr", "asr", "1"},
    {"asr", "1", "asr", "r", "asr", "asr", "1"},
    {"asr", "1", "asr", "ar", "asr", "asr", "1"},
    {"asr", "1", "asr", "asr", "asr", "asr", "1"},
    {"asr", "a", "1", "ar", "ar", "a", "1"},
    {"asr", "a", "a", "r", "ar", "as", "1"},
    {"asr", "a", "as", "asr", "ar", "1", "-p1"},
    {"asr", "a", "r", "as", "ar", "ar", "-1"},
    {"asr", "a", "r", "r", "ar", "ar", "1"},
    {"asr", "a", "r", "ar", "ar", "ar", "1"},
    {"asr", "a", "r", "asr", "ar", "ar", "p1*p2"},
    {"asr", "a", "ar", "1", "ar", "asr", "1"},
    {"asr", "a", "ar", "r", "ar", "asr", "1"},
    {"asr", "a", "ar", "ar", "ar", "asr", "1"},
    {"asr", "a", "ar", "asr", "ar", "asr", "1"},
    {"asr", "a", "asr", "a", "ar", "r", "-p1"},
    {"asr", "a", "asr", "r", "ar", "r", "-p1"},
    {"asr", "a", "asr", "ar", "ar", "r", "-p1"},
    {"asr", "a", "asr", "asr", "ar", "r", "-p1"},
    {"asr", "as", "1", "r", "r", "as", "1"},
    {"asr", "as", "a", "asr", "r", "1", "1"},
    {"asr", "as", "as", "ar", "r", "a", "1"},
    {"asr", "as", "r", "1", "r", "asr", "1"},
    {"asr", "as", "r", "r", "r", "asr", "1"},
    {"asr", "as", "r", "ar", "r", "asr", "1"},
    {"asr", "as", "r", "asr", "r", "asr", "1"},
    {"asr", "as", "ar", "a", "r", "r", "-1"},
    {"asr", "as", "ar", "r", "r", "r", "-1"},
    {"asr", "as", "ar", "ar", "r", "r", "1"},
    {"asr", "as", "ar", "asr", "r", "r", "1"},
    {"asr", "as", "asr", "as", "r", "ar", "-p1"},
    {"asr", "as", "asr", "r", "r", "ar", "-p1"},
    {"asr", "as", "asr", "ar", "r", "ar", "-p1"},
    {"asr", "as", "asr", "asr", "r", "ar", "-p2"},
    {"asr", "r", "1", "a", "a", "r", "1"},
    {"asr", "r", "1", "r", "r", "r", "1"},
    {"asr", "r", "1", "ar", "ar", "r", "1"},
    {"asr", "r", "1", "asr", "asr", "r", "1"},
    {"asr", "r", "a", "1", "a", "asr", "1"},
    {"asr", "r", "a", "r", "ar", "asr", "-1"},
    {"asr", "r", "a", "ar", "asr", "asr", "-1"},
    {"asr", "r", "a", "asr", "r", "asr", "1"},
    {"asr", "r", "as", "as", "a", "ar", "-p1"},
    {"asr", "r", "as", "r", "asr", "ar", "-p1"},
    {"asr", "r", "as", "ar", "r", "ar", "-1"},
    {"asr", "r", "as", "asr", "ar", "ar", "1"},
    {"asr", "r", "r", "1", "r", "asr", "1"},
    {"asr", "r", "r", "a", "asr", "r", "1"},
    {"asr", "r", "r", "as", "ar", "ar", "p1"},
    {"asr", "r", "ar", "1", "ar", "asr", "1"},
    {"asr", "r", "ar", "a", "r", "r", "1"},
    {"asr", "r", "ar", "as", "asr", "ar", "1"},
    {"asr", "r", "asr", "1", "asr", "asr", "1"},
    {"asr", "r", "asr", "a", "ar", "r", "1"},
    {"asr", "r", "asr", "as", "r", "ar", "-p1*p2"},
    {"asr", "ar", "1", "as", "as", "ar", "1"},
    {"asr", "ar", "1", "r", "r", "ar", "1"},
    {"asr", "ar", "1", "ar", "ar", "ar", "1"},
    {"asr", "ar", "1", "asr", "asr", "ar", "1"},
    {"asr", "ar", "a", "a", "as", "r", "-p1"},
    {"asr", "ar", "a", "r", "ar", "r", "-1"},
    {"asr", "ar", "a", "ar", "asr", "r", "-p1"},
    {"asr", "ar", "a", "asr", "r", "r", "-p1"},
    {"asr", "ar", "as", "1", "as", "asr", "1"},
    {"asr", "ar", "as", "r", "asr", "asr", "-1"},
    {"asr", "ar", "as", "ar", "r", "asr", "-1"},
    {"asr", "ar", "as", "asr", "ar", "asr", "-1"},
    {"asr", "ar", "r", "1", "r", "asr", "1"},
    {"asr", "ar", "r", "a", "asr", "r", "1"},
    {"asr", "ar", "r", "as", "ar", "ar", "-1"},
    {"asr", "ar", "ar", "1", "ar", "asr", "1"},
    {"asr", "ar", "ar", "a", "r", "r", "p1"},
    {"asr", "ar", "ar", "as", "asr", "ar", "1"},
    {"asr", "ar", "asr", "1", "asr", "asr", "1"},
    {"asr", "ar", "asr", "a", "ar", "r", "-p1"},
    {"asr", "ar", "asr", "as", "r", "ar", "1"},
    {"asr", "asr", "1", "1", "1", "asr", "1"},
    {"asr", "asr", "1", "r", "r", "asr", "1"},
    {"asr", "asr", "1", "ar", "ar", "asr", "1"},
    {"asr", "asr", "1", "asr", "asr", "asr", "1"},
    {"asr", "asr", "a", "as", "1", "ar", "-p1"},
    {"asr", "asr", "a", "r", "ar", "ar", "p1"},
    {"asr", "asr", "a", "ar", "asr", "ar", "-1"},
    {"asr", "asr", "a", "asr", "r", "ar", "p1"},
    {"asr", "asr", "as", "a", "1", "r", "1"},
    {"asr", "asr", "as", "r", "asr", "r", "1"},
    {"asr", "asr", "as", "ar", "r", "r", "-1"},
    {"asr", "asr", "as", "asr", "ar", "r", "p1"},
    {"asr", "asr", "r", "1", "r", "asr", "1"},
    {"asr", "asr", "r", "a", "asr", "r", "1"},
    {"asr", "asr", "r", "as", "ar", "ar", "-p1"},
    {"asr", "asr", "ar", "1", "ar", "asr", "1"},
    {"asr", "asr", "ar", "a", "r", "r", "-1"},
    {"asr", "asr", "ar", "as", "asr", "ar", "1"},
    {"asr", "asr", "asr", "1", "asr", "asr", "1"},
    {"asr", "asr", "asr", "a", "ar", "r", "-p2"},
    {"asr", "asr", "asr", "as", "r", "ar", "-p1"},
    // F_r^{r r ar}
    {"r", "r", "r", "ar", "r", "r", "Dplus"},
    {"r", "r", "r", "ar", "r", "ar", "Dminus"},
    {"r", "r", "r", "ar", "r", "asr", "-C"},
    {"r", "r", "r", "ar", "ar", "r", "Dminus"},
    {"r", "r", "r", "ar", "ar", "ar", "C"},
    {"r", "r", "r", "ar", "ar", "asr", "-Dplus"},
    {"r", "r", "r", "ar", "asr", "r", "C"},
    {"r", "r", "r", "ar", "asr", "ar", "Dplus"},
    {"r", "r", "r", "ar", "asr", "asr", "-Dminus"},
    // F_r^{r r asr}
    {"r", "r", "r", "asr", "r", "r", "Dminus"},
    {"r", "r", "r", "asr", "r", "ar", "C"},
    {"r", "r", "r", "asr", "r", "asr", "-Dplus*p1*p2"},
    {"r", "r", "r", "asr", "ar", "r", "C*p1*p2"},
    {"r", "r", "r", "asr", "ar", "ar", "Dplus*p1*p2"},
    {"r", "r", "r", "asr", "ar", "asr", "-Dminus"},
    {"r", "r", "r", "asr", "asr", "r", "Dplus"},
    {"r", "r", "r", "asr", "asr", "ar", "Dminus"},
    {"r", "r", "r", "asr", "asr", "asr", "-C*p1*p2"},
    // F_r^{r ar r}
    {"r", "r", "ar", "r", "r", "r", "Dplus"},
    {"r", "r", "ar", "r", "r", "ar", "Dminus"},
    {"r", "r", "ar", "r", "r", "asr", "C"},
    {"r", "r", "ar", "r", "ar", "r", "Dminus"},
    {"r", "r", "ar", "r", "ar", "ar", "C"},
    {"r", "r", "ar", "r", "ar", "asr", "Dplus"},
    {"r", "r", "ar", "r", "asr", "r", "-C*p1"},
    {"r", "r", "ar", "r", "asr", "ar", "-Dplus*p1"},
    {"r", "r", "ar", "r", "asr", "asr", "-Dminus*p1"},
    // F_r^{r ar asr}
    {"r", "r", "ar", "asr", "r", "r", "-C*p1"},
    {"r", "r", "ar", "asr", "r", "ar", "Dplus"},
    {"r", "r", "ar", "asr", "r", "asr", "Dminus*p1*p2"},
    {"r", "r", "ar", "asr", "ar", "r", "Dplus"},
    {"r", "r", "ar", "asr", "ar", "ar", "-Dminus*p1"},
    {"r", "r", "ar", "asr", "ar", "asr", "-C*p2"},
    {"r", "r", "ar", "asr", "asr", "r", "Dminus"},
    {"r", "r", "ar", "asr", "asr", "ar", "-C*p1"},
    {"r", "r", "ar", "asr", "asr", "asr", "-Dplus*p2"},
    // F_r^{r asr r}
    {"r", "r", "asr", "r", "r", "r", "Dminus"},
    {"r", "r", "asr", "r", "r", "ar", "C*p1*p2"},
    {"r", "r", "asr", "r", "r", "asr", "Dplus"},
    {"r", "r", "asr", "r", "ar", "r", "C*p1"},
    {"r", "r", "asr", "r", "ar", "ar", "Dplus*p2"},
    {"r", "r", "asr", "r", "ar", "asr", "Dminus*p1"},
    {"r", "r", "asr", "r", "asr", "r", "Dplus"},
    {"r", "r", "asr", "r", "asr", "ar", "Dminus*p1*p2"},
    {"r", "r", "asr", "r", "asr", "asr", "C"},
    // F_r^{r asr ar}
    {"r", "r", "asr", "ar", "r", "r", "-C*p1"},
    {"r", "r", "asr", "ar", "r", "ar", "Dplus*p1*p2"},
    {"r", "r", "asr", "ar", "r", "asr", "Dminus"},
    {"r", "r", "asr", "ar", "ar", "r", "Dplus"},
    {"r", "r", "asr", "ar", "ar", "ar", "-Dminus*p2"},
    {"r", "r", "asr", "ar", "ar", "asr", "-C*p1"},
    {"r", "r", "asr", "ar", "asr", "r", "Dminus"},
    {"r", "r", "asr", "ar", "asr", "ar", "-C*p2"},
    {"r", "r", "asr", "ar", "asr", "asr", "-Dplus*p1"},
    // F_r^{ar r r}
    {"r", "ar", "r", "r", "r", "r", "Dplus"},
    {"r", "ar", "r", "r", "r", "ar", "Dminus"},
    {"r", "ar", "r", "r", "r", "asr", "-C*p1"},
    {"r", "ar", "r", "r", "ar", "r", "Dminus"},
    {"r", "ar", "r", "r", "ar", "ar", "C"},
    {"r", "ar", "r", "r", "ar", "asr", "-Dplus*p1"},
    {"r", "ar", "r", "r", "asr", "r", "-C"},
    {"r", "ar", "r", "r", "asr", "ar", "-Dplus"},
    {"r", "ar", "r", "r", "asr", "asr", "Dminus*p1"},
    // F_r^{ar r ar}
    {"r", "ar", "r", "ar", "r", "r", "Dminus"},
    {"r", "ar", "r", "ar", "r", "ar", "-C*p1"},
    {"r", "ar", "r", "ar", "r", "asr", "Dplus"},
    {"r", "ar", "r", "ar", "ar", "r", "-C*p1"},
    {"r", "ar", "r", "ar", "ar", "ar", "Dplus"},
    {"r", "ar", "r", "ar", "ar", "asr", "-Dminus*p1"},
    {"r", "ar", "r", "ar", "asr", "r", "-Dplus*p1"},
    {"r", "ar", "r", "ar", "asr", "ar", "Dminus"},
    {"r", "ar", "r", "ar", "asr", "asr", "-C*p1"},
    // F_r^{ar ar ar}
    {"r", "ar", "ar", "ar", "r", "r", "C"},
    {"r", "ar", "ar", "ar", "r", "ar", "Dplus"},
    {"r", "ar", "ar", "ar", "r", "asr", "Dminus"},
    {"r", "ar", "ar", "ar", "ar", "r", "Dplus"},
    {"r", "ar", "ar", "ar", "ar", "ar", "Dminus"},
    {"r", "ar", "ar", "ar", "ar", "asr", "C"},
    {"r", "ar", "ar", "ar", "asr", "r", "Dminus"},
    {"r", "ar", "ar", "ar", "asr", "ar", "C"},
    {"r", "ar", "ar", "ar", "asr", "asr", "Dplus"},
    // F_r^{ar ar asr}
    {"r", "ar", "ar", "asr", "r", "r", "Dplus"},
    {"r", "ar", "ar", "asr", "r", "ar", "Dminus"},
    {"r", "ar", "ar", "asr", "r", "asr", "C*p1*p2"},
    {"r", "ar", "ar", "asr", "ar", "r", "Dminus"},
    {"r", "ar", "ar", "asr", "ar", "ar", "C"},
    {"r", "ar", "ar", "asr", "ar", "asr", "Dplus*p1*p2"},
    {"r", "ar", "ar", "asr", "asr", "r", "C"},
    {"r", "ar", "ar", "asr", "asr", "ar", "Dplus"},
    {"r", "ar", "ar", "asr", "asr", "asr", "Dminus*p1*p2"},
    // F_r^{ar asr r}
    {"r", "ar", "asr", "r", "r", "r", "-C*p1"},
    {"r", "ar", "asr", "r", "r", "ar", "Dplus"},
    {"r", "ar", "asr", "r", "r", "asr", "Dminus"},
    {"r", "ar", "asr", "r", "ar", "r", "Dplus*p1"},
    {"r", "ar", "asr", "r", "ar", "ar", "-Dminus"},
    {"r", "ar", "asr", "r", "ar", "asr", "-C"},
    {"r", "ar", "asr", "r", "asr", "r", "Dminus"},
    {"r", "ar", "asr", "r", "asr", "ar", "-C*p1"},
    {"r", "ar", "asr", "r", "asr", "asr", "-Dplus*p1"},
    // F_r^{ar asr asr}
    {"r", "ar", "asr", "asr", "r", "r", "Dminus*p1*p2"},
    {"r", "ar", "asr", "asr", "r", "ar", "C*p1*p2"},
    {"r", "ar", "asr", "asr", "r", "asr", "Dplus"},
    {"r", "ar", "asr", "asr", "ar", "r", "C"},
    {"r", "ar", "asr", "asr", "ar", "ar", "Dplus"},
    {"r", "ar", "asr", "asr", "ar", "asr", "Dminus*p1*p2"},
    {"r", "ar", "asr", "asr", "asr", "r", "Dplus"},
    {"r", "ar", "asr", "asr", "asr", "ar", "Dminus"},
    {"r", "ar", "asr", "asr", "asr", "asr", "C*p1*p2"},
    // F_r^{asr r r}
    {"r", "asr", "r", "r", "r", "r", "Dminus"},
    {"r", "asr", "r", "r", "r", "ar", "C*p1"},
    {"r", "asr", "r", "r", "r", "asr", "Dplus"},
    {"r", "asr", "r", "r", "ar", "r", "C"},
    {"r", "asr", "r", "r", "ar", "ar", "Dplus*p1"},
    {"r", "asr", "r", "r", "ar", "asr", "Dminus"},
    {"r", "asr", "r", "r", "asr", "r", "-Dplus*p1*p2"},
    {"r", "asr", "r", "r", "asr", "ar", "-Dminus*p2"},
    {"r", "asr", "r", "r", "asr", "asr", "-C*p1*p2"},
    // F_r^{asr r asr}
    {"r", "asr", "r", "asr", "r", "r", "Dplus"},
    {"r", "asr", "r", "asr", "r", "ar", "-Dminus"},
    {"r", "asr", "r", "asr", "r", "asr", "-C*p2"},
    {"r", "asr", "r", "asr", "ar", "r", "-Dminus*p2"},
    {"r", "asr", "r", "asr", "ar", "ar", "C*p2"},
    {"r", "asr", "r", "asr", "ar", "asr", "Dplus"},
    {"r", "asr", "r", "asr", "asr", "r", "-C*p2"},
    {"r", "asr", "r", "asr", "asr", "ar", "Dplus*p2"},
    {"r", "asr", "r", "asr", "asr", "asr", "Dminus"},
    // F_r^{asr ar r}
    {"r", "asr", "ar", "r", "r", "r", "-C*p1"},
    {"r", "asr", "ar", "r", "r", "ar", "Dplus"},
    {"r", "asr", "ar", "r", "r", "asr", "Dminus"},
    {"r", "asr", "ar", "r", "ar", "r", "Dplus"},
    {"r", "asr", "ar", "r", "ar", "ar", "-Dminus*p1"},
    {"r", "asr", "ar", "r", "ar", "asr", "-C*p1"},
    {"r", "asr", "ar", "r", "asr", "r", "-Dminus*p2"},
    {"r", "asr", "ar", "r", "asr", "ar", "C*p1*p2"},
    {"r", "asr", "ar", "r", "asr", "asr", "Dplus*p1*p2"},
    // F_r^{asr ar ar}
    {"r", "asr", "ar", "ar", "r", "r", "Dplus"},
    {"r", "asr", "ar", "ar", "r", "ar", "Dminus"},
    {"r", "asr", "ar", "ar", "r", "asr", "C"},
    {"r", "asr", "ar", "ar", "ar", "r", "Dminus"},
    {"r", "asr", "ar", "ar", "ar", "ar", "C"},
    {"r", "asr", "ar", "ar", "ar", "asr", "Dplus"},
    {"r", "asr", "ar", "ar", "asr", "r", "C*p1*p2"},
    {"r", "asr", "ar", "ar", "asr", "ar", "Dplus*p1*p2"},
    {"r", "asr", "ar", "ar", "asr", "asr", "Dminus*p1*p2"},
    // F_r^{asr asr ar}
    {"r", "asr", "asr", "ar", "r", "r", "Dminus*p1*p2"},
    {"r", "asr", "asr", "ar", "r", "ar", "C"},
    {"r", "asr", "asr", "ar", "r", "asr", "Dplus"},
    {"r", "asr", "asr", "ar", "ar", "r", "C*p1*p2"},
    {"r", "asr", "asr", "ar", "ar", "ar", "Dplus"},
    {"r", "asr", "asr", "ar", "ar", "asr", "Dminus"},
    {"r", "asr", "asr", "ar", "asr", "r", "Dplus"},
    {"r", "asr", "asr", "ar", "asr", "ar", "Dminus*p1*p2"},
    {"r", "asr", "asr", "ar", "asr", "asr", "C*p1*p2"},
    // F_r^{asr asr asr}
    {"r", "asr", "asr", "asr", "r", "r", "C"},
    {"r", "asr", "asr", "asr", "r", "ar", "Dplus*p1*p2"},
    {"r", "asr", "asr", "asr", "r", "asr", "Dminus"},
    {"r", "asr", "asr", "asr", "ar", "r", "Dplus*p1*p2"},
    {"r", "asr", "asr", "asr", "ar", "ar", "Dminus"},
    {"r", "asr", "asr", "asr", "ar", "asr", "C*p1*p2"},
    {"r", "asr", "asr", "asr", "asr", "r", "Dminus"},
    {"r", "asr", "asr", "asr", "asr", "ar", "C*p1*p2"},
    {"r", "asr", "asr", "asr", "asr", "asr", "Dplus"},
    // F_ar^{r r r}
    {"ar", "r", "r", "r", "r", "r", "Dplus"},
    {"ar", "r", "r", "r", "r", "ar", "Dminus"},
    {"ar", "r", "r", "r", "r", "asr", "-C*p1"},
    {"ar", "r", "r", "r", "ar", "r", "Dminus"},
    {"ar", "r", "r", "r", "ar", "ar", "C"},
    {"ar", "r", "r", "r", "ar", "asr", "-Dplus*p1"},
    {"ar", "r", "r", "r", "asr", "r", "-C*p1*p2"},
    {"ar", "r", "r", "r", "asr", "ar", "-Dplus*p1*p2"},
    {"ar", "r", "r", "r", "asr", "asr", "Dminus*p2"},
    // F_ar^{r r asr}
    {"ar", "r", "r", "asr", "r", "r", "-C*p2"},
    {"ar", "r", "r", "asr", "r", "ar", "Dplus"},
    {"ar", "r", "r", "asr", "r", "asr", "-Dminus"},
    {"ar", "r", "r", "asr", "ar", "r", "Dplus"},
    {"ar", "r", "r", "asr", "ar", "ar", "-Dminus*p2"},
    {"ar", "r", "r", "asr", "ar", "asr", "C*p2"},
    {"ar", "r", "r", "asr", "asr", "r", "Dminus"},
    {"ar", "r", "r", "asr", "asr", "ar", "-C*p2"},
    {"ar", "r", "r", "asr", "asr", "asr", "Dplus*p2"},
    // F_ar^{r ar r}
    {"ar", "r", "ar", "r", "r", "r", "Dminus"},
    {"ar", "r", "ar", "r", "r", "ar", "-C*p1"},
    {"ar", "r", "ar", "r", "r", "asr", "-Dplus"},
    {"ar", "r", "ar", "r", "ar", "r", "-C*p1"},
    {"ar", "r", "ar", "r", "ar", "ar", "Dplus"},
    {"ar", "r", "ar", "r", "ar", "asr", "Dminus*p1"},
    {"ar", "r", "ar", "r", "asr", "r", "Dplus*p1*p2"},
    {"ar", "r", "ar", "r", "asr", "ar", "-Dminus*p2"},
    {"ar", "r", "ar", "r", "asr", "asr", "-C*p1*p2"},
    // F_ar^{r ar ar}
    {"ar", "r", "ar", "ar", "r", "r", "C"},
    {"ar", "r", "ar", "ar", "r", "ar", "Dplus"},
    {"ar", "r", "ar", "ar", "r", "asr", "Dminus"},
    {"ar", "r", "ar", "ar", "ar", "r", "Dplus"},
    {"ar", "r", "ar", "ar", "ar", "ar", "Dminus"},
    {"ar", "r", "ar", "ar", "ar", "asr", "C"},
    {"ar", "r", "ar", "ar", "asr", "r", "Dminus*p1*p2"},
    {"ar", "r", "ar", "ar", "asr", "ar", "C*p1*p2"},
    {"ar", "r", "ar", "ar", "asr", "asr", "Dplus*p1*p2"},
    // F_ar^{r asr ar}
    {"ar", "r", "asr", "ar", "r", "r", "Dplus"},
    {"ar", "r", "asr", "ar", "r", "ar", "Dminus*p1*p2"},
    {"ar", "r", "asr", "ar", "r", "asr", "C"},
    {"ar", "r", "asr", "ar", "ar", "r", "Dminus"},
    {"ar", "r", "asr", "ar", "ar", "ar", "C*p1*p2"},
    {"ar", "r", "asr", "ar", "ar", "asr", "Dplus"},
    {"ar", "r", "asr", "ar", "asr", "r", "C*p1*p2"},
    {"ar", "r", "asr", "ar", "asr", "ar", "Dplus"},
    {"ar", "r", "asr", "ar", "asr", "asr", "Dminus*p1*p2"},
    // F_ar^{r asr asr}
    {"ar", "r", "asr", "asr", "r", "r", "Dminus"},
    {"ar", "r", "asr", "asr", "r", "ar", "C"},
    {"ar", "r", "asr", "asr", "r", "asr", "Dplus*p1*p2"},
    {"ar", "r", "asr", "asr", "ar", "r", "C*p1*p2"},
    {"ar", "r", "asr", "asr", "ar", "ar", "Dplus*p1*p2"},
    {"ar", "r", "asr", "asr", "ar", "asr", "Dminus"},
    {"ar", "r", "asr", "asr", "asr", "r", "Dplus"},
    {"ar", "r", "asr", "asr", "asr", "ar", "Dminus"},
    {"ar", "r", "asr", "asr", "asr", "asr", "C*p1*p2"},
    // F_ar^{ar r ar}
    {"ar", "ar", "r", "ar", "r", "r", "C"},
    {"ar", "ar", "r", "ar", "r", "ar", "Dplus"},
    {"ar", "ar", "r", "ar", "r", "asr", "-Dminus*p1"},
    {"ar", "ar", "r", "ar", "ar", "r", "Dplus"},
    {"ar", "ar", "r", "ar", "ar", "ar", "Dminus"},
    {"ar", "ar", "r", "ar", "ar", "asr", "-C*p1"},
    {"ar", "ar", "r", "ar", "asr", "r", "Dminus"},
    {"ar", "ar", "r", "ar", "asr", "ar", "C"},
    {"ar", "ar", "r", "ar", "asr", "asr", "-Dplus*p1"},
    // F_ar^{ar r asr}
    {"ar", "ar", "r", "asr", "r", "r", "Dplus*p1*p2"},
    {"ar", "ar", "r", "asr", "r", "ar", "Dminus"},
    {"ar", "ar", "r", "asr", "r", "asr", "-C*p1"},
    {"ar", "ar", "r", "asr", "ar", "r", "Dminus"},
    {"ar", "ar", "r", "asr", "ar", "ar", "C*p1*p2"},
    {"ar", "ar", "r", "asr", "ar", "asr", "-Dplus*p2"},
    {"ar", "ar", "r", "asr", "asr", "r", "C*p1*p2"},
    {"ar", "ar", "r", "asr", "asr", "ar", "Dplus"},
    {"ar", "ar", "r", "asr", "asr", "asr", "-Dminus*p1"},
    // F_ar^{ar ar r}
    {"ar", "ar", "ar", "r", "r", "r", "C"},
    {"ar", "ar", "ar", "r", "r", "ar", "Dplus"},
    {"ar", "ar", "ar", "r", "r", "asr", "Dminus*p1"},
    {"ar", "ar", "ar", "r", "ar", "r", "Dplus"},
    {"ar", "ar", "ar", "r", "ar", "ar", "Dminus"},
    {"ar", "ar", "ar", "r", "ar", "asr", "C*p1"},
    {"ar", "ar", "ar", "r", "asr", "r", "-Dminus*p1"},
    {"ar", "ar", "ar", "r", "asr", "ar", "-C*p1"},
    {"ar", "ar", "ar", "r", "asr", "asr", "-Dplus"},
    // F_ar^{ar ar asr}
    {"ar", "ar", "ar", "asr", "r", "r", "Dminus*p1*p2"},
    {"ar", "ar", "ar", "asr", "r", "ar", "-C*p1"},
    {"ar", "ar", "ar", "asr", "r", "asr", "-Dplus*p1"},
    {"ar", "ar", "ar", "asr", "ar", "r", "-C*p2"},
    {"ar", "ar", "ar", "asr", "ar", "ar", "Dplus"},
    {"ar", "ar", "ar", "asr", "ar", "asr", "Dminus"},
    {"ar", "ar", "ar", "asr", "asr", "r", "-Dplus*p2"},
    {"ar", "ar", "ar", "asr", "asr", "ar", "Dminus"},
    {"ar", "ar", "ar", "asr", "asr", "asr", "C"},
    // F_ar^{ar asr r}
    {"ar", "ar", "asr", "r", "r", "r", "Dplus"},
    {"ar", "ar", "asr", "r", "r", "ar", "Dminus"},
    {"ar", "ar", "asr", "r", "r", "asr", "C*p1"},
    {"ar", "ar", "asr", "r", "ar", "r", "Dminus*p1"},
    {"ar", "ar", "asr", "r", "ar", "ar", "C*p1"},
    {"ar", "ar", "asr", "r", "ar", "asr", "Dplus"},
    {"ar", "ar", "asr", "r", "asr", "r", "C"},
    {"ar", "ar", "asr", "r", "asr", "ar", "Dplus"},
    {"ar", "ar", "asr", "r", "asr", "asr", "Dminus*p1"},
    // F_ar^{ar asr ar}
    {"ar", "ar", "asr", "ar", "r", "r", "Dminus"},
    {"ar", "ar", "asr", "ar", "r", "ar", "-C*p1"},
    {"ar", "ar", "asr", "ar", "r", "asr", "-Dplus*p1"},
    {"ar", "ar", "asr", "ar", "ar", "r", "-C*p1"},
    {"ar", "ar", "asr", "ar", "ar", "ar", "Dplus"},
    {"ar", "ar", "asr", "ar", "ar", "asr", "Dminus"},
    {"ar", "ar", "asr", "ar", "asr", "r", "-Dplus*p1"},
    {"ar", "ar", "asr", "ar", "asr", "ar", "Dminus"},
    {"ar", "ar", "asr", "ar", "asr", "asr", "C"},
    // F_ar^{asr r r}
    {"ar", "asr", "r", "r", "r", "r", "-C"},
    {"ar", "asr", "r", "r", "r", "ar", "Dplus"},
    {"ar", "asr", "r", "r", "r", "asr", "Dminus"},
    {"ar", "asr", "r", "r", "ar", "r", "Dplus"},
    {"ar", "asr", "r", "r", "ar", "ar", "-Dminus"},
    {"ar", "asr", "r", "r", "ar", "asr", "-C"},
    {"ar", "asr", "r", "r", "asr", "r", "-Dminus"},
    {"ar", "asr", "r", "r", "asr", "ar", "C"},
    {"ar", "asr", "r", "r", "asr", "asr", "Dplus"},
    // F_ar^{asr r ar}
    {"ar", "asr", "r", "ar", "r", "r", "Dplus*p1"},
    {"ar", "asr", "r", "ar", "r", "ar", "Dminus"},
    {"ar", "asr", "r", "ar", "r", "asr", "C*p1"},
    {"ar", "asr", "r", "ar", "ar", "r", "Dminus"},
    {"ar", "asr", "r", "ar", "ar", "ar", "C*p1"},
    {"ar", "asr", "r", "ar", "ar", "asr", "Dplus"},
    {"ar", "asr", "r", "ar", "asr", "r", "C"},
    {"ar", "asr", "r", "ar", "asr", "ar", "Dplus*p1"},
    {"ar", "asr", "r", "ar", "asr", "asr", "Dminus"},
    // F_ar^{asr ar ar}
    {"ar", "asr", "ar", "ar", "r", "r", "Dminus*p1"},
    {"ar", "asr", "ar", "ar", "r", "ar", "-C"},
    {"ar", "asr", "ar", "ar", "r", "asr", "-Dplus"},
    {"ar", "asr", "ar", "ar", "ar", "r", "-C*p1"},
    {"ar", "asr", "ar", "ar", "ar", "ar", "Dplus"},
    {"ar", "asr", "ar", "ar", "ar", "asr", "Dminus"},
    {"ar", "asr", "ar", "ar", "asr", "r", "-Dplus*p1"},
    {"ar", "asr", "ar", "ar", "asr", "ar", "Dminus"},
    {"ar", "asr", "ar", "ar", "asr", "asr", "C"},
    // F_ar^{asr ar asr}
    {"ar", "asr", "ar", "asr", "r", "r", "C*p2"},
    {"ar", "asr", "ar", "asr", "r", "ar", "-Dplus"},
    {"ar", "asr", "ar", "asr", "r", "asr", "-Dminus"},
    {"ar", "asr", "ar", "asr", "ar", "r", "-Dplus*p2"},
    {"ar", "asr", "ar", "asr", "ar", "ar", "Dminus"},
    {"ar", "asr", "ar", "asr", "ar", "asr", "C"},
    {"ar", "asr", "ar", "asr", "asr", "r", "-Dminus*p2"},
    {"ar", "asr", "ar", "asr", "asr", "ar", "C"},
    {"ar", "asr", "ar", "asr", "asr", "asr", "Dplus"},
    // F_ar^{asr asr r}
    {"ar", "asr", "asr", "r", "r", "r", "Dminus*p2"},
    {"ar", "asr", "asr", "r", "r", "ar", "C*p1"},
    {"ar", "asr", "asr", "r", "r", "asr", "Dplus"},
    {"ar", "asr", "asr", "r", "ar", "r", "C*p2"},
    {"ar", "asr", "asr", "r", "ar", "ar", "Dplus*p1"},
    {"ar", "asr", "asr", "r", "ar", "asr", "Dminus"},
    {"ar", "asr", "asr", "r", "asr", "r", "Dplus*p1*p2"},
    {"ar", "asr", "asr", "r", "asr", "ar", "Dminus"},
    {"ar", "asr", "asr", "r", "asr", "asr", "C*p1"},
    // F_ar^{asr asr asr}
    {"ar", "asr", "asr", "asr", "r", "r", "Dplus*p2"},
    {"ar", "asr", "asr", "asr", "r", "ar", "-Dminus*p1*p2"},
    {"ar", "asr", "asr", "asr", "r", "asr", "-C*p1*p2"},
    {"ar", "asr", "asr", "asr", "ar", "r", "-Dminus*p1"},
    {"ar", "asr", "asr", "asr", "ar", "ar", "C"},
    {"ar", "asr", "asr", "asr", "ar", "asr", "Dplus"},
    {"ar", "asr", "asr", "asr", "asr", "r", "-C*p1"},
    {"ar", "asr", "asr", "asr", "asr", "ar", "Dplus"},
    {"ar", "asr", "asr", "asr", "asr", "asr", "Dminus"},
    // F_asr^{r r r}
    {"asr", "r", "r", "r", "r", "r", "Dminus"},
    {"asr", "r", "r", "r", "r", "ar", "C*p1"},
    {"asr", "r", "r", "r", "r", "asr", "Dplus"},
    {"asr", "r", "r", "r", "ar", "r", "-C"},
    {"asr", "r", "r", "r", "ar", "ar", "-Dplus*p1"},
    {"asr", "r", "r", "r", "ar", "asr", "-Dminus"},
    {"asr", "r", "r", "r", "asr", "r", "Dplus"},
    {"asr", "r", "r", "r", "asr", "ar", "Dminus*p1"},
    {"asr", "r", "r", "r", "asr", "asr", "C"},
    // F_asr^{r r ar}
    {"asr", "r", "r", "ar", "r", "r", "C*p1"},
    {"asr", "r", "r", "ar", "r", "ar", "-Dplus"},
    {"asr", "r", "r", "ar", "r", "asr", "Dminus"},
    {"asr", "r", "r", "ar", "ar", "r", "Dplus"},
    {"asr", "r", "r", "ar", "ar", "ar", "-Dminus*p1"},
    {"asr", "r", "r", "ar", "ar", "asr", "C*p1"},
    {"asr", "r", "r", "ar", "asr", "r", "Dminus"},
    {"asr", "r", "r", "ar", "asr", "ar", "-C*p1"},
    {"asr", "r", "r", "ar", "asr", "asr", "Dplus*p1"},
    // F_asr^{r ar ar}
    {"asr", "r", "ar", "ar", "r", "r", "-Dplus"},
    {"asr", "r", "ar", "ar", "r", "ar", "-Dminus"},
    {"asr", "r", "ar", "ar", "r", "asr", "-C"},
    {"asr", "r", "ar", "ar", "ar", "r", "Dminus"},
    {"asr", "r", "ar", "ar", "ar", "ar", "C"},
    {"asr", "r", "ar", "ar", "ar", "asr", "Dplus"},
    {"asr", "r", "ar", "ar", "asr", "r", "C"},
    {"asr", "r", "ar", "ar", "asr", "ar", "Dplus"},
    {"asr", "r", "ar", "ar", "asr", "asr", "Dminus"},
    // F_asr^{r ar asr}
    {"asr", "r", "ar", "asr", "r", "r", "-Dminus"},
    {"asr", "r", "ar", "asr", "r", "ar", "-C"},
    {"asr", "r", "ar", "asr", "r", "asr", "-Dplus"},
    {"asr", "r", "ar", "asr", "ar", "r", "C"},
    {"asr", "r", "ar", "asr", "ar", "ar", "Dplus"},
    {"asr", "r", "ar", "asr", "ar", "asr", "Dminus"},
    {"asr", "r", "ar", "asr", "asr", "r", "Dplus"},
    {"asr", "r", "ar", "asr", "asr", "ar", "Dminus"},
    {"asr", "r", "ar", "asr", "asr", "asr", "C"},
    // F_asr^{r asr r}
    {"asr", "r", "asr", "r", "r", "r", "Dplus"},
    {"asr", "r", "asr", "r", "r", "ar", "-Dminus*p1*p2"},
    {"asr", "r", "asr", "r", "r", "asr", "C*p1"},
    {"asr", "r", "asr", "r", "ar", "r", "Dminus"},
    {"asr", "r", "asr", "r", "ar", "ar", "-C*p1*p2"},
    {"asr", "r", "asr", "r", "ar", "asr", "Dplus*p1"},
    {"asr", "r", "asr", "r", "asr", "r", "C*p1"},
    {"asr", "r", "asr", "r", "asr", "ar", "-Dplus*p2"},
    {"asr", "r", "asr", "r", "asr", "asr", "Dminus"},
    // F_asr^{r asr asr}
    {"asr", "r", "asr", "asr", "r", "r", "-C*p1*p2"},
    {"asr", "r", "asr", "asr", "r", "ar", "-Dplus"},
    {"asr", "r", "asr", "asr", "r", "asr", "-Dminus*p1*p2"},
    {"asr", "r", "asr", "asr", "ar", "r", "Dplus"},
    {"asr", "r", "asr", "asr", "ar", "ar", "Dminus*p1*p2"},
    {"asr", "r", "asr", "asr", "ar", "asr", "C"},
    {"asr", "r", "asr", "asr", "asr", "r", "Dminus"},
    {"asr", "r", "asr", "asr", "asr", "ar", "C*p1*p2"},
    {"asr", "r", "asr", "asr", "asr", "asr", "Dplus"},
    // F_asr^{ar r r}
    {"asr", "ar", "r", "r", "r", "r", "-C"},
    {"asr", "ar", "r", "r", "r", "ar", "Dplus"},
    {"asr", "ar", "r", "r", "r", "asr", "Dminus"},
    {"asr", "ar", "r", "r", "ar", "r", "-Dplus"},
    {"asr", "ar", "r", "r", "ar", "ar", "Dminus"},
    {"asr", "ar", "r", "r", "ar", "asr", "C"},
    {"asr", "ar", "r", "r", "asr", "r", "Dminus"},
    {"asr", "ar", "r", "r", "asr", "ar", "-C"},
    {"asr", "ar", "r", "r", "asr", "asr", "-Dplus"},
    // F_asr^{ar r asr}
    {"asr", "ar", "r", "asr", "r", "r", "-Dminus*p1"},
    {"asr", "ar", "r", "asr", "r", "ar", "-C*p1"},
    {"asr", "ar", "r", "asr", "r", "asr", "Dplus"},
    {"asr", "ar", "r", "asr", "ar", "r", "C*p1*p2"},
    {"asr", "ar", "r", "asr", "ar", "ar", "Dplus*p1*p2"},
    {"asr", "ar", "r", "asr", "ar", "asr", "-Dminus*p2"},
    {"asr", "ar", "r", "asr", "asr", "r", "Dplus"},
    {"asr", "ar", "r", "asr", "asr", "ar", "Dminus"},
    {"asr", "ar", "r", "asr", "asr", "asr", "-C*p1"},
    // F_asr^{ar ar r}
    {"asr", "ar", "ar", "r", "r", "r", "Dplus*p1"},
    {"asr", "ar", "ar", "r", "r", "ar", "Dminus"},
    {"asr", "ar", "ar", "r", "r", "asr", "-C*p1"},
    {"asr", "ar", "ar", "r", "ar", "r", "-Dminus"},
    {"asr", "ar", "ar", "r", "ar", "ar", "-C*p1"},
    {"asr", "ar", "ar", "r", "ar", "asr", "Dplus"},
    {"asr", "ar", "ar", "r", "asr", "r", "C*p1"},
    {"asr", "ar", "ar", "r", "asr", "ar", "Dplus"},
    {"asr", "ar", "ar", "r", "asr", "asr", "-Dminus*p1"},
    // F_asr^{ar ar ar}
    {"asr", "ar", "ar", "ar", "r", "r", "-Dminus*p1"},
    {"asr", "ar", "ar", "ar", "r", "ar", "C"},
    {"asr", "ar", "ar", "ar", "r", "asr", "Dplus"},
    {"asr", "ar", "ar", "ar", "ar", "r", "-C*p1"},
    {"asr", "ar", "ar", "ar", "ar", "ar", "Dplus"},
    {"asr", "ar", "ar", "ar", "ar", "asr", "Dminus"},
    {"asr", "ar", "ar", "ar", "asr", "r", "-Dplus*p1"},
    {"asr", "ar", "ar", "ar", "asr", "ar", "Dminus"},
    {"asr", "ar", "ar", "ar", "asr", "asr", "C"},
    // F_asr^{ar asr ar}
    {"asr", "ar", "asr", "ar", "r", "r", "-C*p1"},
    {"asr", "ar", "asr", "ar", "r", "ar", "Dplus"},
    {"asr", "ar", "asr", "ar", "r", "asr", "Dminus"},
    {"asr", "ar", "asr", "ar", "ar", "r", "-Dplus*p1"},
    {"asr", "ar", "asr", "ar", "ar", "ar", "Dminus"},
    {"asr", "ar", "asr", "ar", "ar", "asr", "C"},
    {"asr", "ar", "asr", "ar", "asr", "r", "-Dminus*p1"},
    {"asr", "ar", "asr", "ar", "asr", "ar", "C"},
    {"asr", "ar", "asr", "ar", "asr", "asr", "Dplus"},
    // F_asr^{ar asr asr}
    {"asr", "ar", "asr", "asr", "r", "r", "-Dplus*p2"},
    {"asr", "ar", "asr", "asr", "r", "ar", "Dminus*p1*p2"},
    {"asr", "ar", "asr", "asr", "r", "asr", "C*p1*p2"},
    {"asr", "ar", "asr", "asr", "ar", "r", "-Dminus*p1"},
    {"asr", "ar", "asr", "asr", "ar", "ar", "C"},
    {"asr", "ar", "asr", "asr", "ar", "asr", "Dplus"},
    {"asr", "ar", "asr", "asr", "asr", "r", "-C*p1"},
    {"asr", "ar", "asr", "asr", "asr", "ar", "Dplus"},
    {"asr", "ar", "asr", "asr", "asr", "asr", "Dminus"},
    // F_asr^{asr r ar}
    {"asr", "asr", "r", "ar", "r", "r", "Dminus"},
    {"asr", "asr", "r", "ar", "r", "ar", "C*p1"},
    {"asr", "asr", "r", "ar", "r", "asr", "Dplus"},
    {"asr", "asr", "r", "ar", "ar", "r", "C"},
    {"asr", "asr", "r", "ar", "ar", "ar", "Dplus*p1"},
    {"asr", "asr", "r", "ar", "ar", "asr", "Dminus"},
    {"asr", "asr", "r", "ar", "asr", "r", "Dplus"},
    {"asr", "asr", "r", "ar", "asr", "ar", "Dminus*p1"},
    {"asr", "asr", "r", "ar", "asr", "asr", "C"},
    // F_asr^{asr r asr}
    {"asr", "asr", "r", "asr", "r", "r", "C"},
    {"asr", "asr", "r", "asr", "r", "ar", "Dplus*p1"},
    {"asr", "asr", "r", "asr", "r", "asr", "Dminus"},
    {"asr", "asr", "r", "asr", "ar", "r", "Dplus*p1*p2"},
    {"asr", "asr", "r", "asr", "ar", "ar", "Dminus*p2"},
    {"asr", "asr", "r", "asr", "ar", "asr", "C*p1*p2"},
    {"asr", "asr", "r", "asr", "asr", "r", "Dminus"},
    {"asr", "asr", "r", "asr", "asr", "ar", "C*p1"},
    {"asr", "asr", "r", "asr", "asr", "asr", "Dplus"},
    // F_asr^{asr ar r}
    {"asr", "asr", "ar", "r", "r", "r", "-Dminus"},
    {"asr", "asr", "ar", "r", "r", "ar", "-C*p1"},
    {"asr", "asr", "ar", "r", "r", "asr", "Dplus"},
    {"asr", "asr", "ar", "r", "ar", "r", "-C"},
    {"asr", "asr", "ar", "r", "ar", "ar", "-Dplus*p1"},
    {"asr", "asr", "ar", "r", "ar", "asr", "Dminus"},
    {"asr", "asr", "ar", "r", "asr", "r", "Dplus*p1"},
    {"asr", "asr", "ar", "r", "asr", "ar", "Dminus"},
    {"asr", "asr", "ar", "r", "asr", "asr", "-C*p1"},
    // F_asr^{asr ar asr}
    {"asr", "asr", "ar", "asr", "r", "r", "Dplus"},
    {"asr", "asr", "ar", "asr", "r", "ar", "-Dminus*p1"},
    {"asr", "asr", "ar", "asr", "r", "asr", "-C*p1"},
    {"asr", "asr", "ar", "asr", "ar", "r", "-Dminus*p1"},
    {"asr", "asr", "ar", "asr", "ar", "ar", "C"},
    {"asr", "asr", "ar", "asr", "ar", "asr", "Dplus"},
    {"asr", "asr", "ar", "asr", "asr", "r", "-C*p1"},
    {"asr", "asr", "ar", "asr", "asr", "ar", "Dplus"},
    {"asr", "asr", "ar", "asr", "asr", "asr", "Dminus"},
    // F_asr^{asr asr r}
    {"asr", "asr", "asr", "r", "r", "r", "-C*p1*p2"},
    {"asr", "asr", "asr", "r", "r", "ar", "-Dplus*p1"},
    {"asr", "asr", "asr", "r", "r", "asr", "Dminus"},
    {"asr", "asr", "asr", "r", "ar", "r", "-Dplus*p2"},
    {"asr", "asr", "asr", "r", "ar", "ar", "-Dminus"},
    {"asr", "asr", "asr", "r", "ar", "asr", "C*p1"},
    {"asr", "asr", "asr", "r", "asr", "r", "-Dminus*p1*p2"},
    {"asr", "asr", "asr", "r", "asr", "ar", "-C*p1"},
    {"asr", "asr", "asr", "r", "asr", "asr", "Dplus"},
    // F_asr^{asr asr ar}
    {"asr", "asr", "asr", "ar", "r", "r", "Dplus*p1*p2"},
    {"asr", "asr", "asr", "ar", "r", "ar", "-Dminus*p1"},
    {"asr", "asr", "asr", "ar", "r", "asr", "-C*p1"},
    {"asr", "asr", "asr", "ar", "ar", "r", "-Dminus*p2"},
    {"asr", "asr", "asr", "ar", "ar", "ar", "C"},
    {"asr", "asr", "asr", "ar", "ar", "asr", "Dplus"},
    {"asr", "asr", "asr", "ar", "asr", "r", "-C*p2"},
    {"asr", "asr", "asr", "ar", "asr", "ar", "Dplus"},
    {"asr", "asr", "asr", "ar", "asr", "asr", "Dminus"},
    // F_r^{r r r}
    {"r", "r", "r", "r", "1", "1", "A"},
    {"r", "r", "r", "r", "1", "r", "sqrtA"},
    {"r", "r", "r", "r", "1", "ar", "-p1*sqrtA"},
    {"r", "r", "r", "r", "1", "asr", "p1*sqrtA"},
    {"r", "r", "r", "r", "r", "1", "sqrtA"},
    {"r", "r", "r", "r", "r", "r", "-B"},
    {"r", "r", "r", "r", "r", "ar", "-Dplus*p1"},
    {"r", "r", "r", "r", "r", "asr", "Dminus*p1"},
    {"r", "r", "r", "r", "ar", "1", "-p1*sqrtA"},
    {"r", "r", "r", "r", "ar", "r", "-Dplus*p1"},
    {"r", "r", "r", "r", "ar", "ar", "Dminus"},
    {"r", "r", "r", "r", "ar", "asr", "B"},
    {"r", "r", "r", "r", "asr", "1", "p1*sqrtA"},
    {"r", "r", "r", "r", "asr", "r", "Dminus*p1"},
    {"r", "r", "r", "r", "asr", "ar", "B"},
    {"r", "r", "r", "r", "asr", "asr", "Dplus"},
    // F_r^{r ar ar}
    {"r", "r", "ar", "ar", "1", "as", "A"},
    {"r", "r", "ar", "ar", "1", "r", "-p1*sqrtA"},
    {"r", "r", "ar", "ar", "1", "ar", "sqrtA"},
    {"r", "r", "ar", "ar", "1", "asr", "sqrtA"},
    {"r", "r", "ar", "ar", "r", "as", "sqrtA"},
    {"r", "r", "ar", "ar", "r", "r", "-Dminus*p1"},
    {"r", "r", "ar", "ar", "r", "ar", "-B"},
    {"r", "r", "ar", "ar", "r", "asr", "Dplus"},
    {"r", "r", "ar", "ar", "ar", "as", "-p1*sqrtA"},
    {"r", "r", "ar", "ar", "ar", "r", "-B"},
    {"r", "r", "ar", "ar", "ar", "ar", "-Dplus*p1"},
    {"r", "r", "ar", "ar", "ar", "asr", "-Dminus*p1"},
    {"r", "r", "ar", "ar", "asr", "as", "-p1*sqrtA"},
    {"r", "r", "ar", "ar", "asr", "r", "Dplus"},
    {"r", "r", "ar", "ar", "asr", "ar", "-Dminus*p1"},
    {"r", "r", "ar", "ar", "asr", "asr", "B*p1"},
    // F_r^{r asr asr}
    {"r", "r", "asr", "asr", "1", "a", "A"},
    {"r", "r", "asr", "asr", "1", "r", "p1*sqrtA"},
    {"r", "r", "asr", "asr", "1", "ar", "-p1*p2*sqrtA"},
    {"r", "r", "asr", "asr", "1", "asr", "-p1*p2*sqrtA"},
    {"r", "r", "asr", "asr", "r", "a", "-p1*p2*sqrtA"},
    {"r", "r", "asr", "asr", "r", "r", "-Dplus*p2"},
    {"r", "r", "asr", "asr", "r", "ar", "Dminus"},
    {"r", "r", "asr", "asr", "r", "asr", "-B"},
    {"r", "r", "asr", "asr", "ar", "a", "p1*sqrtA"},
    {"r", "r", "asr", "asr", "ar", "r", "Dminus"},
    {"r", "r", "asr", "asr", "ar", "ar", "B*p2"},
    {"r", "r", "asr", "asr", "ar", "asr", "-Dplus*p2"},
    {"r", "r", "asr", "asr", "asr", "a", "p1*sqrtA"},
    {"r", "r", "asr", "asr", "asr", "r", "-B"},
    {"r", "r", "asr", "asr", "asr", "ar", "-Dplus*p2"},
    {"r", "r", "asr", "asr", "asr", "asr", "-Dminus*p2"},
    // F_r^{ar r asr}
    {"r", "ar", "r", "asr", "a", "a", "-A"},
    {"r", "ar", "r", "asr", "a", "r", "p1*sqrtA"},
    {"r", "ar", "r", "asr", "a", "ar", "-sqrtA"},
    {"r", "ar", "r", "asr", "a", "asr", "p2*sqrtA"},
    {"r", "ar", "r", "asr", "r", "a", "-p1*sqrtA"},
    {"r", "ar", "r", "asr", "r", "r", "-B"},
    {"r", "ar", "r", "asr", "r", "ar", "-Dplus*p1"},
    {"r", "ar", "r", "asr", "r", "asr", "Dminus*p1*p2"},
    {"r", "ar", "r", "asr", "ar", "a", "p1*p2*sqrtA"},
    {"r", "ar", "r", "asr", "ar", "r", "-Dplus*p2"},
    {"r", "ar", "r", "asr", "ar", "ar", "Dminus*p1*p2"},
    {"r", "ar", "r", "asr", "ar", "asr", "B*p1"},
    {"r", "ar", "r", "asr", "asr", "a", "sqrtA"},
    {"r", "ar", "r", "asr", "asr", "r", "-Dminus*p1"},
    {"r", "ar", "r", "asr", "asr", "ar", "-B"},
    {"r", "ar", "r", "asr", "asr", "asr", "-Dplus*p2"},
    // F_r^{ar ar r}
    {"r", "ar", "ar", "r", "a", "1", "A"},
    {"r", "ar", "ar", "r", "a", "r", "sqrtA"},
    {"r", "ar", "ar", "r", "a", "ar", "-p1*sqrtA"},
    {"r", "ar", "ar", "r", "a", "asr", "-p1*sqrtA"},
    {"r", "ar", "ar", "r", "r", "1", "-p1*sqrtA"},
    {"r", "ar", "ar", "r", "r", "r", "-Dminus*p1"},
    {"r", "ar", "ar", "r", "r", "ar", "-B"},
    {"r", "ar", "ar", "r", "r", "asr", "Dplus"},
    {"r", "ar", "ar", "r", "ar", "1", "sqrtA"},
    {"r", "ar", "ar", "r", "ar", "r", "-B"},
    {"r", "ar", "ar", "r", "ar", "ar", "-Dplus*p1"},
    {"r", "ar", "ar", "r", "ar", "asr", "-Dminus*p1"},
    {"r", "ar", "ar", "r", "asr", "1", "-p1*sqrtA"},
    {"r", "ar", "ar", "r", "asr", "r", "-Dplus*p1"},
    {"r", "ar", "ar", "r", "asr", "ar", "Dminus"},
    {"r", "ar", "ar", "r", "asr", "asr", "-B"},
    // F_r^{ar asr ar}
    {"r", "ar", "asr", "ar", "a", "as", "-A"},
    {"r", "ar", "asr", "ar", "a", "r", "-p1*sqrtA"},
    {"r", "ar", "asr", "ar", "a", "ar", "-p1*sqrtA"},
    {"r", "ar", "asr", "ar", "a", "asr", "-p1*sqrtA"},
    {"r", "ar", "asr", "ar", "r", "as", "p1*sqrtA"},
    {"r", "ar", "asr", "ar", "r", "r", "Dplus"},
    {"r", "ar", "asr", "ar", "r", "ar", "Dminus"},
    {"r", "ar", "asr", "ar", "r", "asr", "-B"},
    {"r", "ar", "asr", "ar", "ar", "as", "p1*sqrtA"},
    {"r", "ar", "asr", "ar", "ar", "r", "Dminus"},
    {"r", "ar", "asr", "ar", "ar", "ar", "-B"},
    {"r", "ar", "asr", "ar", "ar", "asr", "Dplus"},
    {"r", "ar", "asr", "ar", "asr", "as", "p1*sqrtA"},
    {"r", "ar", "asr", "ar", "asr", "r", "-B"},
    {"r", "ar", "asr", "ar", "asr", "ar", "Dplus"},
    {"r", "ar", "asr", "ar", "asr", "asr", "Dminus"},
    // F_r^{asr r ar}
    {"r", "asr", "r", "ar", "as", "as", "-A"},
    {"r", "asr", "r", "ar", "as", "r", "p1*sqrtA"},
    {"r", "asr", "r", "ar", "as", "ar", "-p1*sqrtA"},
    {"r", "asr", "r", "ar", "as", "asr", "-sqrtA"},
    {"r", "asr", "r", "ar", "r", "as", "-p1*sqrtA"},
    {"r", "asr", "r", "ar", "r", "r", "-B"},
    {"r", "asr", "r", "ar", "r", "ar", "-Dplus"},
    {"r", "asr", "r", "ar", "r", "asr", "-Dminus*p1"},
    {"r", "asr", "r", "ar", "ar", "as", "sqrtA"},
    {"r", "asr", "r", "ar", "ar", "r", "-Dplus*p1"},
    {"r", "asr", "r", "ar", "ar", "ar", "Dminus*p1"},
    {"r", "asr", "r", "ar", "ar", "asr", "-B"},
    {"r", "asr", "r", "ar", "asr", "as", "p1*p2*sqrtA"},
    {"r", "asr", "r", "ar", "asr", "r", "-Dminus*p2"},
    {"r", "asr", "r", "ar", "asr", "ar", "-B*p2"},
    {"r", "asr", "r", "ar", "asr", "asr", "Dplus*p1*p2"},
    // F_r^{asr ar asr}
    {"r", "asr", "ar", "asr", "as", "a", "A"},
    {"r", "asr", "ar", "asr", "as", "r", "-p1*sqrtA"},
    {"r", "asr", "ar", "asr", "as", "ar", "-p1*sqrtA"},
    {"r", "asr", "ar", "asr", "as", "asr", "-p2*sqrtA"},
    {"r", "asr", "ar", "asr", "r", "a", "-p1*sqrtA"},
    {"r", "asr", "ar", "asr", "r", "r", "Dminus"},
    {"r", "asr", "ar", "asr", "r", "ar", "-B"},
    {"r", "asr", "ar", "asr", "r", "asr", "Dplus*p1*p2"},
    {"r", "asr", "ar", "asr", "ar", "a", "-p1*sqrtA"},
    {"r", "asr", "ar", "asr", "ar", "r", "-B"},
    {"r", "asr", "ar", "asr", "ar", "ar", "Dplus"},
    {"r", "asr", "ar", "asr", "ar", "asr", "Dminus*p1*p2"},
    {"r", "asr", "ar", "asr", "asr", "a", "-p2*sqrtA"},
    {"r", "asr", "ar", "asr", "asr", "r", "Dplus*p1*p2"},
    {"r", "asr", "ar", "asr", "asr", "ar", "Dminus*p1*p2"},
    {"r", "asr", "ar", "asr", "asr", "asr", "-B"},
    // F_r^{asr asr r}
    {"r", "asr", "asr", "r", "as", "1", "A"},
    {"r", "asr", "asr", "r", "as", "r", "-p1*p2*sqrtA"},
    {"r", "asr", "asr", "r", "as", "ar", "p1*sqrtA"},
    {"r", "asr", "asr", "r", "as", "asr", "p1*sqrtA"},
    {"r", "asr", "asr", "r", "r", "1", "p1*sqrtA"},
    {"r", "asr", "asr", "r", "r", "r", "-Dplus*p2"},
    {"r", "asr", "asr", "r", "r", "ar", "Dminus"},
    {"r", "asr", "asr", "r", "r", "asr", "-B"},
    {"r", "asr", "asr", "r", "ar", "1", "-p1*sqrtA"},
    {"r", "asr", "asr", "r", "ar", "r", "Dminus*p2"},
    {"r", "asr", "asr", "r", "ar", "ar", "B"},
    {"r", "asr", "asr", "r", "ar", "asr", "-Dplus"},
    {"r", "asr", "asr", "r", "asr", "1", "-p1*p2*sqrtA"},
    {"r", "asr", "asr", "r", "asr", "r", "-B"},
    {"r", "asr", "asr", "r", "asr", "ar", "-Dplus*p2"},
    {"r", "asr", "asr", "r", "asr", "asr", "-Dminus*p2"},
    // F_ar^{r r ar}
    {"ar", "r", "r", "ar", "as", "1", "A"},
    {"ar", "r", "r", "ar", "as", "r", "sqrtA"},
    {"ar", "r", "r", "ar", "as", "ar", "-p1*sqrtA"},
    {"ar", "r", "r", "ar", "as", "asr", "p1*sqrtA"},
    {"ar", "r", "r", "ar", "r", "1", "-p1*sqrtA"},
    {"ar", "r", "r", "ar", "r", "r", "-Dminus*p1"},
    {"ar", "r", "r", "ar", "r", "ar", "-B"},
    {"ar", "r", "r", "ar", "r", "asr", "-Dplus"},
    {"ar", "r", "r", "ar", "ar", "1", "sqrtA"},
    {"ar", "r", "r", "ar", "ar", "r", "-B"},
    {"ar", "r", "r", "ar", "ar", "ar", "-Dplus*p1"},
    {"ar", "r", "r", "ar", "ar", "asr", "Dminus*p1"},
    {"ar", "r", "r", "ar", "asr", "1", "p1*p2*sqrtA"},
    {"ar", "r", "r", "ar", "asr", "r", "Dplus*p1*p2"},
    {"ar", "r", "r", "ar", "asr", "ar", "-Dminus*p2"},
    {"ar", "r", "r", "ar", "asr", "asr", "-B*p2"},
    // F_ar^{r ar asr}
    {"ar", "r", "ar", "asr", "as", "as", "A*p1"},
    {"ar", "r", "ar", "asr", "as", "r", "p2*sqrtA"},
    {"ar", "r", "ar", "asr", "as", "ar", "p1*sqrtA"},
    {"ar", "r", "ar", "asr", "as", "asr", "p1*sqrtA"},
    {"ar", "r", "ar", "asr", "r", "as", "sqrtA"},
    {"ar", "r", "ar", "asr", "r", "r", "Dplus*p1*p2"},
    {"ar", "r", "ar", "asr", "r", "ar", "Dminus"},
    {"ar", "r", "ar", "asr", "r", "asr", "-B"},
    {"ar", "r", "ar", "asr", "ar", "as", "sqrtA"},
    {"ar", "r", "ar", "asr", "ar", "r", "Dminus*p1*p2"},
    {"ar", "r", "ar", "asr", "ar", "ar", "-B"},
    {"ar", "r", "ar", "asr", "ar", "asr", "Dplus"},
    {"ar", "r", "ar", "asr", "asr", "as", "p1*p2*sqrtA"},
    {"ar", "r", "ar", "asr", "asr", "r", "-B"},
    {"ar", "r", "ar", "asr", "asr", "ar", "Dplus*p1*p2"},
    {"ar", "r", "ar", "asr", "asr", "asr", "Dminus*p1*p2"},
    // F_ar^{r asr r}
    {"ar", "r", "asr", "r", "as", "a", "-A"},
    {"ar", "r", "asr", "r", "as", "r", "-p1*sqrtA"},
    {"ar", "r", "asr", "r", "as", "ar", "p1*p2*sqrtA"},
    {"ar", "r", "asr", "r", "as", "asr", "p1*sqrtA"},
    {"ar", "r", "asr", "r", "r", "a", "p1*sqrtA"},
    {"ar", "r", "asr", "r", "r", "r", "-B"},
    {"ar", "r", "asr", "r", "r", "ar", "-Dplus*p2"},
    {"ar", "r", "asr", "r", "r", "asr", "-Dminus"},
    {"ar", "r", "asr", "r", "ar", "a", "-p1*sqrtA"},
    {"ar", "r", "asr", "r", "ar", "r", "-Dplus"},
    {"ar", "r", "asr", "r", "ar", "ar", "Dminus*p2"},
    {"ar", "r", "asr", "r", "ar", "asr", "-B"},
    {"ar", "r", "asr", "r", "asr", "a", "-p1*p2*sqrtA"},
    {"ar", "r", "asr", "r", "asr", "r", "-Dminus*p2"},
    {"ar", "r", "asr", "r", "asr", "ar", "-B"},
    {"ar", "r", "asr", "r", "asr", "asr", "Dplus*p2"},
    // F_ar^{ar r r}
    {"ar", "ar", "r", "r", "1", "a", "A"},
    {"ar", "ar", "r", "r", "1", "r", "-p1*sqrtA"},
    {"ar", "ar", "r", "r", "1", "ar", "sqrtA"},
    {"ar", "ar", "r", "r", "1", "asr", "-sqrtA"},
    {"ar", "ar", "r", "r", "r", "a", "sqrtA"},
    {"ar", "ar", "r", "r", "r", "r", "-Dminus*p1"},
    {"ar", "ar", "r", "r", "r", "ar", "-B"},
    {"ar", "ar", "r", "r", "r", "asr", "-Dplus"},
    {"ar", "ar", "r", "r", "ar", "a", "-p1*sqrtA"},
    {"ar", "ar", "r", "r", "ar", "r", "-B"},
    {"ar", "ar", "r", "r", "ar", "ar", "-Dplus*p1"},
    {"ar", "ar", "r", "r", "ar", "asr", "Dminus*p1"},
    {"ar", "ar", "r", "r", "asr", "a", "p1*sqrtA"},
    {"ar", "ar", "r", "r", "asr", "r", "-Dplus"},
    {"ar", "ar", "r", "r", "asr", "ar", "Dminus*p1"},
    {"ar", "ar", "r", "r", "asr", "asr", "B*p1"},
    // F_ar^{ar ar ar}
    {"ar", "ar", "ar", "ar", "1", "1", "A"},
    {"ar", "ar", "ar", "ar", "1", "r", "sqrtA"},
    {"ar", "ar", "ar", "ar", "1", "ar", "-p1*sqrtA"},
    {"ar", "ar", "ar", "ar", "1", "asr", "-p1*sqrtA"},
    {"ar", "ar", "ar", "ar", "r", "1", "sqrtA"},
    {"ar", "ar", "ar", "ar", "r", "r", "Dplus"},
    {"ar", "ar", "ar", "ar", "r", "ar", "-Dminus*p1"},
    {"ar", "ar", "ar", "ar", "r", "asr", "B*p1"},
    {"ar", "ar", "ar", "ar", "ar", "1", "-p1*sqrtA"},
    {"ar", "ar", "ar", "ar", "ar", "r", "-Dminus*p1"},
    {"ar", "ar", "ar", "ar", "ar", "ar", "-B"},
    {"ar", "ar", "ar", "ar", "ar", "asr", "Dplus"},
    {"ar", "ar", "ar", "ar", "asr", "1", "-p1*sqrtA"},
    {"ar", "ar", "ar", "ar", "asr", "r", "B*p1"},
    {"ar", "ar", "ar", "ar", "asr", "ar", "Dplus"},
    {"ar", "ar", "ar", "ar", "asr", "asr", "Dminus"},
    // F_ar^{ar asr asr}
    {"ar", "ar", "asr", "asr", "1", "as", "A"},
    {"ar", "ar", "asr", "asr", "1", "r", "-p1*p2*sqrtA"},
    {"ar", "ar", "asr", "asr", "1", "ar", "p1*sqrtA"},
    {"ar", "ar", "asr", "asr", "1", "asr", "p1*sqrtA"},
    {"ar", "ar", "asr", "asr", "r", "as", "-p1*p2*sqrtA"},
    {"ar", "ar", "asr", "asr", "r", "r", "-B"},
    {"ar", "ar", "asr", "asr", "r", "ar", "-Dplus*p2"},
    {"ar", "ar", "asr", "asr", "r", "asr", "-Dminus*p2"},
    {"ar", "ar", "asr", "asr", "ar", "as", "p1*sqrtA"},
    {"ar", "ar", "asr", "asr", "ar", "r", "-Dplus*p2"},
    {"ar", "ar", "asr", "asr", "ar", "ar", "Dminus"},
    {"ar", "ar", "asr", "asr", "ar", "asr", "-B"},
    {"ar", "ar", "asr", "asr", "asr", "as", "p1*sqrtA"},
    {"ar", "ar", "asr", "asr", "asr", "r", "-Dminus*p2"},
    {"ar", "ar", "asr", "asr", "asr", "ar", "-B"},
    {"ar", "ar", "asr", "asr", "asr", "asr", "Dplus"},
    // F_ar^{asr r asr}
    {"ar", "asr", "r", "asr", "a", "as", "A"},
    {"ar", "asr", "r", "asr", "a", "r", "p1*p2*sqrtA"},
    {"ar", "asr", "r", "asr", "a", "ar", "p1*sqrtA"},
    {"ar", "asr", "r", "asr", "a", "asr", "sqrtA"},
    {"ar", "asr", "r", "asr", "r", "as", "p1*sqrtA"},
    {"ar", "asr", "r", "asr", "r", "r", "Dminus*p2"},
    {"ar", "asr", "r", "asr", "r", "ar", "-B"},
    {"ar", "asr", "r", "asr", "r", "asr", "Dplus*p1"},
    {"ar", "asr", "r", "asr", "ar", "as", "p1*p2*sqrtA"},
    {"ar", "asr", "r", "asr", "ar", "r", "-B"},
    {"ar", "asr", "r", "asr", "ar", "ar", "Dplus*p2"},
    {"ar", "asr", "r", "asr", "ar", "asr", "Dminus*p1*p2"},
    {"ar", "asr", "r", "asr", "asr", "as", "sqrtA"},
    {"ar", "asr", "r", "asr", "asr", "r", "Dplus*p1*p2"},
    {"ar", "asr", "r", "asr", "asr", "ar", "Dminus*p1"},
    {"ar", "asr", "r", "asr", "asr", "asr", "-B"},
    // F_ar^{asr ar r}
    {"ar", "asr", "ar", "r", "a", "a", "A*p1"},
    {"ar", "asr", "ar", "r", "a", "r", "-sqrtA"},
    {"ar", "asr", "ar", "r", "a", "ar", "-sqrtA"},
    {"ar", "asr", "ar", "r", "a", "asr", "-p1*sqrtA"},
    {"ar", "asr", "ar", "r", "r", "a", "-sqrtA"},
    {"ar", "asr", "ar", "r", "r", "r", "Dplus*p1"},
    {"ar", "asr", "ar", "r", "r", "ar", "Dminus*p1"},
    {"ar", "asr", "ar", "r", "r", "asr", "-B"},
    {"ar", "asr", "ar", "r", "ar", "a", "-p1*sqrtA"},
    {"ar", "asr", "ar", "r", "ar", "r", "Dminus"},
    {"ar", "asr", "ar", "r", "ar", "ar", "-B"},
    {"ar", "asr", "ar", "r", "ar", "asr", "Dplus*p1"},
    {"ar", "asr", "ar", "r", "asr", "a", "sqrtA"},
    {"ar", "asr", "ar", "r", "asr", "r", "B*p1"},
    {"ar", "asr", "ar", "r", "asr", "ar", "-Dplus*p1"},
    {"ar", "asr", "ar", "r", "asr", "asr", "-Dminus"},
    // F_ar^{asr asr ar}
    {"ar", "asr", "asr", "ar", "a", "1", "A"},
    {"ar", "asr", "asr", "ar", "a", "r", "-p1*p2*sqrtA"},
    {"ar", "asr", "asr", "ar", "a", "ar", "p1*sqrtA"},
    {"ar", "asr", "asr", "ar", "a", "asr", "p1*sqrtA"},
    {"ar", "asr", "asr", "ar", "r", "1", "-p1*sqrtA"},
    {"ar", "asr", "asr", "ar", "r", "r", "-B*p2"},
    {"ar", "asr", "asr", "ar", "r", "ar", "-Dplus"},
    {"ar", "asr", "asr", "ar", "r", "asr", "-Dminus"},
    {"ar", "asr", "asr", "ar", "ar", "1", "p1*sqrtA"},
    {"ar", "asr", "asr", "ar", "ar", "r", "-Dplus*p2"},
    {"ar", "asr", "asr", "ar", "ar", "ar", "Dminus"},
    {"ar", "asr", "asr", "ar", "ar", "asr", "-B"},
    {"ar", "asr", "asr", "ar", "asr", "1", "p1*sqrtA"},
    {"ar", "asr", "asr", "ar", "asr", "r", "-Dminus*p2"},
    {"ar", "asr", "asr", "ar", "asr", "ar", "-B"},
    {"ar", "asr", "asr", "ar", "asr", "asr", "Dplus"},
    // F_asr^{r r asr}
    {"asr", "r", "r", "asr", "a", "1", "A"},
    {"asr", "r", "r", "asr", "a", "r", "sqrtA"},
    {"asr", "r", "r", "asr", "a", "ar", "-p1*sqrtA"},
    {"asr", "r", "r", "asr", "a", "asr", "p1*sqrtA"},
    {"asr", "r", "r", "asr", "r", "1", "p1*sqrtA"},
    {"asr", "r", "r", "asr", "r", "r", "Dplus*p1"},
    {"asr", "r", "r", "asr", "r", "ar", "-Dminus"},
    {"asr", "r", "r", "asr", "r", "asr", "-B"},
    {"asr", "r", "r", "asr", "ar", "1", "p1*p2*sqrtA"},
    {"asr", "r", "r", "asr", "ar", "r", "Dminus*p1*p2"},
    {"asr", "r", "r", "asr", "ar", "ar", "B*p2"},
    {"asr", "r", "r", "asr", "ar", "asr", "Dplus*p2"},
    {"asr", "r", "r", "asr", "asr", "1", "sqrtA"},
    {"asr", "r", "r", "asr", "asr", "r", "-B"},
    {"asr", "r", "r", "asr", "asr", "ar", "-Dplus*p1"},
    {"asr", "r", "r", "asr", "asr", "asr", "Dminus*p1"},
    // F_asr^{r ar r}
    {"asr", "r", "ar", "r", "a", "as", "-A"},
    {"asr", "r", "ar", "r", "a", "r", "-p1*sqrtA"},
    {"asr", "r", "ar", "r", "a", "ar", "p1*sqrtA"},
    {"asr", "r", "ar", "r", "a", "asr", "-sqrtA"},
    {"asr", "r", "ar", "r", "r", "as", "p1*sqrtA"},
    {"asr", "r", "ar", "r", "r", "r", "-B"},
    {"asr", "r", "ar", "r", "r", "ar", "-Dplus"},
    {"asr", "r", "ar", "r", "r", "asr", "Dminus*p1"},
    {"asr", "r", "ar", "r", "ar", "as", "sqrtA"},
    {"asr", "r", "ar", "r", "ar", "r", "Dplus*p1"},
    {"asr", "r", "ar", "r", "ar", "ar", "-Dminus*p1"},
    {"asr", "r", "ar", "r", "ar", "asr", "-B"},
    {"asr", "r", "ar", "r", "asr", "as", "-p1*sqrtA"},
    {"asr", "r", "ar", "r", "asr", "r", "-Dminus"},
    {"asr", "r", "ar", "r", "asr", "ar", "-B"},
    {"asr", "r", "ar", "r", "asr", "asr", "-Dplus*p1"},
    // F_asr^{r asr ar}
    {"asr", "r", "asr", "ar", "a", "a", "-A*p1"},
    {"asr", "r", "asr", "ar", "a", "r", "p1*sqrtA"},
    {"asr", "r", "asr", "ar", "a", "ar", "p2*sqrtA"},
    {"asr", "r", "asr", "ar", "a", "asr", "p1*sqrtA"},
    {"asr", "r", "asr", "ar", "r", "a", "sqrtA"},
    {"asr", "r", "asr", "ar", "r", "r", "-Dminus"},
    {"asr", "r", "asr", "ar", "r", "ar", "B*p1*p2"},
    {"asr", "r", "asr", "ar", "r", "asr", "-Dplus"},
    {"asr", "r", "asr", "ar", "ar", "a", "-sqrtA"},
    {"asr", "r", "asr", "ar", "ar", "r", "-B"},
    {"asr", "r", "asr", "ar", "ar", "ar", "Dplus*p1*p2"},
    {"asr", "r", "asr", "ar", "ar", "asr", "Dminus"},
    {"asr", "r", "asr", "ar", "asr", "a", "-sqrtA"},
    {"asr", "r", "asr", "ar", "asr", "r", "Dplus"},
    {"asr", "r", "asr", "ar", "asr", "ar", "Dminus*p1*p2"},
    {"asr", "r", "asr", "ar", "asr", "asr", "-B"},
    // F_asr^{ar r ar}
    {"asr", "ar", "r", "ar", "as", "a", "-A"},
    {"asr", "ar", "r", "ar", "as", "r", "-sqrtA"},
    {"asr", "ar", "r", "ar", "as", "ar", "-sqrtA"},
    {"asr", "ar", "r", "ar", "as", "asr", "p1*sqrtA"},
    {"asr", "ar", "r", "ar", "r", "a", "-p1*sqrtA"},
    {"asr", "ar", "r", "ar", "r", "r", "-Dplus*p1"},
    {"asr", "ar", "r", "ar", "r", "ar", "-Dminus*p1"},
    {"asr", "ar", "r", "ar", "r", "asr", "-B"},
    {"asr", "ar", "r", "ar", "ar", "a", "sqrtA"},
    {"asr", "ar", "r", "ar", "ar", "r", "Dminus"},
    {"asr", "ar", "r", "ar", "ar", "ar", "-B"},
    {"asr", "ar", "r", "ar", "ar", "asr", "-Dplus*p1"},
    {"asr", "ar", "r", "ar", "asr", "a", "sqrtA"},
    {"asr", "ar", "r", "ar", "asr", "r", "-B"},
    {"asr", "ar", "r", "ar", "asr", "ar", "Dplus"},
    {"asr", "ar", "r", "ar", "asr", "asr", "-Dminus*p1"},
    // F_asr^{ar ar asr}
    {"asr", "ar", "ar", "asr", "as", "1", "A"},
    {"asr", "ar", "ar", "asr", "as", "r", "sqrtA"},
    {"asr", "ar", "ar", "asr", "as", "ar", "-p1*sqrtA"},
    {"asr", "ar", "ar", "asr", "as", "asr", "-p1*sqrtA"},
    {"asr", "ar", "ar", "asr", "r", "1", "-p1*sqrtA"},
    {"asr", "ar", "ar", "asr", "r", "r", "B*p1"},
    {"asr", "ar", "ar", "asr", "r", "ar", "Dplus"},
    {"asr", "ar", "ar", "asr", "r", "asr", "Dminus"},
    {"asr", "ar", "ar", "asr", "ar", "1", "-p1*sqrtA"},
    {"asr", "ar", "ar", "asr", "ar", "r", "-Dplus*p1"},
    {"asr", "ar", "ar", "asr", "ar", "ar", "Dminus"},
    {"asr", "ar", "ar", "asr", "ar", "asr", "-B"},
    {"asr", "ar", "ar", "asr", "asr", "1", "-p1*sqrtA"},
    {"asr", "ar", "ar", "asr", "asr", "r", "-Dminus*p1"},
    {"asr", "ar", "ar", "asr", "asr", "ar", "-B"},
    {"asr", "ar", "ar", "asr", "asr", "asr", "Dplus"},
    // F_asr^{ar asr r}
    {"asr", "ar", "asr", "r", "as", "as", "-A*p1"},
    {"asr", "ar", "asr", "r", "as", "r", "sqrtA"},
    {"asr", "ar", "asr", "r", "as", "ar", "p1*sqrtA"},
    {"asr", "ar", "asr", "r", "as", "asr", "-sqrtA"},
    {"asr", "ar", "asr", "r", "r", "as", "-sqrtA"},
    {"asr", "ar", "asr", "r", "r", "r", "Dminus*p1"},
    {"asr", "ar", "asr", "r", "r", "ar", "-B"},
    {"asr", "ar", "asr", "r", "r", "asr", "-Dplus*p1"},
    {"asr", "ar", "asr", "r", "ar", "as", "sqrtA"},
    {"asr", "ar", "asr", "r", "ar", "r", "B*p1"},
    {"asr", "ar", "asr", "r", "ar", "ar", "-Dplus"},
    {"asr", "ar", "asr", "r", "ar", "asr", "Dminus*p1"},
    {"asr", "ar", "asr", "r", "asr", "as", "p1*sqrtA"},
    {"asr", "ar", "asr", "r", "asr", "r", "-Dplus"},
    {"asr", "ar", "asr", "r", "asr", "ar", "-Dminus*p1"},
    {"asr", "ar", "asr", "r", "asr", "asr", "-B"},
    // F_asr^{asr r r}
    {"asr", "asr", "r", "r", "1", "as", "A"},
    {"asr", "asr", "r", "r", "1", "r", "p1*sqrtA"},
    {"asr", "asr", "r", "r", "1", "ar", "-sqrtA"},
    {"asr", "asr", "r", "r", "1", "asr", "sqrtA"},
    {"asr", "asr", "r", "r", "r", "as", "sqrtA"},
    {"asr", "asr", "r", "r", "r", "r", "Dplus*p1"},
    {"asr", "asr", "r", "r", "r", "ar", "-Dminus"},
    {"asr", "asr", "r", "r", "r", "asr", "-B"},
    {"asr", "asr", "r", "r", "ar", "as", "-p1*sqrtA"},
    {"asr", "asr", "r", "r", "ar", "r", "-Dminus"},
    {"asr", "asr", "r", "r", "ar", "ar", "-B*p1"},
    {"asr", "asr", "r", "r", "ar", "asr", "-Dplus*p1"},
    {"asr", "asr", "r", "r", "asr", "as", "p1*sqrtA"},
    {"asr", "asr", "r", "r", "asr", "r", "-B"},
    {"asr", "asr", "r", "r", "asr", "ar", "-Dplus*p1"},
    {"asr", "asr", "r", "r", "asr", "asr", "Dminus*p1"},
    // F_asr^{asr ar ar}
    {"asr", "asr", "ar", "ar", "1", "a", "A"},
    {"asr", "asr", "ar", "ar", "1", "r", "sqrtA"},
    {"asr", "asr", "ar", "ar", "1", "ar", "-p1*sqrtA"},
    {"asr", "asr", "ar", "ar", "1", "asr", "-p1*sqrtA"},
    {"asr", "asr", "ar", "ar", "r", "a", "sqrtA"},
    {"asr", "asr", "ar", "ar", "r", "r", "-B"},
    {"asr", "asr", "ar", "ar", "r", "ar", "-Dplus*p1"},
    {"asr", "asr", "ar", "ar", "r", "asr", "-Dminus*p1"},
    {"asr", "asr", "ar", "ar", "ar", "a", "-p1*sqrtA"},
    {"asr", "asr", "ar", "ar", "ar", "r", "-Dplus*p1"},
    {"asr", "asr", "ar", "ar", "ar", "ar", "Dminus"},
    {"asr", "asr", "ar", "ar", "ar", "asr", "-B"},
    {"asr", "asr", "ar", "ar", "asr", "a", "-p1*sqrtA"},
    {"asr", "asr", "ar", "ar", "asr", "r", "-Dminus*p1"},
    {"asr", "asr", "ar", "ar", "asr", "ar", "-B"},
    {"asr", "asr", "ar", "ar", "asr", "asr", "Dplus"},
    // F_asr^{asr asr asr}
    {"asr", "asr", "asr", "asr", "1", "1", "A"},
    {"asr", "asr", "asr", "asr", "1", "r", "-p1*p2*sqrtA"},
    {"asr", "asr", "asr", "asr", "1", "ar", "p1*sqrtA"},
    {"asr", "asr", "asr", "asr", "1", "asr", "p1*sqrtA"},
    {"asr", "asr", "asr", "asr", "r", "1", "-p1*p2*sqrtA"},
    {"asr", "asr", "asr", "asr", "r", "r", "Dminus"},
    {"asr", "asr", "asr", "asr", "r", "ar", "B*p2"},
    {"asr", "asr", "asr", "asr", "r", "asr", "-Dplus*p2"},
    {"asr", "asr", "asr", "asr", "ar", "1", "p1*sqrtA"},
    {"asr", "asr", "asr", "asr", "ar", "r", "B*p2"},
    {"asr", "asr", "asr", "asr", "ar", "ar", "Dplus"},
    {"asr", "asr", "asr", "asr", "ar", "asr", "Dminus"},
    {"asr", "asr", "asr", "asr", "asr", "1", "p1*sqrtA"},
    {"asr", "asr", "asr", "asr", "asr", "r", "-Dplus*p2"},
    {"asr", "asr", "asr", "asr", "asr", "ar", "Dminus"},
    {"asr", "asr", "asr", "asr", "asr", "asr", "-B"},
  };
  return entries;
}

}  // namespace fusioncat::detail
