#ifndef FUSIONCAT_SCALAR_TEXT_HPP
#define FUSIONCAT_SCALAR_TEXT_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "fusioncat/exactnum.hpp"

namespace fusioncat {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_, column_;
  std::string reason_;
};

std::string format_rational(const Rational& q);

// Canonical grouped form: each group collects the coordinates that differ
// only in the first root, written (a+b*r13), followed by the remaining root
// and parameter tokens. Zero is "0". Example: (-1/2+1/2*r13)*rA*p1.
std::string to_text(const ParamScalar& x);
std::string to_text(const FieldScalar& x);

// One parenthesised coefficient per basis monomial: (7/18)+(1/18)*r13.
std::string to_text_expanded(const FieldScalar& x);

// Parses sums, products, quotients, unary minus, parentheses, rationals n/d,
// root tokens of the tower, p1, p2 and any extra named symbols. line/column
// locate the text inside a larger file for error messages.
using SymbolMap = std::map<std::string, ParamScalar, std::less<>>;

ParamScalar parse_scalar(std::string_view text, const TowerPtr& tower, std::size_t line = 1,
                         std::size_t column = 1, const SymbolMap* symbols = nullptr);

}  // namespace fusioncat

#endif  // FUSIONCAT_SCALAR_TEXT_HPP
