#include "fusioncat/scalar_text.hpp"

#include <cctype>

namespace fusioncat {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

std::string format_rational(const Rational& q) { return q.get_str(); }

namespace {

std::string outer_monomial(const Tower& t, std::size_t field_index, std::size_t pmono) {
  std::string s;
  for (std::size_t l = 1; l < t.num_levels(); ++l)
    if (field_index >> l & 1) s += "*" + t.level(l).token;
  if (pmono & 1) s += "*p1";
  if (pmono & 2) s += "*p2";
  return s;
}

// a + b*root, for the first level.
std::string inner(const Rational& a, const Rational& b, const std::string& root) {
  std::string s;
  if (sgn(a) != 0) s = format_rational(a);
  if (sgn(b) != 0) {
    std::string coef;
    if (b == 1)
      coef = root;
    else if (b == -1)
      coef = "-" + root;
    else
      coef = format_rational(b) + "*" + root;
    if (!s.empty() && coef[0] != '-') s += "+";
    s += coef;
  }
  return s;
}

void append_groups(std::string& out, const FieldScalar& x, std::size_t pmono) {
  const Tower& t = *x.tower();
  std::size_t n = t.degree();
  std::size_t step = t.num_levels() > 0 ? 2 : 1;
  std::string root = t.num_levels() > 0 ? t.level(0).token : "";
  for (std::size_t i = 0; i < n; i += step) {
    Rational a = x.coord(i);
    Rational b = step == 2 ? x.coord(i + 1) : Rational(0);
    if (sgn(a) == 0 && sgn(b) == 0) continue;
    if (!out.empty()) out += "+";
    out += "(" + inner(a, b, root) + ")" + outer_monomial(t, i, pmono);
  }
}

}  // namespace

std::string to_text(const ParamScalar& x) {
  std::string out;
  for (std::size_t m = 0; m < 4; ++m) append_groups(out, x.term(m), m);
  return out.empty() ? "0" : out;
}

std::string to_text(const FieldScalar& x) { return to_text(ParamScalar(x)); }

std::string to_text_expanded(const FieldScalar& x) {
  const Tower& t = *x.tower();
  std::string out;
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (sgn(x.coord(i)) == 0) continue;
    if (!out.empty()) out += "+";
    out += "(" + format_rational(x.coord(i)) + ")";
    for (std::size_t l = 0; l < t.num_levels(); ++l)
      if (i >> l & 1) out += "*" + t.level(l).token;
  }
  return out.empty() ? "0" : out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TowerPtr& tower, std::size_t line, std::size_t column,
         const SymbolMap* symbols)
      : text_(text), tower_(tower), line_(line), column_(column), symbols_(symbols) {}

  ParamScalar run() {
    ParamScalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_, column_ + pos_, reason);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamScalar expr() {
    ParamScalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  ParamScalar term() {
    ParamScalar v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        ParamScalar d = factor();
        if (d.is_zero()) {
          pos_ = at;
          skip_ws();
          fail("zero denominator");
        }
        try {
          v = v * d.inverse();
        } catch (const Error&) {
          pos_ = at;
          fail("zero denominator");
        }
      } else {
        return v;
      }
    }
  }

  ParamScalar factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '(') {
      ++pos_;
      ParamScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return ParamScalar::constant(tower_, Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view tok = text_.substr(start, pos_ - start);
      if (tok == "p1") return ParamScalar::p1(tower_);
      if (tok == "p2") return ParamScalar::p2(tower_);
      if (auto level = tower_->find_level(tok)) return ParamScalar(FieldScalar::root(tower_, *level));
      if (symbols_) {
        auto it = symbols_->find(tok);
        if (it != symbols_->end()) return it->second;
      }
      pos_ = start;
      fail("unknown token '" + std::string(tok) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const TowerPtr& tower_;
  std::size_t line_, column_;
  const SymbolMap* symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamScalar parse_scalar(std::string_view text, const TowerPtr& tower, std::size_t line,
                         std::size_t column, const SymbolMap* symbols) {
  return Parser(text, tower, line, column, symbols).run();
}

}  // namespace fusioncat
