#pragma once

// Recursive-descent parser for the matrix-entry grammar
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := int | 'z' | variable | '(' expr ')'
//
// `a/b` with integer literals is the rational literal of the grammar; any
// other divisor must also evaluate to a nonzero constant. Unary minus is
// accepted so that entries such as "-1/2" can be written directly.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/field.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

namespace detail {

class ExpressionParser {
 public:
  /// `variables` maps accepted identifiers to variable indices.
  ExpressionParser(std::string_view text, Field field, std::size_t nvars, std::map<std::string, std::size_t> variables,
                   bool generator_allowed)
      : text_(text), field_(field), nvars_(nvars), variables_(std::move(variables)), generator_allowed_(generator_allowed) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant()) throw ParseError(at, "divisor must be a constant");
        const FieldElement c = d.constant_term();
        if (c.is_zero()) throw DivisionByZero();
        acc *= c.inverse();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(at, "expected a non-negative integer exponent");
      const Integer e = digits();
      if (e > 100000) throw ParseError(at, "exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(field_.from_integer(digits()), nvars_);
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto it = variables_.find(name); it != variables_.end())
        return Polynomial::variable(field_, nvars_, it->second);
      if (name == "z") {
        if (!generator_allowed_) throw ParseError(start, "symbol z is not available in " + field_.name());
        return Polynomial::constant(field_.generator(), nvars_);
      }
      throw ParseError(start, "unknown symbol '" + name + "'");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Field field_;
  std::size_t nvars_;
  std::map<std::string, std::size_t> variables_;
  bool generator_allowed_;
};

inline std::map<std::string, std::size_t> standard_variables(std::size_t nvars) {
  std::map<std::string, std::size_t> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars["x" + std::to_string(i + 1)] = i;
  if (nvars >= 1) vars["x"] = 0;
  if (nvars >= 2) vars["y"] = 1;
  return vars;
}

inline std::vector<Rational> parse_rational_z_poly(std::string_view text) {
  ExpressionParser parser(text, Field::rational(), 1, {{"z", 0}}, false);
  const auto dense = dense_coefficients(parser.parse());
  std::vector<Rational> out;
  for (const auto& c : dense) out.push_back(c.rational_value());
  return out;
}

inline std::vector<std::int64_t> parse_modular_z_poly(std::string_view text, std::uint64_t p) {
  const Field fp = Field::finite(p);
  ExpressionParser parser(text, fp, 1, {{"z", 0}}, false);
  std::vector<std::int64_t> out;
  for (const auto& c : dense_coefficients(parser.parse())) out.push_back(c.modular_coeffs().empty() ? 0 : c.modular_coeffs()[0]);
  return out;
}

inline std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace detail

/// Parses a field element in the entry grammar; `z` denotes the defining root.
inline FieldElement parse_element(std::string_view text, Field field) {
  detail::ExpressionParser parser(text, field, 0, {}, field->kind() != FieldKind::rational);
  return parser.parse().constant_term();
}

/// Parses a polynomial in x1..xn (aliases x = x1, y = x2); `z` is the field generator.
inline Polynomial parse_polynomial(std::string_view text, Field field, std::size_t nvars) {
  detail::ExpressionParser parser(text, field, nvars, detail::standard_variables(nvars), field->kind() != FieldKind::rational);
  return parser.parse();
}

/// Parses a polynomial over explicitly named variables.
inline Polynomial parse_polynomial(std::string_view text, Field field, const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> vars;
  for (std::size_t i = 0; i < names.size(); ++i) vars[names[i]] = i;
  detail::ExpressionParser parser(text, field, names.size(), vars, field->kind() != FieldKind::rational && !vars.count("z"));
  return parser.parse();
}

/// Field spec text: `Q`, `cyclotomic(n)`, `number_field(<poly in z>)`,
/// `finite(p)` or `finite(p, <poly in z>)`.
inline Field parse_field(std::string_view text_in) {
  const std::string text = detail::trim_copy(text_in);
  if (text == "Q" || text == "rational" || text == "QQ") return Field::rational();
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw ParseError(0, "unknown field spec '" + text + "'");
  const std::string head = detail::trim_copy(std::string_view(text).substr(0, open));
  const std::string body = text.substr(open + 1, text.size() - open - 2);
  try {
    if (head == "cyclotomic") {
      const auto n = std::stoul(detail::trim_copy(body));
      return Field::cyclotomic(static_cast<unsigned>(n));
    }
    if (head == "number_field") return Field::number_field(detail::parse_rational_z_poly(body));
    if (head == "finite" || head == "GF") {
      const auto comma = body.find(',');
      const auto p = std::stoull(detail::trim_copy(body.substr(0, comma)));
      if (comma == std::string::npos) return Field::finite(p);
      if (!detail::is_prime(p)) throw DomainError("finite field characteristic must be prime");
      return Field::finite(p, detail::parse_modular_z_poly(body.substr(comma + 1), p));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError(open + 1, "expected an integer in field spec '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError(open + 1, "integer out of range in field spec '" + text + "'");
  }
  throw ParseError(0, "unknown field kind '" + head + "'");
}

}  // namespace invforge
