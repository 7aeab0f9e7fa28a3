#pragma once

#include <hyperdelta/error.hpp>
#include <hyperdelta/scalar.hpp>

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperdelta::lang {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Integer or decimal literal, kept as source text so every consumer can
/// read it at its own precision (exact rational or working-precision Real).
struct Number {
  std::string text;
};

struct Symbol {
  std::string name;
};

struct Unary {
  char op;  // '-' or '+'
  ExprPtr operand;
};

struct Binary {
  char op;  // + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};

/// base ^ q with q a rational literal.
struct Power {
  ExprPtr base;
  Exponent exponent;
};

struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<Number, Symbol, Unary, Binary, Power, Call> node;
  std::size_t offset = 0;  // byte offset of the node in the source text
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::set<std::string> expected, const std::string& found);

  std::size_t position() const { return position_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::set<std::string> expected_;
};

/// Parses
///
///   expr     := term (('+' | '-') term)*
///   term     := unary (('*' | '/') unary)*
///   unary    := ('-' | '+') unary | power
///   power    := primary ('^' exponent)?
///   exponent := signed-number | '(' signed-number ('/' signed-number)? ')'
///   primary  := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
///
/// Throws SyntaxError with the byte offset and the expected-token set, or
/// Error(NonRationalExponent) when '^' is followed by anything but a
/// rational literal.
ExprPtr parse_expr(std::string_view text);

/// Fully parenthesized rendering of the tree, e.g. "(+ 1 (^ eta 1/2))".
std::string to_sexpr(const Expr& e);

}  // namespace hyperdelta::lang
