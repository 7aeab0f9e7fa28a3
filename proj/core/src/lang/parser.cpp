#include <hyperdelta/lang/expr.hpp>

#include <cctype>
#include <sstream>

namespace hyperdelta::lang {

namespace {

std::string describe(const std::set<std::string>& expected, std::size_t position, const std::string& found) {
  std::ostringstream os;
  os << "at byte " << position << ": expected ";
  bool first = true;
  for (const auto& e : expected) {
    os << (first ? "" : " | ") << e;
    first = false;
  }
  os << ", found " << found;
  return os.str();
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    throw SyntaxError(pos_, std::move(expected), found());
  }

  template <typename Node>
  static ExprPtr make(std::size_t offset, Node node) {
    return std::make_shared<const Expr>(Expr{std::move(node), offset});
  }

  ExprPtr expr() {
    auto lhs = term();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) lhs = make(at, Binary{'+', lhs, term()});
      else if (accept('-')) lhs = make(at, Binary{'-', lhs, term()});
      else return lhs;
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) lhs = make(at, Binary{'*', lhs, unary()});
      else if (accept('/')) lhs = make(at, Binary{'/', lhs, unary()});
      else return lhs;
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return make(at, Unary{'-', unary()});
    if (accept('+')) return make(at, Unary{'+', unary()});
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) return make(at, Power{base, exponent()});
    return base;
  }

  bool at_number() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    if (is_digit(text_[pos_])) return true;
    return text_[pos_] == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]);
  }

  std::string number_text() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    // Scientific suffix only when digits follow, so "2eta" is not misread.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && is_digit(text_[pos_])) {
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      } else {
        pos_ = save;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void non_rational(std::size_t at) {
    throw Error(ErrorCode::NonRationalExponent,
                "at byte " + std::to_string(at) + ": exponent must be a rational literal");
  }

  Rational signed_literal(std::size_t exponent_start) {
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    if (!at_number()) non_rational(exponent_start);
    Rational v = parse_decimal(number_text());
    return negative ? Rational(-v) : v;
  }

  Exponent exponent() {
    skip_space();
    const std::size_t start = pos_;
    Rational value;
    if (accept('(')) {
      value = signed_literal(start);
      if (accept('/')) {
        Rational den = signed_literal(start);
        if (den == 0)
          throw Error(ErrorCode::ZeroDivision, "at byte " + std::to_string(start) + ": zero exponent denominator");
        value /= den;
      }
      if (!accept(')')) non_rational(start);
    } else {
      value = signed_literal(start);
    }
    using boost::multiprecision::cpp_int;
    const cpp_int num = boost::multiprecision::numerator(value);
    const cpp_int den = boost::multiprecision::denominator(value);
    const cpp_int limit = cpp_int(1) << 40;
    if (boost::multiprecision::abs(num) > limit || den > limit) non_rational(start);
    return Exponent(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
  }

  ExprPtr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (at_number()) return make(at, Number{number_text()});
    if (accept('(')) {
      auto inner = expr();
      if (!accept(')')) fail({"')'", "operator"});
      return inner;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (accept('(')) {
        Call call{name, {}};
        call.args.push_back(expr());
        while (accept(',')) call.args.push_back(expr());
        if (!accept(')')) fail({"')'", "','", "operator"});
        return make(at, std::move(call));
      }
      return make(at, Symbol{name});
    }
    fail({"number", "identifier", "'('", "'-'"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(std::ostream& os, const Expr& e) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          os << n.text;
        } else if constexpr (std::is_same_v<T, Symbol>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, Unary>) {
          os << "(" << n.op << " ";
          write(os, *n.operand);
          os << ")";
        } else if constexpr (std::is_same_v<T, Binary>) {
          os << "(" << n.op << " ";
          write(os, *n.lhs);
          os << " ";
          write(os, *n.rhs);
          os << ")";
        } else if constexpr (std::is_same_v<T, Power>) {
          os << "(^ ";
          write(os, *n.base);
          os << " " << to_string(n.exponent) << ")";
        } else {
          os << "(" << n.name;
          for (const auto& a : n.args) {
            os << " ";
            write(os, *a);
          }
          os << ")";
        }
      },
      e.node);
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::set<std::string> expected, const std::string& found)
    : Error(ErrorCode::SyntaxError, describe(expected, position, found)),
      position_(position),
      expected_(std::move(expected)) {}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_sexpr(const Expr& e) {
  std::ostringstream os;
  write(os, e);
  return os.str();
}

}  // namespace hyperdelta::lang
