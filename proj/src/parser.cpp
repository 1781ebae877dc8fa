#include "qspace/parser.hpp"

#include <limits>
#include <vector>

#include "qspace/unit_system.hpp"

namespace qspace {

namespace {

enum class Tok {
  Number,
  Symbol,
  DimlessOne,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::size_t length;
  std::string text;      // Number/Symbol
  Rational number;       // Number
  bool integral = false; // Number with no '.'/exponent part
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool symbol_head(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}

bool symbol_tail(unsigned char c) { return symbol_head(c) || is_digit(c); }

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      tokens.push_back(next());
    }
    tokens.push_back({Tok::End, text_.size(), 0, "", Rational(0), false});
    return tokens;
  }

private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
        ++pos_;
      else
        break;
    }
  }

  bool at_middle_dot() const {
    return pos_ + 1 < text_.size() &&
           static_cast<unsigned char>(text_[pos_]) == 0xc2 &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0xb7;
  }

  Token simple(Tok kind, std::size_t length) {
    Token t{kind, pos_, length, "", Rational(0), false};
    pos_ += length;
    return t;
  }

  Token next() {
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (at_middle_dot()) return simple(Tok::Star, 2);
    switch (c) {
      case '+': return simple(Tok::Plus, 1);
      case '-': return simple(Tok::Minus, 1);
      case '*': return simple(Tok::Star, 1);
      case '/': return simple(Tok::Slash, 1);
      case '^': return simple(Tok::Caret, 1);
      case '(': return simple(Tok::LParen, 1);
      case ')': return simple(Tok::RParen, 1);
      case '[':
        if (text_.substr(pos_).rfind("[1]", 0) == 0) return simple(Tok::DimlessOne, 3);
        throw SyntaxError(pos_, "unexpected '['; only the dimensionless unit [1] uses brackets");
      default: break;
    }
    if (is_digit(c)) return number();
    if (symbol_head(c)) return symbol();
    throw SyntaxError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  Token number() {
    std::size_t start = pos_;
    bool integral = true;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      if (pos_ + 1 >= text_.size() || !is_digit(text_[pos_ + 1]))
        throw SyntaxError(pos_, "expected a digit after the decimal point");
      integral = false;
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    // e/E is scientific notation only when digits follow; otherwise it is a
    // juxtaposed symbol ("2 e3" stays a product, "2e3" is 2000).
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t probe = pos_ + 1;
      if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-')) ++probe;
      if (probe < text_.size() && is_digit(text_[probe])) {
        integral = false;
        pos_ = probe;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      }
    }
    Token t{Tok::Number, start, pos_ - start, std::string(text_.substr(start, pos_ - start)),
            Rational(0), integral};
    auto value = parse_rational(t.text);
    if (!value) throw SyntaxError(start, "malformed number '" + t.text + "'");
    t.number = std::move(*value);
    return t;
  }

  Token symbol() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !at_middle_dot() &&
           symbol_tail(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    Token t{Tok::Symbol, start, pos_ - start,
            std::string(text_.substr(start, pos_ - start)), Rational(0), false};
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::End)
      throw SyntaxError(peek().offset, "unexpected trailing input");
    return e;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& take() { return tokens_[pos_++]; }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      ExprKind kind = take().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      e = make_binary(kind, std::move(e), parse_term());
    }
    return e;
  }

  static bool starts_factor(Tok kind) {
    return kind == Tok::Number || kind == Tok::Symbol || kind == Tok::DimlessOne ||
           kind == Tok::LParen;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (true) {
      Tok kind = peek().kind;
      if (kind == Tok::Star || kind == Tok::Slash) {
        ExprKind op = take().kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
        e = make_binary(op, std::move(e), parse_factor());
      } else if (starts_factor(kind)) {
        e = make_binary(ExprKind::Mul, std::move(e), parse_factor());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_factor() {
    if (peek().kind == Tok::Minus) {
      take();
      return make_unary(ExprKind::Neg, parse_factor());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (peek().kind != Tok::Caret) return base;
    std::vector<std::pair<std::int64_t, std::size_t>> tower;
    while (peek().kind == Tok::Caret) {
      take();
      tower.push_back(parse_exponent_literal());
    }
    // Chained '^' folds right-associatively over the literal tower.
    std::int64_t k = tower.back().first;
    for (std::size_t i = tower.size() - 1; i-- > 0;)
      k = int_power(tower[i].first, k, tower[i].second);
    return make_pow(std::move(base), k);
  }

  std::pair<std::int64_t, std::size_t> parse_exponent_literal() {
    bool negative = false;
    std::size_t offset = peek().offset;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Number || !peek().integral)
      throw SyntaxError(peek().offset, "exponent must be an integer literal");
    const Token& t = take();
    const Integer& num = numerator(t.number);
    if (num > std::numeric_limits<std::int64_t>::max())
      fail(ErrorCode::ExponentOverflow, "exponent exceeds 64-bit range");
    std::int64_t k = num.convert_to<std::int64_t>();
    return {negative ? checked_neg(k) : k, offset};
  }

  static std::int64_t int_power(std::int64_t base, std::int64_t exp, std::size_t offset) {
    if (base == 0) {
      if (exp < 0) throw SyntaxError(offset, "exponent tower is not an integer");
      return exp == 0 ? 1 : 0;
    }
    if (base == 1) return 1;
    if (base == -1) return (exp & 1) ? -1 : 1;
    if (exp < 0) throw SyntaxError(offset, "exponent tower is not an integer");
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < exp; ++i) acc = checked_mul(acc, base);
    return acc;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        const Token& num = take();
        // integer '/' integer, all adjacent: one rational literal.
        if (num.integral && peek().kind == Tok::Slash &&
            peek().offset == num.offset + num.length &&
            peek(1).kind == Tok::Number && peek(1).integral &&
            peek(1).offset == peek().offset + 1) {
          take();
          const Token& den = take();
          if (den.number == 0)
            throw SyntaxError(den.offset, "zero denominator in rational literal");
          return make_number(num.number / den.number);
        }
        return make_number(num.number);
      }
      case Tok::Symbol:
        return make_symbol(take().text);
      case Tok::DimlessOne:
        take();
        return make_symbol("[1]");
      case Tok::LParen: {
        take();
        ExprPtr inner = parse_expr();
        if (peek().kind != Tok::RParen)
          throw SyntaxError(peek().offset, "expected ')'");
        take();
        return make_unary(ExprKind::Paren, std::move(inner));
      }
      default:
        throw SyntaxError(t.offset, "expected a number, symbol, or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

}  // namespace qspace
