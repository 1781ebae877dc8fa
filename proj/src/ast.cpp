#include "qspace/ast.hpp"

#include "qspace/error.hpp"

namespace qspace {

ExprPtr make_number(Rational value) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Number;
  e->number = std::move(value);
  return e;
}

ExprPtr make_symbol(std::string name) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Symbol;
  e->symbol = std::move(name);
  return e;
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_pow(ExprPtr base, std::int64_t exponent) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

ExprPtr make_unary(ExprKind kind, ExprPtr child) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->lhs = std::move(child);
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Number:
      return a.number == b.number;
    case ExprKind::Symbol:
      return a.symbol == b.symbol;
    case ExprKind::Pow:
      return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
    case ExprKind::Neg:
    case ExprKind::Paren:
      return expr_equal(*a.lhs, *b.lhs);
    default:
      return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
  }
}

std::string expr_to_text(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return rational_to_string(e.number);
    case ExprKind::Symbol:
      return e.symbol;
    case ExprKind::Add:
      return expr_to_text(*e.lhs) + " + " + expr_to_text(*e.rhs);
    case ExprKind::Sub:
      return expr_to_text(*e.lhs) + " - " + expr_to_text(*e.rhs);
    case ExprKind::Mul:
      return expr_to_text(*e.lhs) + "*" + expr_to_text(*e.rhs);
    case ExprKind::Div:
      // Spaced so an integer/integer pair is never re-lexed as one rational
      // literal (those fuse only when adjacent).
      return expr_to_text(*e.lhs) + " / " + expr_to_text(*e.rhs);
    case ExprKind::Pow:
      return expr_to_text(*e.lhs) + "^" + std::to_string(e.exponent);
    case ExprKind::Neg:
      return "-" + expr_to_text(*e.lhs);
    case ExprKind::Paren:
      return "(" + expr_to_text(*e.lhs) + ")";
  }
  throw InternalError("unhandled expression kind");
}

}  // namespace qspace
