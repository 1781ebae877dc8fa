#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "qspace/rational.hpp"

namespace qspace {

enum class ExprKind { Number, Symbol, Add, Sub, Mul, Div, Pow, Neg, Paren };

// Parse tree for quantity expressions. Pow exponents are integer literals by
// construction; number literals are exact rationals regardless of backend.
struct Expr {
  ExprKind kind;
  Rational number;        // Number
  std::string symbol;     // Symbol ("[1]" denotes the dimensionless unit)
  std::int64_t exponent = 0;  // Pow
  std::unique_ptr<Expr> lhs;  // binary ops; sole child of Pow/Neg/Paren
  std::unique_ptr<Expr> rhs;  // binary ops only
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make_number(Rational value);
ExprPtr make_symbol(std::string name);
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, std::int64_t exponent);
ExprPtr make_unary(ExprKind kind, ExprPtr child);

// Structural equality; numbers compare by exact value.
bool expr_equal(const Expr& a, const Expr& b);

// Faithful for every grammar-shaped tree: parsing the text reproduces the
// tree exactly.
std::string expr_to_text(const Expr& e);

}  // namespace qspace
