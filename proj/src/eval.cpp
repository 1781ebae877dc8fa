#include "qspace/eval.hpp"

#include "qspace/parser.hpp"

namespace qspace {

Quantity eval(const Expr& e, const SystemPtr& system, const Bindings* bindings) {
  switch (e.kind) {
    case ExprKind::Number:
      return Quantity(Scalar::from_rational(e.number, system->scalar_system()),
                      Dimension::identity(system));
    case ExprKind::Symbol: {
      if (e.symbol == "[1]") return Quantity::one(system);
      if (bindings) {
        auto it = bindings->find(e.symbol);
        if (it != bindings->end()) return it->second;
      }
      if (auto u = system->unit(e.symbol)) return *u;
      fail(ErrorCode::UnknownSymbol, "unknown symbol '" + e.symbol + "'");
    }
    case ExprKind::Add:
      return eval(*e.lhs, system, bindings) + eval(*e.rhs, system, bindings);
    case ExprKind::Sub:
      return eval(*e.lhs, system, bindings) - eval(*e.rhs, system, bindings);
    case ExprKind::Mul:
      return eval(*e.lhs, system, bindings) * eval(*e.rhs, system, bindings);
    case ExprKind::Div:
      return eval(*e.lhs, system, bindings) * inverse(eval(*e.rhs, system, bindings));
    case ExprKind::Pow:
      return pow(eval(*e.lhs, system, bindings), e.exponent);
    case ExprKind::Neg:
      return -eval(*e.lhs, system, bindings);
    case ExprKind::Paren:
      return eval(*e.lhs, system, bindings);
  }
  throw InternalError("unhandled expression kind");
}

Quantity eval_text(std::string_view text, const SystemPtr& system,
                   const Bindings* bindings) {
  return eval(*parse_expression(text), system, bindings);
}

}  // namespace qspace
