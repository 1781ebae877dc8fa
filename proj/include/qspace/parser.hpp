#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qspace/ast.hpp"
#include "qspace/error.hpp"

namespace qspace {

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, const std::string& detail)
      : Error(ErrorCode::Syntax, "syntax error at offset " +
                                     std::to_string(offset) + ": " + detail),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Grammar (one multiplicative precedence level, all left-associative;
// juxtaposition multiplies):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/' | juxt) factor)*
//   factor := '-' factor | atom ('^' int)*       ('^' chains fold right)
//   atom   := number | symbol | '[1]' | '(' expr ')'
// An integer '/' integer with no spaces lexes as one rational literal.
ExprPtr parse_expression(std::string_view text);

}  // namespace qspace
