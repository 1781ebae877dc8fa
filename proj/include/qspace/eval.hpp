#pragma once

#include <map>
#include <string>

#include "qspace/ast.hpp"
#include "qspace/quantity.hpp"
#include "qspace/unit_system.hpp"

namespace qspace {

using Bindings = std::map<std::string, Quantity, std::less<>>;

// Evaluates a parse tree over a unit system. Symbols resolve to bindings
// first, then to base/derived units; "[1]" is the quantity one. Unknown
// symbols surface here, not at parse time.
Quantity eval(const Expr& e, const SystemPtr& system,
              const Bindings* bindings = nullptr);

Quantity eval_text(std::string_view text, const SystemPtr& system,
                   const Bindings* bindings = nullptr);

}  // namespace qspace
