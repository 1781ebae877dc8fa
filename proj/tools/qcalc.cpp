// qcalc: dimensional-analysis calculator over exact quantity spaces.
//
// Exit codes: 0 success, 1 user error (diagnostic E_<CODE> on stderr),
// 2 broken internal invariant.

#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qspace/analysis.hpp"
#include "qspace/basis_change.hpp"
#include "qspace/eval.hpp"
#include "qspace/format.hpp"
#include "qspace/json_io.hpp"
#include "qspace/parser.hpp"
#include "qspace/unit_system.hpp"

namespace {

using namespace qspace;

struct GlobalOptions {
  std::string system_path;
  bool exact = false;
  bool floating = false;
  bool substitute_derived = false;
};

SystemPtr ambient_system(const GlobalOptions& opts) {
  SystemPtr system =
      opts.system_path.empty() ? builtin_si_system() : load_system_file(opts.system_path);
  if (opts.exact) system = with_scalar_system(system, exact_twin(system->scalar_system()));
  if (opts.floating)
    system = with_scalar_system(system, floating_twin(system->scalar_system()));
  return system;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string text;
  for (const auto& word : words) {
    if (!text.empty()) text += ' ';
    text += word;
  }
  return text;
}

FormatOptions format_options(const GlobalOptions& opts) {
  return FormatOptions{opts.substitute_derived};
}

int cmd_eval(const GlobalOptions& opts, const std::vector<std::string>& words) {
  SystemPtr system = ambient_system(opts);
  Quantity q = eval_text(join_words(words), system);
  std::cout << format_quantity(q, format_options(opts)) << "\n";
  return 0;
}

int cmd_check(const GlobalOptions& opts, const std::vector<std::string>& words) {
  std::string text = join_words(words);
  std::size_t eq = text.find('=');
  if (eq == std::string::npos)
    fail(ErrorCode::Syntax, "check needs the form '<expr> = <expr>'");
  SystemPtr system = ambient_system(opts);
  Quantity lhs = eval_text(text.substr(0, eq), system);
  Quantity rhs = eval_text(text.substr(eq + 1), system);
  HomogeneityReport report = check_homogeneous({lhs, rhs});
  std::cout << "homogeneous: " << (report.homogeneous ? "yes" : "no") << "\n";
  std::cout << "lhs: " << format_quantity(lhs, format_options(opts)) << "\n";
  std::cout << "rhs: " << format_quantity(rhs, format_options(opts)) << "\n";
  if (!report.homogeneous)
    fail(ErrorCode::Incommensurable,
         "sides have dimensions " + lhs.dim().str() + " vs " + rhs.dim().str());
  std::cout << "equal: " << (lhs == rhs ? "yes" : "no") << "\n";
  return 0;
}

int cmd_convert(const GlobalOptions& opts, const std::vector<std::string>& words) {
  std::string text = join_words(words);
  // Split on the last standalone "to".
  std::size_t split = text.rfind(" to ");
  if (split == std::string::npos)
    fail(ErrorCode::Syntax, "convert needs the form '<expr> to <unit-expr>'");
  SystemPtr system = ambient_system(opts);
  Quantity q = eval_text(text.substr(0, split), system);
  Quantity target = eval_text(text.substr(split + 4), system);
  std::cout << convert(q, target).str() << "\n";
  return 0;
}

int cmd_rebase(const GlobalOptions& opts, const std::vector<std::string>& words,
               const std::string& target_path) {
  SystemPtr source = ambient_system(opts);
  Quantity q = eval_text(join_words(words), source);

  SystemPtr declared = load_system_file(target_path);
  if (opts.exact)
    declared = with_scalar_system(declared, exact_twin(declared->scalar_system()));
  if (opts.floating)
    declared = with_scalar_system(declared, floating_twin(declared->scalar_system()));
  if (declared->scalar_system() != source->scalar_system())
    fail(ErrorCode::SystemMismatch,
         "target system's scalar system differs from the source's");

  // The target's base symbols must resolve in the source system; their
  // expansions are the proposed basis.
  std::vector<std::pair<std::string, Quantity>> new_units;
  for (const auto& symbol : declared->base_units()) {
    auto unit = source->unit(symbol);
    if (!unit)
      fail(ErrorCode::UnknownSymbol,
           "target base unit '" + symbol + "' is not defined in the source system");
    new_units.emplace_back(symbol, *unit);
  }
  BasisChange change = propose_basis_change(source, new_units, declared->id());
  Quantity moved = rebase(q, change);
  // Re-home onto the declared snapshot so its derived table is available to
  // the formatter.
  Quantity presented =
      declared->make_quantity(moved.measure(), moved.dim().exponents());
  std::cout << format_quantity(presented, format_options(opts)) << "\n";
  return 0;
}

int cmd_pi(const GlobalOptions& opts, const std::vector<std::string>& exprs) {
  SystemPtr system = ambient_system(opts);
  std::vector<Dimension> dims;
  dims.reserve(exprs.size());
  for (const auto& text : exprs) dims.push_back(eval_text(text, system).dim());
  for (const auto& generator : dimensionless_products(dims)) {
    for (std::size_t j = 0; j < generator.size(); ++j) {
      if (j) std::cout << ' ';
      std::cout << generator[j];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_units_list(const GlobalOptions& opts) {
  SystemPtr system = ambient_system(opts);
  for (const auto& symbol : system->base_units())
    std::cout << symbol << " [base]\n";
  for (const auto& [symbol, value] : system->derived_units())
    std::cout << symbol << " = " << format_quantity(value) << "\n";
  return 0;
}

int cmd_units_add(const GlobalOptions& opts, const std::string& symbol,
                  const std::vector<std::string>& words) {
  SystemPtr system = ambient_system(opts);
  Quantity value = eval_text(join_words(words), system);
  SystemPtr updated = system->with_derived(symbol, value);
  std::cout << system_to_text(*updated);
  return 0;
}

int cmd_repl(const GlobalOptions& opts) {
  SystemPtr system = ambient_system(opts);
  Bindings bindings;
  const bool interactive = isatty(fileno(stdin)) != 0;
  if (interactive)
    std::cout << "quantity calculator over system '" << system->id()
              << "'; let <name> = <expr> binds, exit quits\n";
  std::string line;
  while (true) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed == "exit" || trimmed == "quit") break;
    try {
      if (trimmed.rfind("let ", 0) == 0) {
        std::string rest = trimmed.substr(4);
        std::size_t eq = rest.find('=');
        if (eq == std::string::npos)
          fail(ErrorCode::Syntax, "let needs the form 'let <name> = <expr>'");
        std::string name = rest.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (!is_valid_symbol(name))
          fail(ErrorCode::Syntax, "invalid binding name '" + name + "'");
        if (system->has_symbol(name))
          fail(ErrorCode::DuplicateSymbol,
               "'" + name + "' is already a unit of the system");
        Quantity value = eval_text(rest.substr(eq + 1), system, &bindings);
        bindings.insert_or_assign(name, value);
        std::cout << format_quantity(value, format_options(opts)) << "\n";
      } else {
        Quantity value = eval_text(trimmed, system, &bindings);
        std::cout << format_quantity(value, format_options(opts)) << "\n";
      }
    } catch (const Error& e) {
      std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions opts;
  CLI::App app{"exact dimensional-analysis calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--system", opts.system_path, "unit-system JSON file (default: built-in SI)");
  auto* exact_flag = app.add_flag("--exact", opts.exact, "use the exact scalar backend");
  app.add_flag("--float", opts.floating, "use the binary64 scalar backend")
      ->excludes(exact_flag);
  app.add_flag("--substitute-derived", opts.substitute_derived,
               "print with a matching derived-unit symbol when one exists");

  std::vector<std::string> eval_words;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a quantity expression");
  eval_cmd->add_option("expr", eval_words, "expression")->required()->expected(-1);

  std::vector<std::string> check_words;
  auto* check_cmd =
      app.add_subcommand("check", "homogeneity + equality report for '<expr> = <expr>'");
  check_cmd->add_option("equation", check_words, "equation")->required()->expected(-1);

  std::vector<std::string> convert_words;
  auto* convert_cmd =
      app.add_subcommand("convert", "conversion factor for '<expr> to <unit-expr>'");
  convert_cmd->add_option("request", convert_words, "request")->required()->expected(-1);

  std::vector<std::string> rebase_words;
  std::string rebase_target;
  auto* rebase_cmd = app.add_subcommand("rebase", "rewrite a quantity in another basis");
  rebase_cmd->add_option("expr", rebase_words, "expression")->required()->expected(-1);
  rebase_cmd->add_option("--system", rebase_target, "target unit-system JSON file")
      ->required();

  std::vector<std::string> pi_exprs;
  auto* pi_cmd =
      app.add_subcommand("pi", "generators of the dimensionless products of the inputs");
  pi_cmd->add_option("expr", pi_exprs, "expressions")->required()->expected(-1);

  auto* units_cmd = app.add_subcommand("units", "inspect or extend the unit table");
  units_cmd->require_subcommand(1);
  auto* units_list_cmd = units_cmd->add_subcommand("list", "list base and derived units");
  std::string add_symbol;
  std::vector<std::string> add_words;
  auto* units_add_cmd =
      units_cmd->add_subcommand("add", "print the system extended by one derived unit");
  units_add_cmd->add_option("symbol", add_symbol, "new unit symbol")->required();
  units_add_cmd->add_option("expr", add_words, "defining expression")->required()->expected(-1);

  auto* repl_cmd = app.add_subcommand("repl", "interactive session");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E_USAGE: " << e.what() << "\n";
    return 1;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(opts, eval_words);
    if (check_cmd->parsed()) return cmd_check(opts, check_words);
    if (convert_cmd->parsed()) return cmd_convert(opts, convert_words);
    if (rebase_cmd->parsed()) return cmd_rebase(opts, rebase_words, rebase_target);
    if (pi_cmd->parsed()) return cmd_pi(opts, pi_exprs);
    if (units_cmd->parsed()) {
      if (units_list_cmd->parsed()) return cmd_units_list(opts);
      if (units_add_cmd->parsed()) return cmd_units_add(opts, add_symbol, add_words);
    }
    if (repl_cmd->parsed()) return cmd_repl(opts);
    std::cerr << "E_USAGE: no command given\n";
    return 1;
  } catch (const qspace::Error& e) {
    std::cerr << qspace::error_code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const qspace::InternalError& e) {
    std::cerr << "E_INTERNAL: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: unexpected failure: " << e.what() << "\n";
    return 2;
  }
}
