#pragma once

// Text syntax for expressions.
//
//   expr   := "let" ident "=" expr "in" expr | sum
//   sum    := prod (("+"|"-") prod)*
//   prod   := unary ("*" unary)*
//   unary  := "-" unary | "sin" "(" expr ")" | "cos" "(" expr ")" | atom
//   atom   := integer | ident | "(" expr ")"
//
// Integer literals become const_lit trees and `a - b` becomes
// Plus(a, Neg(b)).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "adc/expr.hpp"
#include "adc/var.hpp"

namespace adc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Fixed: a free identifier missing from the registry raises UnknownVariable.
// Grow: it is registered on first use. Let binders are registered in both
// modes.
enum class RegistryMode { Fixed, Grow };

struct Parsed {
  Expr expr;
  VarRegistry registry;
};

Parsed parse(std::string_view text, VarRegistry registry = {}, RegistryMode mode = RegistryMode::Grow);

// Minimal-parenthesis rendering. Variable-free subtrees over 0, 1, + and *
// are printed as a single integer literal. Unregistered indices render as
// v<index>.
std::string pretty(const Expr& e, const VarRegistry& registry);
std::string pretty(const Expr& e);

}  // namespace adc
