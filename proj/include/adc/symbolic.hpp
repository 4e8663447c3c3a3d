#pragma once

// Symbolic differentiation over expressions.

#include <utility>

#include "adc/ad.hpp"
#include "adc/expr.hpp"

namespace adc {

// Partial derivative of e with respect to x. Lets are kept: the bound
// expression is shared between the value and the derivative terms.
Expr derive(VarId x, const Expr& e);

// (e, derive(x, e)) from a single traversal.
std::pair<Expr, Expr> derive_tuple(VarId x, const Expr& e);

// Forward mode run at the free semiring: the tangent is an expression for
// the derivative along x.
Dual<Expr> symbolic(VarId x, const Expr& e);

// The i-th derivative along x (i = 0 returns e).
Expr derive_n(VarId x, const Expr& e, int times);

}  // namespace adc
