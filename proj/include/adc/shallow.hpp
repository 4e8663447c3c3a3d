#pragma once

// Generic programs: functions written once against the scalar signature
// and run either directly at a scalar type or at Expr to recover the
// expression they denote.
//
// A program of arity n is a callable object with a templated call
// operator taking n arguments of the same scalar type:
//
//   auto f = []<class D>(const D& x, const D& y) { return x * y + x + one<D>(); };

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/expr.hpp"

namespace adc {

template <std::size_t Arity, class F>
struct GenericProgram {
  F body;

  template <Semiring D>
  D operator()(const std::array<D, Arity>& args) const {
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
      return D(body.template operator()<D>(args[I]...));
    }(std::make_index_sequence<Arity>{});
  }
};

template <std::size_t Arity, class F>
GenericProgram<Arity, F> generic_program(F body) {
  return {std::move(body)};
}

// Runs the program at Expr on Var(0), ..., Var(Arity - 1).
template <std::size_t Arity, class F>
Expr reify(const GenericProgram<Arity, F>& f) {
  std::array<Expr, Arity> vars;
  for (std::size_t i = 0; i < Arity; ++i) vars[i] = Expr::variable(VarId{static_cast<std::uint32_t>(i)});
  return f(vars);
}

template <Semiring D, std::size_t Arity, class F>
D apply_generic(const GenericProgram<Arity, F>& f, const std::vector<D>& args) {
  if (args.size() != Arity) throw std::invalid_argument("argument count does not match program arity");
  std::array<D, Arity> a;
  for (std::size_t i = 0; i < Arity; ++i) a[i] = args[i];
  return f(a);
}

}  // namespace adc
