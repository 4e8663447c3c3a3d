#pragma once

// The evaluator: the homomorphism from expressions into any semiring that
// sends each variable to its generator value.
//
// Evaluation runs on an explicit work stack, so tree depth is bounded only
// by memory. Let-bound values live in a per-variable shadow slot that is
// saved on entry and restored on exit.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/expr.hpp"

namespace adc {

template <class D>
using Valuation = std::vector<D>;

// Ordinary let semantics: the body sees the bound value as is.
struct StandardLet {
  template <class D>
  const D& bind(VarId, const D& bound, std::size_t) const {
    return bound;
  }
  template <class D>
  D finish(VarId, const D&, D body, std::size_t) const {
    return body;
  }
};

// Generator extended by the enclosing lets. lookup is O(1).
template <class D, class Gen>
class GenEnv {
 public:
  GenEnv(const Gen& base, std::size_t slots) : base_(base), slots_(slots) {}

  D lookup(VarId v) const {
    if (v.index < slots_.size() && slots_[v.index]) return *slots_[v.index];
    return base_(v);
  }

  void push(VarId v, D value) {
    grow(v);
    saved_.push_back(std::move(slots_[v.index]));
    slots_[v.index] = std::move(value);
  }

  void pop(VarId v) {
    slots_[v.index] = std::move(saved_.back());
    saved_.pop_back();
  }

  std::size_t depth() const { return saved_.size(); }

 private:
  void grow(VarId v) {
    if (v.index >= slots_.size()) slots_.resize(std::size_t{v.index} + 1);
  }

  const Gen& base_;
  std::vector<std::optional<D>> slots_;
  std::vector<std::optional<D>> saved_;
};

namespace detail {

template <class D>
D eval_neg(const D& a) {
  if constexpr (Ring<D>) {
    return -a;
  } else {
    throw UnsupportedPrimitive("negation needs a ring scalar");
  }
}

template <class D>
D eval_sin(const D& a) {
  if constexpr (Trig<D>) {
    return sin(a);
  } else {
    throw UnsupportedPrimitive("sin needs a trigonometric scalar");
  }
}

template <class D>
D eval_cos(const D& a) {
  if constexpr (Trig<D>) {
    return cos(a);
  } else {
    throw UnsupportedPrimitive("cos needs a trigonometric scalar");
  }
}

}  // namespace detail

// `arity` sizes the shadow-slot array and is forwarded to the let policy
// (tangent representations need it to build deltas for let binders).
template <Semiring D, class Gen, class Policy = StandardLet>
  requires std::invocable<const Gen&, VarId>
D eval_with(const Gen& gen, const Expr& root, std::size_t arity, const Policy& policy = {}) {
  enum Stage : std::uint8_t { kEnter, kAfterBound, kAfterBody, kCombine };
  struct Frame {
    const Expr* e;
    Stage stage;
  };

  GenEnv<D, Gen> env(gen, arity);
  std::vector<Frame> work{{&root, kEnter}};
  std::vector<D> values;
  std::vector<D> bound;

  while (!work.empty()) {
    const Frame f = work.back();
    work.pop_back();
    const Expr& e = *f.e;

    if (f.stage == kEnter) {
      switch (e.kind()) {
        case ExprKind::Var: values.push_back(env.lookup(e.var())); continue;
        case ExprKind::Zero: values.push_back(adc::zero<D>()); continue;
        case ExprKind::One: values.push_back(adc::one<D>()); continue;
        case ExprKind::Plus:
        case ExprKind::Times:
          work.push_back({f.e, kCombine});
          work.push_back({&e.rhs(), kEnter});
          work.push_back({&e.lhs(), kEnter});
          continue;
        case ExprKind::Neg:
        case ExprKind::Sin:
        case ExprKind::Cos:
          work.push_back({f.e, kCombine});
          work.push_back({&e.lhs(), kEnter});
          continue;
        case ExprKind::Let:
          work.push_back({f.e, kAfterBound});
          work.push_back({&e.lhs(), kEnter});
          continue;
      }
    }

    if (f.stage == kAfterBound) {
      bound.push_back(std::move(values.back()));
      values.pop_back();
      env.push(e.var(), D(policy.bind(e.var(), bound.back(), arity)));
      work.push_back({f.e, kAfterBody});
      work.push_back({&e.rhs(), kEnter});
      continue;
    }

    if (f.stage == kAfterBody) {
      env.pop(e.var());
      D body = std::move(values.back());
      values.pop_back();
      D result = policy.finish(e.var(), bound.back(), std::move(body), arity);
      bound.pop_back();
      values.push_back(std::move(result));
      continue;
    }

    // kCombine
    switch (e.kind()) {
      case ExprKind::Plus:
      case ExprKind::Times: {
        D b = std::move(values.back());
        values.pop_back();
        D& a = values.back();
        a = e.kind() == ExprKind::Plus ? D(a + b) : D(a * b);
        break;
      }
      case ExprKind::Neg: values.back() = detail::eval_neg(values.back()); break;
      case ExprKind::Sin: values.back() = detail::eval_sin(values.back()); break;
      case ExprKind::Cos: values.back() = detail::eval_cos(values.back()); break;
      default: break;
    }
  }
  return std::move(values.back());
}

template <Semiring D, class Gen>
  requires std::invocable<const Gen&, VarId>
D eval(const Gen& gen, const Expr& e) {
  return eval_with<D>(gen, e, required_arity(e));
}

// Evaluation at a valuation indexed by VarId.
template <Semiring D>
D eval(const Valuation<D>& point, const Expr& e) {
  auto gen = [&point](VarId v) -> D {
    if (v.index >= point.size()) {
      throw std::out_of_range("no value for variable index " + std::to_string(v.index));
    }
    return point[v.index];
  };
  return eval_with<D>(gen, e, required_arity(e));
}

}  // namespace adc
