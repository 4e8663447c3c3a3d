#include "adc/symbolic.hpp"

#include <map>

namespace adc {

namespace {

class Deriver {
 public:
  Expr derive(VarId x, const Expr& e) {
    const auto key = std::make_pair(e.identity(), x.index);
    if (e.identity() != nullptr) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Expr d = rule(x, e);
    if (e.identity() != nullptr) memo_.emplace(key, d);
    return d;
  }

 private:
  Expr rule(VarId x, const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Var: return e.var() == x ? Expr::one() : Expr::zero();
      case ExprKind::Zero:
      case ExprKind::One: return Expr::zero();
      case ExprKind::Plus: return derive(x, e.lhs()) + derive(x, e.rhs());
      case ExprKind::Times: return e.rhs() * derive(x, e.lhs()) + e.lhs() * derive(x, e.rhs());
      case ExprKind::Neg: return -derive(x, e.lhs());
      case ExprKind::Sin: return cos(e.lhs()) * derive(x, e.lhs());
      case ExprKind::Cos: return -sin(e.lhs()) * derive(x, e.lhs());
      case ExprKind::Let: {
        const VarId y = e.var();
        const Expr& bound = e.lhs();
        const Expr& body = e.rhs();
        Expr through_bound = Expr::let(y, bound, derive(y, body)) * derive(x, bound);
        if (y == x) return through_bound;
        return through_bound + Expr::let(y, bound, derive(x, body));
      }
    }
    return Expr::zero();
  }

  std::map<std::pair<const void*, std::uint32_t>, Expr> memo_;
};

// Paired traversal; memoized on (node, variable) because a let body is
// visited once for the binder and once for x.
class TupleDeriver {
 public:
  std::pair<Expr, Expr> run(VarId x, const Expr& e) {
    const auto key = std::make_pair(e.identity(), x.index);
    if (e.identity() != nullptr) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto r = rule(x, e);
    if (e.identity() != nullptr) memo_.emplace(key, r);
    return r;
  }

 private:
  std::pair<Expr, Expr> rule(VarId x, const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Var: return {e, e.var() == x ? Expr::one() : Expr::zero()};
      case ExprKind::Zero:
      case ExprKind::One: return {e, Expr::zero()};
      case ExprKind::Plus: {
        auto [a, da] = run(x, e.lhs());
        auto [b, db] = run(x, e.rhs());
        return {a + b, da + db};
      }
      case ExprKind::Times: {
        auto [a, da] = run(x, e.lhs());
        auto [b, db] = run(x, e.rhs());
        return {a * b, b * da + a * db};
      }
      case ExprKind::Neg: {
        auto [a, da] = run(x, e.lhs());
        return {-a, -da};
      }
      case ExprKind::Sin: {
        auto [a, da] = run(x, e.lhs());
        return {sin(a), cos(a) * da};
      }
      case ExprKind::Cos: {
        auto [a, da] = run(x, e.lhs());
        return {cos(a), -sin(a) * da};
      }
      case ExprKind::Let: {
        const VarId y = e.var();
        auto [b, db] = run(x, e.lhs());
        auto [body, dy] = run(y, e.rhs());
        Expr through_bound = Expr::let(y, b, dy) * db;
        Expr whole = Expr::let(y, b, body);
        if (y == x) return {whole, through_bound};
        return {whole, through_bound + Expr::let(y, b, run(x, e.rhs()).second)};
      }
    }
    return {e, Expr::zero()};
  }

  std::map<std::pair<const void*, std::uint32_t>, std::pair<Expr, Expr>> memo_;
};

}  // namespace

Expr derive(VarId x, const Expr& e) { return Deriver().derive(x, e); }

std::pair<Expr, Expr> derive_tuple(VarId x, const Expr& e) { return TupleDeriver().run(x, e); }

Dual<Expr> symbolic(VarId x, const Expr& e) {
  auto gen = [x](VarId v) { return Dual<Expr>(Expr::variable(v), v == x ? Expr::one() : Expr::zero()); };
  return eval<Dual<Expr>>(gen, e);
}

Expr derive_n(VarId x, const Expr& e, int times) {
  Expr out = e;
  for (int i = 0; i < times; ++i) out = derive(x, out);
  return out;
}

}  // namespace adc
