#include "adc/expr.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace adc {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

}  // namespace

const char* kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::Var: return "Var";
    case ExprKind::Zero: return "Zero";
    case ExprKind::One: return "One";
    case ExprKind::Plus: return "Plus";
    case ExprKind::Times: return "Times";
    case ExprKind::Neg: return "Neg";
    case ExprKind::Sin: return "Sin";
    case ExprKind::Cos: return "Cos";
    case ExprKind::Let: return "Let";
  }
  return "?";
}

Expr::Node::Node(ExprKind k, VarId v, Expr lhs, Expr rhs)
    : kind(k), var(v), a(std::move(lhs)), b(std::move(rhs)) {
  const std::uint64_t own = 1;
  if (is_binary(k) || k == ExprKind::Let) {
    size = sat_add(own, sat_add(a.size(), b.size()));
  } else if (is_unary(k)) {
    size = sat_add(own, a.size());
  }
}

// Children that are uniquely owned are detached onto a heap stack so that
// releasing a long spine never recurses.
Expr::Node::~Node() {
  std::vector<std::shared_ptr<const Node>> pending;
  if (a.node_) pending.push_back(std::move(a.node_));
  if (b.node_) pending.push_back(std::move(b.node_));
  while (!pending.empty()) {
    std::shared_ptr<const Node> n = std::move(pending.back());
    pending.pop_back();
    if (n.use_count() == 1) {
      auto& m = const_cast<Node&>(*n);
      if (m.a.node_) pending.push_back(std::move(m.a.node_));
      if (m.b.node_) pending.push_back(std::move(m.b.node_));
    }
  }
}

Expr Expr::one() {
  static const Expr unit(std::make_shared<Node>(ExprKind::One, VarId{}, Expr(), Expr()));
  return unit;
}

Expr Expr::variable(VarId v) {
  return Expr(std::make_shared<Node>(ExprKind::Var, v, Expr(), Expr()));
}

Expr Expr::plus(Expr a, Expr b) {
  return Expr(std::make_shared<Node>(ExprKind::Plus, VarId{}, std::move(a), std::move(b)));
}

Expr Expr::times(Expr a, Expr b) {
  return Expr(std::make_shared<Node>(ExprKind::Times, VarId{}, std::move(a), std::move(b)));
}

Expr Expr::negate(Expr a) {
  return Expr(std::make_shared<Node>(ExprKind::Neg, VarId{}, std::move(a), Expr()));
}

Expr Expr::sine(Expr a) {
  return Expr(std::make_shared<Node>(ExprKind::Sin, VarId{}, std::move(a), Expr()));
}

Expr Expr::cosine(Expr a) {
  return Expr(std::make_shared<Node>(ExprKind::Cos, VarId{}, std::move(a), Expr()));
}

Expr Expr::let(VarId binder, Expr bound, Expr body) {
  return Expr(std::make_shared<Node>(ExprKind::Let, binder, std::move(bound), std::move(body)));
}

bool operator==(const Expr& x, const Expr& y) {
  std::vector<std::pair<const Expr*, const Expr*>> todo{{&x, &y}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (a->identity() == b->identity()) continue;
    if (a->kind() != b->kind() || a->size() != b->size()) return false;
    switch (a->kind()) {
      case ExprKind::Var:
        if (a->var() != b->var()) return false;
        break;
      case ExprKind::Zero:
      case ExprKind::One:
        break;
      case ExprKind::Let:
        if (a->var() != b->var()) return false;
        [[fallthrough]];
      case ExprKind::Plus:
      case ExprKind::Times:
        todo.emplace_back(&a->lhs(), &b->lhs());
        todo.emplace_back(&a->rhs(), &b->rhs());
        break;
      case ExprKind::Neg:
      case ExprKind::Sin:
      case ExprKind::Cos:
        todo.emplace_back(&a->lhs(), &b->lhs());
        break;
    }
  }
  return true;
}

Expr const_lit(std::uint64_t n) {
  if (n == 0) return Expr::zero();
  const Expr one = Expr::one();
  const Expr two = Expr::plus(one, one);
  int top = 63;
  while (((n >> top) & 1U) == 0) --top;
  Expr acc = one;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = acc.kind() == ExprKind::One ? two : Expr::times(two, acc);
    if ((n >> bit) & 1U) acc = Expr::plus(acc, one);
  }
  return acc;
}

std::set<VarId> free_vars(const Expr& e) {
  using Set = std::set<VarId>;
  return fold_expr<Set>(e, [](const Expr& node, std::span<Set> kids) -> Set {
    switch (node.kind()) {
      case ExprKind::Var: return Set{node.var()};
      case ExprKind::Let: {
        Set out = std::move(kids[0]);
        kids[1].erase(node.var());
        out.merge(kids[1]);
        return out;
      }
      default: {
        Set out;
        for (auto& k : kids) out.merge(k);
        return out;
      }
    }
  });
}

std::size_t required_arity(const Expr& e) {
  return fold_expr<std::size_t>(e, [](const Expr& node, std::span<std::size_t> kids) {
    std::size_t m = 0;
    for (auto k : kids) m = std::max(m, k);
    if (node.kind() == ExprKind::Var || node.kind() == ExprKind::Let) {
      m = std::max<std::size_t>(m, std::size_t{node.var().index} + 1);
    }
    return m;
  });
}

bool contains_kind(const Expr& e, ExprKind k) {
  std::vector<const Expr*> todo{&e};
  while (!todo.empty()) {
    const Expr* n = todo.back();
    todo.pop_back();
    if (n->kind() == k) return true;
    if (is_binary(n->kind()) || n->kind() == ExprKind::Let) {
      todo.push_back(&n->lhs());
      todo.push_back(&n->rhs());
    } else if (is_unary(n->kind())) {
      todo.push_back(&n->lhs());
    }
  }
  return false;
}

Expr simplify_basic(const Expr& e) {
  return fold_expr<Expr>(e, [](const Expr& node, std::span<Expr> kids) -> Expr {
    switch (node.kind()) {
      case ExprKind::Plus:
        if (kids[0].kind() == ExprKind::Zero) return kids[1];
        if (kids[1].kind() == ExprKind::Zero) return kids[0];
        return Expr::plus(kids[0], kids[1]);
      case ExprKind::Times:
        if (kids[0].kind() == ExprKind::Zero || kids[1].kind() == ExprKind::Zero) return Expr::zero();
        if (kids[0].kind() == ExprKind::One) return kids[1];
        if (kids[1].kind() == ExprKind::One) return kids[0];
        return Expr::times(kids[0], kids[1]);
      case ExprKind::Neg: return Expr::negate(kids[0]);
      case ExprKind::Sin: return Expr::sine(kids[0]);
      case ExprKind::Cos: return Expr::cosine(kids[0]);
      case ExprKind::Let: return Expr::let(node.var(), kids[0], kids[1]);
      default: return node;
    }
  });
}

std::optional<std::uint64_t> closed_literal_value(const Expr& e) {
  using R = std::optional<std::uint64_t>;
  return fold_expr<R>(e, [](const Expr& node, std::span<R> kids) -> R {
    switch (node.kind()) {
      case ExprKind::Zero: return 0;
      case ExprKind::One: return 1;
      case ExprKind::Plus: {
        if (!kids[0] || !kids[1]) return std::nullopt;
        const std::uint64_t s = *kids[0] + *kids[1];
        if (s < *kids[0]) return std::nullopt;
        return s;
      }
      case ExprKind::Times: {
        if (!kids[0] || !kids[1]) return std::nullopt;
        std::uint64_t p = 0;
        if (__builtin_mul_overflow(*kids[0], *kids[1], &p)) return std::nullopt;
        return p;
      }
      default: return std::nullopt;
    }
  });
}

}  // namespace adc
