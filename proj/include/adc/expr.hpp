#pragma once

// Expressions of the free semiring over indexed variables, extended with
// negation, sin, cos and let-binding.
//
// Expr is an immutable handle to a shared node; sub-expressions may be
// shared between trees. Teardown of very deep trees is iterative.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/var.hpp"

namespace adc {

enum class ExprKind : std::uint8_t { Var, Zero, One, Plus, Times, Neg, Sin, Cos, Let };

const char* kind_name(ExprKind k);

class Expr {
 public:
  Expr() = default;  // Zero

  static Expr zero() { return Expr(); }
  static Expr one();
  static Expr variable(VarId v);
  static Expr plus(Expr a, Expr b);
  static Expr times(Expr a, Expr b);
  static Expr negate(Expr a);
  static Expr sine(Expr a);
  static Expr cosine(Expr a);
  static Expr let(VarId binder, Expr bound, Expr body);

  ExprKind kind() const;
  // The variable of a Var node, or the binder of a Let node.
  VarId var() const;
  // First operand; the bound expression of a Let.
  const Expr& lhs() const;
  // Second operand; the body of a Let.
  const Expr& rhs() const;

  // Number of nodes of the tree this handle denotes, counting shared
  // sub-expressions once per occurrence (saturates at UINT64_MAX).
  std::uint64_t size() const;

  // Address of the underlying node; equal identities imply equal trees.
  const void* identity() const { return node_.get(); }

  friend Expr operator+(const Expr& a, const Expr& b) { return plus(a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return times(a, b); }
  friend Expr operator-(const Expr& a) { return negate(a); }
  friend Expr operator-(const Expr& a, const Expr& b) { return plus(a, negate(b)); }
  friend Expr sin(const Expr& a) { return sine(a); }
  friend Expr cos(const Expr& a) { return cosine(a); }

  // Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  ExprKind kind = ExprKind::Zero;
  VarId var{};
  std::uint64_t size = 1;
  Expr a;
  Expr b;

  Node(ExprKind k, VarId v, Expr lhs, Expr rhs);
  ~Node();
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
};

inline ExprKind Expr::kind() const { return node_ ? node_->kind : ExprKind::Zero; }
inline VarId Expr::var() const { return node_ ? node_->var : VarId{}; }
inline std::uint64_t Expr::size() const { return node_ ? node_->size : 1; }

inline const Expr& Expr::lhs() const {
  static const Expr empty;
  return node_ ? node_->a : empty;
}
inline const Expr& Expr::rhs() const {
  static const Expr empty;
  return node_ ? node_->b : empty;
}

inline Expr var(VarId v) { return Expr::variable(v); }
inline Expr var(std::uint32_t index) { return Expr::variable(VarId{index}); }

inline bool is_binary(ExprKind k) { return k == ExprKind::Plus || k == ExprKind::Times; }
inline bool is_unary(ExprKind k) {
  return k == ExprKind::Neg || k == ExprKind::Sin || k == ExprKind::Cos;
}

// Bottom-up fold without binding environments, run on an explicit work
// stack. `alg(node, children)` receives the node and the results for its
// operands in order (Let: bound, body).
template <class R, class Alg>
R fold_expr(const Expr& root, Alg&& alg) {
  struct Frame {
    const Expr* e;
    bool expanded;
  };
  std::vector<Frame> work{{&root, false}};
  std::vector<R> results;
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    const ExprKind k = f.e->kind();
    const std::size_t arity = is_binary(k) || k == ExprKind::Let ? 2 : is_unary(k) ? 1 : 0;
    if (!f.expanded && arity > 0) {
      work.push_back({f.e, true});
      if (arity == 2) work.push_back({&f.e->rhs(), false});
      work.push_back({&f.e->lhs(), false});
      continue;
    }
    std::span<R> kids(results.data() + (results.size() - arity), arity);
    R r = alg(*f.e, kids);
    results.resize(results.size() - arity);
    results.push_back(std::move(r));
  }
  return std::move(results.back());
}

// Closed expression equal to n·one in every semiring, built by
// double-and-add over the binary digits of n.
Expr const_lit(std::uint64_t n);

// Binding-aware free variables: Let(y, e1, e2) contributes
// free(e1) ∪ (free(e2) \ {y}).
std::set<VarId> free_vars(const Expr& e);

// One past the largest variable index mentioned anywhere (free or bound).
std::size_t required_arity(const Expr& e);

// True if the tree contains a node of kind k.
bool contains_kind(const Expr& e, ExprKind k);

// Applies the identity/annihilator rewrites e+0→e, 0+e→e, e*1→e, 1*e→e,
// e*0→0, 0*e→0 bottom-up in a single pass.
Expr simplify_basic(const Expr& e);

// Value of a closed expression built only from Zero, One, Plus and Times,
// if it fits in 64 bits.
std::optional<std::uint64_t> closed_literal_value(const Expr& e);

}  // namespace adc
