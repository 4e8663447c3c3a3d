#include <optional>
#include <string>
#include <unordered_map>

#include "adc/parse.hpp"

namespace adc {

namespace {

enum Level { kLet = 0, kSum = 1, kProd = 2, kUnary = 3, kAtom = 4 };

class Printer {
 public:
  explicit Printer(const VarRegistry* reg) : reg_(reg) {}

  void print(const Expr& e, int ctx) {
    if (auto lit = literal(e)) {
      out_ += std::to_string(*lit);
      return;
    }
    const int own = level(e);
    const bool paren = own < ctx;
    if (paren) out_ += '(';
    switch (e.kind()) {
      case ExprKind::Var: out_ += name(e.var()); break;
      case ExprKind::Zero: out_ += '0'; break;
      case ExprKind::One: out_ += '1'; break;
      case ExprKind::Plus:
        print(e.lhs(), kSum);
        if (e.rhs().kind() == ExprKind::Neg) {
          out_ += " - ";
          print(e.rhs().lhs(), kProd);
        } else {
          out_ += " + ";
          print(e.rhs(), kProd);
        }
        break;
      case ExprKind::Times:
        print(e.lhs(), kProd);
        out_ += " * ";
        print(e.rhs(), kUnary);
        break;
      case ExprKind::Neg:
        out_ += '-';
        print(e.lhs(), kUnary);
        break;
      case ExprKind::Sin:
      case ExprKind::Cos:
        out_ += e.kind() == ExprKind::Sin ? "sin(" : "cos(";
        print(e.lhs(), kLet);
        out_ += ')';
        break;
      case ExprKind::Let:
        out_ += "let ";
        out_ += name(e.var());
        out_ += " = ";
        print(e.lhs(), kLet);
        out_ += " in ";
        print(e.rhs(), kLet);
        break;
    }
    if (paren) out_ += ')';
  }

  std::string take() { return std::move(out_); }

 private:
  static int level(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Let: return kLet;
      case ExprKind::Plus: return kSum;
      case ExprKind::Times: return kProd;
      case ExprKind::Neg: return kUnary;
      default: return kAtom;
    }
  }

  std::string name(VarId v) const {
    if (reg_ && v.index < reg_->arity()) return reg_->name_of(v);
    return "v" + std::to_string(v.index);
  }

  std::optional<std::uint64_t> literal(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Zero: return 0;
      case ExprKind::One: return 1;
      case ExprKind::Plus:
      case ExprKind::Times: break;
      default: return std::nullopt;
    }
    if (auto it = lits_.find(e.identity()); it != lits_.end()) return it->second;
    std::optional<std::uint64_t> r;
    auto a = literal(e.lhs());
    auto b = a ? literal(e.rhs()) : std::nullopt;
    if (a && b) {
      std::uint64_t v = 0;
      const bool overflow = e.kind() == ExprKind::Plus ? __builtin_add_overflow(*a, *b, &v)
                                                       : __builtin_mul_overflow(*a, *b, &v);
      if (!overflow) r = v;
    }
    lits_.emplace(e.identity(), r);
    return r;
  }

  const VarRegistry* reg_;
  std::string out_;
  std::unordered_map<const void*, std::optional<std::uint64_t>> lits_;
};

}  // namespace

std::string pretty(const Expr& e, const VarRegistry& registry) {
  Printer p(&registry);
  p.print(e, kLet);
  return p.take();
}

std::string pretty(const Expr& e) {
  Printer p(nullptr);
  p.print(e, kLet);
  return p.take();
}

}  // namespace adc
