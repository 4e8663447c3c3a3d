#include "adc/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <vector>

namespace adc {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, LParen, RParen, Equals, Let, In, Sin, Cos, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::Let: return "'let'";
    case Tok::In: return "'in'";
    case Tok::Sin: return "'sin'";
    case Tok::Cos: return "'cos'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const std::size_t start = i;
    const std::size_t l = line;
    const std::size_t cl = col;
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string_view word = src.substr(start, j - start);
      Tok kind = Tok::Ident;
      if (word == "let") kind = Tok::Let;
      else if (word == "in") kind = Tok::In;
      else if (word == "sin") kind = Tok::Sin;
      else if (word == "cos") kind = Tok::Cos;
      out.push_back({kind, word, l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(start, j - start), l, cl});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Equals; break;
      default: throw ParseError(l, cl, "unexpected character '" + std::string(1, src[i]) + "'");
    }
    out.push_back({kind, src.substr(start, 1), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, {}, line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, VarRegistry reg, RegistryMode mode)
      : toks_(std::move(toks)), reg_(std::move(reg)), mode_(mode) {}

  Parsed run() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail("expected end of input");
    return {std::move(e), std::move(reg_)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? describe(t.kind) : "'" + std::string(t.text) + "'";
    throw ParseError(t.line, t.column, what + ", found " + found);
  }

  const Token& expect(Tok k) {
    if (peek().kind != k) fail(std::string("expected ") + describe(k));
    return next();
  }

  Expr expr() {
    if (peek().kind != Tok::Let) return sum();
    next();
    const Token& name = expect(Tok::Ident);
    expect(Tok::Equals);
    Expr bound = expr();
    expect(Tok::In);
    const VarId y = bind(name.text);
    scope_.push_back(y);
    Expr body = expr();
    scope_.pop_back();
    return Expr::let(y, std::move(bound), std::move(body));
  }

  Expr sum() {
    Expr acc = prod();
    for (;;) {
      if (peek().kind == Tok::Plus) {
        next();
        acc = Expr::plus(std::move(acc), prod());
      } else if (peek().kind == Tok::Minus) {
        next();
        acc = Expr::plus(std::move(acc), Expr::negate(prod()));
      } else {
        return acc;
      }
    }
  }

  Expr prod() {
    Expr acc = unary();
    while (peek().kind == Tok::Star) {
      next();
      acc = Expr::times(std::move(acc), unary());
    }
    return acc;
  }

  Expr unary() {
    switch (peek().kind) {
      case Tok::Minus:
        next();
        return Expr::negate(unary());
      case Tok::Sin:
      case Tok::Cos: {
        const bool is_sin = next().kind == Tok::Sin;
        expect(Tok::LParen);
        Expr arg = expr();
        expect(Tok::RParen);
        return is_sin ? Expr::sine(std::move(arg)) : Expr::cosine(std::move(arg));
      }
      default: return atom();
    }
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw ParseError(t.line, t.column, "integer literal out of range");
        }
        next();
        return const_lit(n);
      }
      case Tok::Ident: {
        next();
        return Expr::variable(resolve(t));
      }
      case Tok::LParen: {
        next();
        Expr e = expr();
        expect(Tok::RParen);
        return e;
      }
      default: fail("expected expression");
    }
  }

  VarId bind(std::string_view name) {
    if (auto v = reg_.find(name)) return *v;
    const VarId y = reg_.add(name);
    binder_only_.insert(y);
    return y;
  }

  // In fixed mode a name registered only as a let binder resolves solely
  // inside that binder's scope.
  VarId resolve(const Token& t) {
    if (auto v = reg_.find(t.text)) {
      const bool in_scope = std::find(scope_.begin(), scope_.end(), *v) != scope_.end();
      if (mode_ == RegistryMode::Fixed && binder_only_.contains(*v) && !in_scope) {
        throw UnknownVariable(std::string(t.text));
      }
      if (!in_scope) binder_only_.erase(*v);
      return *v;
    }
    if (mode_ == RegistryMode::Fixed) throw UnknownVariable(std::string(t.text));
    return reg_.add(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarRegistry reg_;
  RegistryMode mode_;
  std::vector<VarId> scope_;
  std::set<VarId> binder_only_;
};

}  // namespace

Parsed parse(std::string_view text, VarRegistry registry, RegistryMode mode) {
  return Parser(tokenize(text), std::move(registry), mode).run();
}

}  // namespace adc
