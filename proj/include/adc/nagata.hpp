#pragma once

// Nagata numbers: a primal value paired with a tangent drawn from a module
// over the primal's semiring. With the tangent taken in the scalars
// themselves they are the classic dual numbers.

#include <ostream>
#include <type_traits>
#include <utility>

#include "adc/algebra.hpp"
#include "adc/counted.hpp"

namespace adc {

template <Semiring D, class E>
  requires ModuleOver<E, D>
struct Nagata {
  D pri{};
  E tan{};

  Nagata() : pri(adc::zero<D>()), tan(adc::zero<E>()) {}
  Nagata(D p, E t) : pri(std::move(p)), tan(std::move(t)) {}

  static Nagata zero() { return {adc::zero<D>(), adc::zero<E>()}; }
  static Nagata one() { return {adc::one<D>(), adc::zero<E>()}; }

  friend Nagata operator+(const Nagata& a, const Nagata& b) {
    D p = primal([&] { return D(a.pri + b.pri); });
    return {std::move(p), a.tan + b.tan};
  }

  friend Nagata operator*(const Nagata& a, const Nagata& b) {
    D p = primal([&] { return D(a.pri * b.pri); });
    if constexpr (std::is_same_v<D, E>) {
      return {std::move(p), (b.pri * a.tan) + (a.pri * b.tan)};
    } else {
      return {std::move(p), scale(a.pri, b.tan) + scale(b.pri, a.tan)};
    }
  }

  friend Nagata operator-(const Nagata& a)
    requires Ring<D>
  {
    return {-a.pri, scale(D(-adc::one<D>()), a.tan)};
  }

  friend Nagata sin(const Nagata& a)
    requires Trig<D>
  {
    auto [s, c] = primal([&] { return std::pair<D, D>(sin(a.pri), cos(a.pri)); });
    return {std::move(s), scale(c, a.tan)};
  }

  friend Nagata cos(const Nagata& a)
    requires Trig<D>
  {
    auto [c, ms] = primal([&] { return std::pair<D, D>(cos(a.pri), -sin(a.pri)); });
    return {std::move(c), scale(ms, a.tan)};
  }

  friend bool operator==(const Nagata& a, const Nagata& b) { return a.pri == b.pri && a.tan == b.tan; }

  friend std::ostream& operator<<(std::ostream& os, const Nagata& n)
    requires requires(std::ostream& o, const D& d, const E& e) {
      o << d;
      o << e;
    }
  {
    return os << (std::is_same_v<D, E> ? "D " : "N ") << n.pri << ' ' << n.tan;
  }

 private:
  template <class F>
  static auto primal(F&& f) {
    PrimalPhase phase;
    return f();
  }
};

template <Semiring D>
using Dual = Nagata<D, D>;

}  // namespace adc
