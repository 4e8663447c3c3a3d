#pragma once

// Capability signatures for the scalar and tangent types used by the
// differentiation algorithms.
//
// Scalars model commutative semirings through operator+ and operator*,
// with the distinguished elements supplied by static zero()/one() members
// (or by the literal 0/1 for builtin arithmetic types). Rings add unary
// operator-, and Trig scalars add sin/cos found by argument-dependent
// lookup inside namespace adc.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "adc/var.hpp"

namespace adc {

template <class T>
  requires std::is_arithmetic_v<T>
T zero() {
  return T(0);
}

template <class T>
  requires requires {
    { T::zero() } -> std::convertible_to<T>;
  }
T zero() {
  return T::zero();
}

template <class T>
  requires std::is_arithmetic_v<T>
T one() {
  return T(1);
}

template <class T>
  requires requires {
    { T::one() } -> std::convertible_to<T>;
  }
T one() {
  return T::one();
}

inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }

template <class T>
concept CommutativeMonoid = std::copyable<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { adc::zero<T>() } -> std::convertible_to<T>;
};

template <class T>
concept Semiring = CommutativeMonoid<T> && requires(const T& a, const T& b) {
  { a * b } -> std::convertible_to<T>;
  { adc::one<T>() } -> std::convertible_to<T>;
};

template <class T>
concept Ring = Semiring<T> && requires(const T& a) {
  { -a } -> std::convertible_to<T>;
};

template <class T>
concept Trig = Ring<T> && requires(const T& a) {
  { sin(a) } -> std::convertible_to<T>;
  { cos(a) } -> std::convertible_to<T>;
};

// Every semiring is a module over itself with scale = multiplication.
template <Semiring D>
D scale(const D& d, const D& e) {
  return d * e;
}

template <class E, class D>
concept ModuleOver = Semiring<D> && CommutativeMonoid<E> && requires(const D& d, const E& e) {
  { scale(d, e) } -> std::convertible_to<E>;
};

template <class E, class D>
concept KroneckerOver = ModuleOver<E, D> && requires(VarId v, std::size_t arity) {
  { E::delta(v, arity) } -> std::convertible_to<E>;
};

// Thrown by evaluators when an expression needs a primitive (negation,
// sin, cos) that the target scalar does not provide.
class UnsupportedPrimitive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adc
