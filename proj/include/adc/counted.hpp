#pragma once

// Operation counting for complexity measurements.
//
// A CountingScope installs an OpCounter for the current thread. While it is
// active, Counted<S> arithmetic and the tangent containers report the work
// they do. Nothing is recorded when no scope is active, and counting never
// changes a computed value.

#include <cstdint>
#include <ostream>

#include "adc/algebra.hpp"

namespace adc {

struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t scales = 0;
  std::uint64_t deltas = 0;
  std::uint64_t touches = 0;
  // The subset of adds/muls spent computing primal values of Nagata numbers.
  std::uint64_t primal_adds = 0;
  std::uint64_t primal_muls = 0;

  std::uint64_t total() const { return adds + muls + scales + deltas + touches; }
};

namespace detail {

inline thread_local OpCounter* active_counter = nullptr;
inline thread_local int primal_depth = 0;

}  // namespace detail

inline OpCounter* current_counter() { return detail::active_counter; }

class CountingScope {
 public:
  explicit CountingScope(OpCounter& counter) : previous_(detail::active_counter) {
    detail::active_counter = &counter;
  }
  ~CountingScope() { detail::active_counter = previous_; }
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

 private:
  OpCounter* previous_;
};

// Marks arithmetic done while computing a primal value.
class PrimalPhase {
 public:
  PrimalPhase() { ++detail::primal_depth; }
  ~PrimalPhase() { --detail::primal_depth; }
  PrimalPhase(const PrimalPhase&) = delete;
  PrimalPhase& operator=(const PrimalPhase&) = delete;
};

inline void count_add() {
  if (auto* c = detail::active_counter) {
    ++c->adds;
    if (detail::primal_depth > 0) ++c->primal_adds;
  }
}
inline void count_mul() {
  if (auto* c = detail::active_counter) {
    ++c->muls;
    if (detail::primal_depth > 0) ++c->primal_muls;
  }
}
inline void count_scale() {
  if (auto* c = detail::active_counter) ++c->scales;
}
inline void count_delta() {
  if (auto* c = detail::active_counter) ++c->deltas;
}
inline void count_touches(std::uint64_t n = 1) {
  if (auto* c = detail::active_counter) c->touches += n;
}

// Scalar wrapper whose ring operations bump the active OpCounter.
template <Semiring S>
class Counted {
 public:
  Counted() : v_(adc::zero<S>()) {}
  Counted(S v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static Counted zero() { return Counted(adc::zero<S>()); }
  static Counted one() { return Counted(adc::one<S>()); }

  const S& value() const { return v_; }

  friend Counted operator+(const Counted& a, const Counted& b) {
    count_add();
    return Counted(a.v_ + b.v_);
  }
  friend Counted operator*(const Counted& a, const Counted& b) {
    count_mul();
    return Counted(a.v_ * b.v_);
  }
  friend Counted operator-(const Counted& a)
    requires Ring<S>
  {
    return Counted(-a.v_);
  }
  friend Counted sin(const Counted& a)
    requires Trig<S>
  {
    return Counted(sin(a.v_));
  }
  friend Counted cos(const Counted& a)
    requires Trig<S>
  {
    return Counted(cos(a.v_));
  }

  friend bool operator==(const Counted& a, const Counted& b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Counted& c) { return os << c.v_; }

 private:
  S v_;
};

template <Semiring S>
Counted<S> counted(S inner) {
  return Counted<S>(std::move(inner));
}

}  // namespace adc
