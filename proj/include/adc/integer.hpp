#pragma once

#include <cstdint>
#include <ostream>

namespace adc {

// 64-bit integer scalar with two's-complement wrap-around, i.e. the ring
// Z/2^64. Agrees with ordinary integer arithmetic whenever no intermediate
// result leaves the int64 range, and satisfies every ring law exactly even
// when one does.
class Integer {
 public:
  constexpr Integer() = default;
  constexpr Integer(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Integer zero() { return Integer(0); }
  static constexpr Integer one() { return Integer(1); }

  constexpr std::int64_t value() const { return v_; }

  friend constexpr Integer operator+(Integer a, Integer b) {
    return from_bits(bits(a) + bits(b));
  }
  friend constexpr Integer operator*(Integer a, Integer b) {
    return from_bits(bits(a) * bits(b));
  }
  friend constexpr Integer operator-(Integer a) { return from_bits(~bits(a) + 1u); }
  friend constexpr Integer operator-(Integer a, Integer b) { return a + (-b); }

  friend constexpr bool operator==(Integer, Integer) = default;
  friend constexpr auto operator<=>(Integer, Integer) = default;

  friend std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.v_; }

 private:
  static constexpr std::uint64_t bits(Integer x) { return static_cast<std::uint64_t>(x.v_); }
  static constexpr Integer from_bits(std::uint64_t u) { return Integer(static_cast<std::int64_t>(u)); }

  std::int64_t v_ = 0;
};

}  // namespace adc
