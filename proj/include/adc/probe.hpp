#pragma once

// Expression equality by evaluation at random points of the prime field
// Z/(2^61 - 1). sin and cos are interpreted as fixed hash functions, so two
// expressions agree only if they agree as polynomials over uninterpreted
// trig symbols (with overwhelming probability).

#include <cstdint>
#include <ostream>

#include "adc/expr.hpp"

namespace adc {

class ProbeField {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  ProbeField() = default;
  explicit ProbeField(std::uint64_t v) : v_(v % kModulus) {}

  static ProbeField zero() { return ProbeField(); }
  static ProbeField one() { return ProbeField(1); }

  std::uint64_t value() const { return v_; }

  friend ProbeField operator+(ProbeField a, ProbeField b) { return from_reduced(reduce(a.v_ + b.v_)); }
  friend ProbeField operator*(ProbeField a, ProbeField b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    const std::uint64_t lo = static_cast<std::uint64_t>(p) & kModulus;
    const std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return from_reduced(reduce(lo + hi));
  }
  friend ProbeField operator-(ProbeField a) { return from_reduced(a.v_ == 0 ? 0 : kModulus - a.v_); }
  friend ProbeField operator-(ProbeField a, ProbeField b) { return a + (-b); }
  friend ProbeField sin(ProbeField a);
  friend ProbeField cos(ProbeField a);

  friend bool operator==(ProbeField, ProbeField) = default;
  friend std::ostream& operator<<(std::ostream& os, ProbeField a) { return os << a.v_; }

 private:
  static std::uint64_t reduce(std::uint64_t x) {
    x = (x & kModulus) + (x >> 61);
    return x >= kModulus ? x - kModulus : x;
  }
  static ProbeField from_reduced(std::uint64_t v) {
    ProbeField f;
    f.v_ = v;
    return f;
  }

  std::uint64_t v_ = 0;
};

inline constexpr int kDefaultProbes = 32;

// True when a and b evaluate equally at `probes` pseudorandom points.
bool probe_equal(const Expr& a, const Expr& b, std::uint64_t seed = 0x5eed, int probes = kDefaultProbes);

}  // namespace adc
