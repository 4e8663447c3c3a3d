#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace adc {

// Exact rational scalar backed by GMP; always stored in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  std::string numerator() const;
  std::string denominator() const;
  bool is_integer() const;
  double to_double() const;

  // "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class q);

  mpq_class q_;
};

}  // namespace adc
