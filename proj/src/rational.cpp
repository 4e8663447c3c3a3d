#include "adc/rational.hpp"

#include <stdexcept>

namespace adc {

Rational::Rational(std::int64_t n) : q_(mpz_class(std::to_string(n))) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class d(std::string{den});
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return Rational(mpq_class(mpz_class(n), d));
}

std::string Rational::numerator() const { return q_.get_num().get_str(); }
std::string Rational::denominator() const { return q_.get_den().get_str(); }
bool Rational::is_integer() const { return q_.get_den() == 1; }
double Rational::to_double() const { return q_.get_d(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.q_ == 0) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace adc
