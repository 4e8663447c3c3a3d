#pragma once

// Total per-variable tangent stored as a vector. Components past size() are
// zero, so the zero tangent is the empty vector and tangents of different
// lengths combine by zero-padding.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/counted.hpp"

namespace adc {

template <Semiring D>
class DenseTangent {
 public:
  DenseTangent() = default;
  explicit DenseTangent(std::vector<D> components) : c_(std::move(components)) {}
  DenseTangent(std::initializer_list<D> components) : c_(components) {}

  static DenseTangent zero() { return DenseTangent(); }

  // Unit basis vector for v, of length `arity`.
  static DenseTangent delta(VarId v, std::size_t arity) {
    count_delta();
    std::vector<D> c(std::max(arity, std::size_t{v.index} + 1), adc::zero<D>());
    c[v.index] = adc::one<D>();
    count_touches(c.size());
    return DenseTangent(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  D operator[](std::size_t i) const { return i < c_.size() ? c_[i] : adc::zero<D>(); }
  D operator[](VarId v) const { return (*this)[v.index]; }
  const std::vector<D>& components() const { return c_; }

  // Components padded or truncated to length n.
  std::vector<D> to_vector(std::size_t n) const {
    std::vector<D> out(n, adc::zero<D>());
    std::copy_n(c_.begin(), std::min(n, c_.size()), out.begin());
    return out;
  }

  friend DenseTangent operator+(const DenseTangent& a, const DenseTangent& b) {
    const DenseTangent& big = a.size() >= b.size() ? a : b;
    const DenseTangent& small = a.size() >= b.size() ? b : a;
    std::vector<D> out;
    out.reserve(big.size());
    for (std::size_t i = 0; i < small.size(); ++i) out.push_back(a.c_[i] + b.c_[i]);
    for (std::size_t i = small.size(); i < big.size(); ++i) out.push_back(big.c_[i]);
    count_touches(out.size());
    return DenseTangent(std::move(out));
  }

  friend DenseTangent scale(const D& d, const DenseTangent& t) {
    count_scale();
    std::vector<D> out;
    out.reserve(t.size());
    for (const D& x : t.c_) out.push_back(d * x);
    count_touches(out.size());
    return DenseTangent(std::move(out));
  }

  friend DenseTangent operator-(const DenseTangent& t)
    requires Ring<D>
  {
    std::vector<D> out;
    out.reserve(t.size());
    for (const D& x : t.c_) out.push_back(-x);
    count_touches(out.size());
    return DenseTangent(std::move(out));
  }

  // Equality of the represented total functions.
  friend bool operator==(const DenseTangent& a, const DenseTangent& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!(a[i] == b[i])) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const DenseTangent& t) {
    os << '[';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t.c_[i];
    return os << ']';
  }

 private:
  std::vector<D> c_;
};

}  // namespace adc
