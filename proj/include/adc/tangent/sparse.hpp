#pragma once

// Finite map from variables to partials; absent keys are zero.
//
// Addition is union-with-add and keeps zeros that arise from cancellation.
// Equality, abs and iteration helpers treat a stored zero as absent.
// Key comparisons are reported as touches to the active OpCounter.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/counted.hpp"
#include "adc/tangent/dense.hpp"

namespace adc {

struct CountingLess {
  bool operator()(VarId a, VarId b) const {
    count_touches();
    return a < b;
  }
};

template <class D>
bool is_zero(const D& d) {
  return d == adc::zero<D>();
}

template <Semiring D>
class SparseTangent {
 public:
  using Map = std::map<VarId, D, CountingLess>;

  SparseTangent() = default;
  explicit SparseTangent(Map m) : m_(std::move(m)) {}
  SparseTangent(std::initializer_list<std::pair<const VarId, D>> entries) : m_(entries) {}

  static SparseTangent zero() { return SparseTangent(); }

  static SparseTangent delta(VarId v, std::size_t = 0) {
    count_delta();
    return singleton(v, adc::one<D>());
  }

  static SparseTangent singleton(VarId v, D d) {
    SparseTangent t;
    t.m_.emplace(v, std::move(d));
    return t;
  }

  const Map& entries() const { return m_; }
  std::size_t stored() const { return m_.size(); }

  D operator[](VarId v) const {
    auto it = m_.find(v);
    return it == m_.end() ? adc::zero<D>() : it->second;
  }

  // In-place m[v] := m[v] ⊕ d.
  void insert_with_add(VarId v, const D& d) {
    auto [it, fresh] = m_.try_emplace(v, d);
    if (!fresh) it->second = it->second + d;
  }

  // In-place union-with-add of another map into this one.
  void absorb(const SparseTangent& other) {
    for (const auto& [v, d] : other.m_) insert_with_add(v, d);
  }

  // Removes v and returns its partial (zero if absent).
  D take(VarId v) {
    auto it = m_.find(v);
    if (it == m_.end()) return adc::zero<D>();
    D d = std::move(it->second);
    m_.erase(it);
    return d;
  }

  // Copy without the entry for v.
  SparseTangent without(VarId v) const {
    SparseTangent out(*this);
    out.m_.erase(v);
    return out;
  }

  // Entries with nonzero partials, in variable order.
  std::vector<std::pair<VarId, D>> nonzero() const {
    std::vector<std::pair<VarId, D>> out;
    for (const auto& [v, d] : m_) {
      if (!is_zero(d)) out.emplace_back(v, d);
    }
    return out;
  }

  DenseTangent<D> to_dense(std::size_t arity) const {
    std::vector<D> c(arity, adc::zero<D>());
    for (const auto& [v, d] : m_) {
      if (v.index >= c.size()) c.resize(std::size_t{v.index} + 1, adc::zero<D>());
      c[v.index] = d;
    }
    count_touches(c.size());
    return DenseTangent<D>(std::move(c));
  }

  static SparseTangent from_dense(const DenseTangent<D>& t) {
    SparseTangent out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!is_zero(t.components()[i])) {
        out.m_.emplace_hint(out.m_.end(), VarId{static_cast<std::uint32_t>(i)}, t.components()[i]);
      }
    }
    return out;
  }

  // Builds a fresh map; each produced entry counts as a touch on top of the
  // key comparisons.
  friend SparseTangent operator+(const SparseTangent& a, const SparseTangent& b) {
    Map out;
    auto i = a.m_.begin();
    auto j = b.m_.begin();
    while (i != a.m_.end() || j != b.m_.end()) {
      if (j == b.m_.end() || (i != a.m_.end() && i->first < j->first)) {
        out.emplace_hint(out.end(), *i++);
      } else if (i == a.m_.end() || j->first < i->first) {
        out.emplace_hint(out.end(), *j++);
      } else {
        out.emplace_hint(out.end(), i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    count_touches(out.size());
    return SparseTangent(std::move(out));
  }

  friend SparseTangent scale(const D& d, const SparseTangent& t) {
    count_scale();
    Map out;
    for (const auto& [v, x] : t.m_) out.emplace_hint(out.end(), v, d * x);
    count_touches(out.size());
    return SparseTangent(std::move(out));
  }

  friend SparseTangent operator-(const SparseTangent& t)
    requires Ring<D>
  {
    Map out;
    for (const auto& [v, x] : t.m_) out.emplace_hint(out.end(), v, -x);
    count_touches(out.size());
    return SparseTangent(std::move(out));
  }

  // Normalization-equality: stored zeros and absent keys coincide.
  friend bool operator==(const SparseTangent& a, const SparseTangent& b) {
    return a.nonzero() == b.nonzero();
  }

  friend std::ostream& operator<<(std::ostream& os, const SparseTangent& t) {
    os << '{';
    bool first = true;
    for (const auto& [v, d] : t.m_) {
      os << (first ? "" : ", ") << v.index << ':' << d;
      first = false;
    }
    return os << '}';
  }

 private:
  Map m_;
};

}  // namespace adc
