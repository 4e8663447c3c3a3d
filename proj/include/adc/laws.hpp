#pragma once

// Randomized checks of the commutative-semiring and module laws.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adc/algebra.hpp"

namespace adc {

struct LawResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::string counterexample;
};

struct LawReport {
  std::vector<LawResult> laws;

  bool all_passed() const {
    for (const auto& l : laws) {
      if (!l.passed) return false;
    }
    return true;
  }

  const LawResult* find(const std::string& name) const {
    for (const auto& l : laws) {
      if (l.name == name) return &l;
    }
    return nullptr;
  }
};

namespace detail {

template <class T>
std::string show(const T& x) {
  if constexpr (requires(std::ostream& os) { os << x; }) {
    std::ostringstream os;
    os << x;
    return os.str();
  } else {
    return "<value>";
  }
}

template <class... Ts>
std::string show_all(const Ts&... xs) {
  std::string out;
  ((out += (out.empty() ? "" : ", ") + show(xs)), ...);
  return out;
}

// Runs `holds(rng)` `trials` times; the first failure is recorded with the
// witness string it returns.
class LawRunner {
 public:
  LawRunner(std::uint64_t seed, std::size_t trials) : rng_(seed), trials_(trials) {}

  template <class Check>
  void law(const std::string& name, Check&& check) {
    LawResult r{name, true, 0, {}};
    for (std::size_t t = 0; t < trials_; ++t) {
      ++r.trials;
      std::string witness;
      if (!check(rng_, witness)) {
        r.passed = false;
        r.counterexample = witness;
        break;
      }
    }
    report_.laws.push_back(std::move(r));
  }

  LawReport take() { return std::move(report_); }

 private:
  std::mt19937_64 rng_;
  std::size_t trials_;
  LawReport report_;
};

}  // namespace detail

// The eight commutative-semiring laws. `gen(rng)` draws a scalar; `eq`
// decides equality (defaults to operator==).
template <class S, class Gen, class Eq = std::equal_to<S>>
LawReport check_semiring_laws(Gen&& gen, std::size_t trials, std::uint64_t seed = 1, Eq eq = {}) {
  detail::LawRunner run(seed, trials);
  const S z = adc::zero<S>();
  const S u = adc::one<S>();
  auto draw = [&](std::mt19937_64& rng) { return S(gen(rng)); };

  run.law("additive identity", [&](auto& rng, std::string& w) {
    S a = draw(rng);
    w = detail::show_all(a);
    return eq(a + z, a) && eq(z + a, a);
  });
  run.law("multiplicative identity", [&](auto& rng, std::string& w) {
    S a = draw(rng);
    w = detail::show_all(a);
    return eq(a * u, a) && eq(u * a, a);
  });
  run.law("additive associativity", [&](auto& rng, std::string& w) {
    S a = draw(rng), b = draw(rng), c = draw(rng);
    w = detail::show_all(a, b, c);
    return eq((a + b) + c, a + (b + c));
  });
  run.law("multiplicative associativity", [&](auto& rng, std::string& w) {
    S a = draw(rng), b = draw(rng), c = draw(rng);
    w = detail::show_all(a, b, c);
    return eq((a * b) * c, a * (b * c));
  });
  run.law("additive commutativity", [&](auto& rng, std::string& w) {
    S a = draw(rng), b = draw(rng);
    w = detail::show_all(a, b);
    return eq(a + b, b + a);
  });
  run.law("multiplicative commutativity", [&](auto& rng, std::string& w) {
    S a = draw(rng), b = draw(rng);
    w = detail::show_all(a, b);
    return eq(a * b, b * a);
  });
  run.law("distributivity", [&](auto& rng, std::string& w) {
    S a = draw(rng), b = draw(rng), c = draw(rng);
    w = detail::show_all(a, b, c);
    return eq(a * (b + c), a * b + a * c) && eq((a + b) * c, a * c + b * c);
  });
  run.law("annihilation", [&](auto& rng, std::string& w) {
    S a = draw(rng);
    w = detail::show_all(a);
    return eq(a * z, z) && eq(z * a, z);
  });
  return run.take();
}

// The seven laws of a module E over a semiring D: the commutative-monoid
// laws on E plus the laws of scaling.
template <class E, class D, class GenE, class GenD, class Eq = std::equal_to<E>>
LawReport check_module_laws(GenE&& gen_e, GenD&& gen_d, std::size_t trials, std::uint64_t seed = 1, Eq eq = {}) {
  detail::LawRunner run(seed, trials);
  const E ez = adc::zero<E>();
  const D dz = adc::zero<D>();
  const D du = adc::one<D>();
  auto e_of = [&](std::mt19937_64& rng) { return E(gen_e(rng)); };
  auto d_of = [&](std::mt19937_64& rng) { return D(gen_d(rng)); };

  run.law("additive identity", [&](auto& rng, std::string& w) {
    E a = e_of(rng);
    w = detail::show_all(a);
    return eq(a + ez, a) && eq(ez + a, a);
  });
  run.law("additive associativity", [&](auto& rng, std::string& w) {
    E a = e_of(rng), b = e_of(rng), c = e_of(rng);
    w = detail::show_all(a, b, c);
    return eq((a + b) + c, a + (b + c));
  });
  run.law("additive commutativity", [&](auto& rng, std::string& w) {
    E a = e_of(rng), b = e_of(rng);
    w = detail::show_all(a, b);
    return eq(a + b, b + a);
  });
  run.law("scaling annihilation", [&](auto& rng, std::string& w) {
    D d = d_of(rng);
    E a = e_of(rng);
    w = detail::show_all(d, a);
    return eq(scale(d, ez), ez) && eq(scale(dz, a), ez);
  });
  run.law("scaling distributivity", [&](auto& rng, std::string& w) {
    D d = d_of(rng), d2 = d_of(rng);
    E a = e_of(rng), b = e_of(rng);
    w = detail::show_all(d, d2, a, b);
    return eq(scale(d, a + b), scale(d, a) + scale(d, b)) && eq(scale(D(d + d2), a), scale(d, a) + scale(d2, a));
  });
  run.law("scaling unit", [&](auto& rng, std::string& w) {
    E a = e_of(rng);
    w = detail::show_all(a);
    return eq(scale(du, a), a);
  });
  run.law("scaling compatibility", [&](auto& rng, std::string& w) {
    D d = d_of(rng), d2 = d_of(rng);
    E a = e_of(rng);
    w = detail::show_all(d, d2, a);
    return eq(scale(D(d * d2), a), scale(d, scale(d2, a)));
  });
  return run.take();
}

}  // namespace adc
