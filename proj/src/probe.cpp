#include "adc/probe.hpp"

#include <algorithm>
#include <random>

#include "adc/eval.hpp"

namespace adc {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kSinKey = 0x73696e5f6b657931ULL;
constexpr std::uint64_t kCosKey = 0x636f735f6b657932ULL;

}  // namespace

ProbeField sin(ProbeField a) { return ProbeField(mix(a.value() ^ kSinKey)); }
ProbeField cos(ProbeField a) { return ProbeField(mix(a.value() ^ kCosKey)); }

bool probe_equal(const Expr& a, const Expr& b, std::uint64_t seed, int probes) {
  const std::size_t arity = std::max(required_arity(a), required_arity(b));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, ProbeField::kModulus - 1);
  Valuation<ProbeField> point(arity);
  for (int p = 0; p < probes; ++p) {
    for (auto& x : point) x = ProbeField(dist(rng));
    if (eval(point, a) != eval(point, b)) return false;
  }
  return true;
}

}  // namespace adc
