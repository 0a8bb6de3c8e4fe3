#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cofinal/ordinal.hpp"

namespace cofinal {

// 64-bit linear congruential generator with Knuth's MMIX constants. Bounded
// draws use the high bits and plain modulo reduction so that any language can
// reproduce a seeded stream exactly.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed = 1) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  // Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return (next() >> 16) % n; }

  // Uniform-ish draw in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() >> 40) & 1U; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Random ordinal strictly below `bound` (which must be positive). Candidates
// are random CNF sums of at most three terms whose exponents are drawn
// recursively below leading_exponent(bound)+1 and whose coefficients lie in
// [1, max_coefficient]; candidates >= bound are rejected.
inline Ordinal random_below(const Ordinal& bound, Lcg64& rng, std::uint64_t max_coefficient = 8) {
  if (bound.is_zero()) throw DomainError("empty", "random_below(0)");
  if (auto f = bound.as_finite()) return Ordinal::finite(rng.below(*f));
  const Ordinal exponent_bound = bound.leading_exponent().successor();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::uint64_t count = rng.between(1, 3);
    std::vector<Ordinal> exponents;
    for (std::uint64_t i = 0; i < count; ++i) {
      exponents.push_back(random_below(exponent_bound, rng, max_coefficient));
    }
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    std::vector<Ordinal::Term> terms;
    for (auto& e : exponents) {
      const std::uint64_t c = rng.between(0, max_coefficient);
      if (c > 0) terms.push_back(Ordinal::Term{std::move(e), c});
    }
    Ordinal candidate = Ordinal::from_terms(std::move(terms));
    if (candidate < bound) return candidate;
  }
  // Unreachable for sane bounds; fall back to something valid.
  return Ordinal{};
}

}  // namespace cofinal
