#pragma once

// Relations over the tower and the family window: the three-place relation
// R(gamma, beta, alpha), its size-3 covering check, the relations R_{m,k}
// evaluated inside a window, and restriction of a window to a ground set.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cofinal/closed_family.hpp"
#include "cofinal/ordinal_set.hpp"
#include "cofinal/set_system.hpp"
#include "cofinal/tower.hpp"

namespace cofinal {

// R(gamma, beta, alpha) iff gamma, beta < alpha and gamma <^alpha beta.
inline bool example_R(const TowerState& tower, const Ordinal& gamma, const Ordinal& beta, const Ordinal& alpha) {
  return tower.turnstile(alpha, beta, gamma);
}

// Some arrangement (a; b, c) of the three elements satisfies R(a, b, c).
// Always true for the tower (the order <^max is total on the other two); a
// false result means the construction is broken.
inline bool cond4_check(const TowerState& tower, const FiniteOrdinalSet& triple) {
  if (triple.size() != 3) {
    throw DomainError("wrong-size", "cond4 needs exactly 3 distinct ordinals, got " + std::to_string(triple.size()));
  }
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    if (example_R(tower, triple[p[0]], triple[p[1]], triple[p[2]])) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// The set system (ground, {D n ground : D in window}).
inline SetSystem<Ordinal> restrict_window(const FamilyWindow& window, const std::vector<Ordinal>& ground) {
  std::vector<Mask> sets;
  sets.reserve(window.members.size());
  for (const auto& d : window.members) {
    Mask m = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (d.contains(ground[i])) m |= Mask{1} << i;
    }
    sets.push_back(m);
  }
  return SetSystem<Ordinal>(ground, std::move(sets));
}

// Up to `size` ground points drawn (seeded) from the union of the members.
inline std::vector<Ordinal> window_ground(const FamilyWindow& window, std::size_t size, std::uint64_t seed) {
  FiniteOrdinalSet all;
  for (const auto& d : window.members) all = set_union(all, d);
  std::vector<Ordinal> pool(all.begin(), all.end());
  Lcg64 rng(seed);
  for (std::size_t i = 0; i < pool.size() && i < size; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(std::min(size, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

enum class WindowTruth { TrueInWindow, FalseInWindow };

inline const char* to_string(WindowTruth t) {
  return t == WindowTruth::TrueInWindow ? "TRUE_IN_WINDOW" : "FALSE_IN_WINDOW";
}

struct RmkEvaluation {
  WindowTruth value = WindowTruth::FalseInWindow;
  // Member realizing the pattern (x_i in t iff i <= m, for 1 <= i <= k). Such a
  // witness proves the existential clause over the whole family.
  std::optional<std::size_t> pattern_witness;
  // Member realizing the pattern but omitting x_0; refutes the universal
  // clause over the whole family. Its absence only speaks for the window.
  std::optional<std::size_t> universal_counterexample;
};

// R_{m,k}(x_0..x_k) =  [exists t: pattern(t)] and [forall t: pattern(t) -> x_0 in t],
// with t ranging over the window.
inline RmkEvaluation rmk_eval(std::uint64_t m, std::uint64_t k, const std::vector<Ordinal>& tuple,
                              const FamilyWindow& window) {
  if (m > k) throw DomainError("arity", "rmk needs m <= k");
  if (tuple.size() != k + 1) {
    throw DomainError("arity", "rmk with k = " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                                   " points, got " + std::to_string(tuple.size()));
  }
  RmkEvaluation out;
  for (std::size_t idx = 0; idx < window.members.size(); ++idx) {
    const auto& t = window.members[idx];
    bool pattern = true;
    for (std::uint64_t i = 1; i <= k && pattern; ++i) pattern = t.contains(tuple[i]) == (i <= m);
    if (!pattern) continue;
    if (!out.pattern_witness) out.pattern_witness = idx;
    if (!t.contains(tuple[0]) && !out.universal_counterexample) out.universal_counterexample = idx;
  }
  out.value = out.pattern_witness && !out.universal_counterexample ? WindowTruth::TrueInWindow
                                                                   : WindowTruth::FalseInWindow;
  return out;
}

// Shattering certificate: for every pattern (bit i <-> set[i]) the index of a
// window member realizing it.
struct ShatterCertificate {
  std::vector<Ordinal> set;
  std::map<Mask, std::size_t> witnesses;
};

inline std::optional<ShatterCertificate> shatter_certificate(const SetSystem<Ordinal>& sys, Mask a) {
  if (!is_shattered(sys, a)) return std::nullopt;
  ShatterCertificate cert;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < sys.ground().size(); ++i) {
    if (a >> i & 1U) {
      positions.push_back(i);
      cert.set.push_back(sys.ground()[i]);
    }
  }
  for (std::size_t f = 0; f < sys.sets().size(); ++f) {
    Mask pattern = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (sys.sets()[f] >> positions[j] & 1U) pattern |= Mask{1} << j;
    }
    cert.witnesses.emplace(pattern, f);
  }
  return cert;
}

}  // namespace cofinal
