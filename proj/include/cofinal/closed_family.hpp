#pragma once

// The cofinal family F of finite |- -closed sets, and finite windows onto it.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cofinal/error.hpp"
#include "cofinal/ordinal.hpp"
#include "cofinal/ordinal_set.hpp"
#include "cofinal/random.hpp"
#include "cofinal/tower.hpp"

namespace cofinal {

// A witness that a set is not closed: alpha, beta |- gamma with alpha, beta in
// the set and gamma missing.
struct ClosureViolation {
  Ordinal alpha;
  Ordinal beta;
  Ordinal gamma;
};

// For each alpha in A, every <^alpha-predecessor of a beta in A (beta < alpha)
// must lie in A. With alpha = lam+m, <^alpha lists lam+m-1, ..., lam and then
// <^lam, so the work splits in two:
//   - below lam: the deepest beta and the <^lam prefix it demands depend on lam
//     alone and are computed once per limit part; the prefix is inside A iff
//     its length equals |A n lam| (ranks are injective);
//   - the tail lam+j: plain arithmetic.
inline std::optional<ClosureViolation> find_closure_violation(const TowerState& tower,
                                                              const FiniteOrdinalSet& a) {
  struct LowerPart {
    std::optional<Ordinal> deepest;  // beta < lam in A with the largest <^lam rank
    std::optional<Ordinal> missing;  // first gap in the prefix it demands
  };
  std::map<Ordinal, LowerPart> lower;
  auto lower_part = [&](const Ordinal& lam) -> const LowerPart& {
    auto it = lower.find(lam);
    if (it != lower.end()) return it->second;
    LowerPart part;
    std::uint64_t top = 0;
    std::size_t below = 0;
    for (const Ordinal& beta : a) {
      if (!(beta < lam)) break;
      ++below;
      const std::uint64_t r = tower.rank(lam, beta);
      if (!part.deepest || r > top) {
        top = r;
        part.deepest = beta;
      }
    }
    if (part.deepest && top + 1 != below) {
      for (std::uint64_t k = 0; k < top; ++k) {
        Ordinal gamma = tower.nth(lam, k);
        if (!a.contains(gamma)) {
          part.missing = std::move(gamma);
          break;
        }
      }
    }
    return lower.emplace(lam, std::move(part)).first->second;
  };

  for (std::size_t i = 1; i < a.size(); ++i) {
    const Ordinal& alpha = a[i];
    const Ordinal lam = alpha.limit_part();
    const std::uint64_t m = alpha.finite_part();
    const LowerPart& part = lam.is_zero() ? LowerPart{} : lower_part(lam);
    // Least j < m with lam+j in A, if any.
    std::optional<std::uint64_t> first_tail;
    for (std::uint64_t j = 0; j < m; ++j) {
      if (a.contains(add(lam, Ordinal::finite(j)))) {
        first_tail = j;
        break;
      }
    }
    if (!part.deepest && !first_tail) continue;
    // Tail elements lam+j preceding the deepest beta must all be present.
    const Ordinal beta = part.deepest ? *part.deepest : add(lam, Ordinal::finite(*first_tail));
    const std::uint64_t from = part.deepest ? 0 : *first_tail + 1;
    for (std::uint64_t j = m; j-- > from;) {
      Ordinal gamma = add(lam, Ordinal::finite(j));
      if (!a.contains(gamma)) return ClosureViolation{alpha, beta, std::move(gamma)};
    }
    if (part.missing) return ClosureViolation{alpha, beta, *part.missing};
  }
  return std::nullopt;
}

inline bool is_closed(const TowerState& tower, const FiniteOrdinalSet& a) {
  return !find_closure_violation(tower, a).has_value();
}

// close(max(A)+1, A) u {max(A)+1}; for A empty this is {0, 1}.
inline FiniteOrdinalSet cofinal_extend(const TowerState& tower, const FiniteOrdinalSet& a) {
  const Ordinal top = a.empty() ? Ordinal::finite(1) : a.max().successor();
  FiniteOrdinalSet out = tower.close(top, a);
  out.insert(top);
  return out;
}

struct Ladder {
  std::vector<Ordinal> points;
  std::vector<FiniteOrdinalSet> sets;
};

// x_0 = 0, s_i = cofinal_extend({x_0..x_i}), x_(i+1) the least ordinal below
// bound outside s_0 u ... u s_i. Then x_i in s_j iff i <= j.
inline Ladder ladder(const TowerState& tower, std::uint64_t length, const Ordinal& bound) {
  Ladder out;
  if (length == 0) return out;
  FiniteOrdinalSet used;
  FiniteOrdinalSet chosen;
  Ordinal next;
  for (std::uint64_t i = 0; i < length; ++i) {
    if (!(next < bound)) {
      throw DomainError("bound-exhausted", "no fresh point below " + bound.to_string() + " for step " +
                                               std::to_string(i));
    }
    out.points.push_back(next);
    chosen.insert(next);
    FiniteOrdinalSet s = cofinal_extend(tower, chosen);
    used = set_union(used, s);
    out.sets.push_back(std::move(s));
    // `used` is finite, so the least missing ordinal is a natural number.
    std::uint64_t candidate = 0;
    while (used.contains(Ordinal::finite(candidate))) ++candidate;
    next = Ordinal::finite(candidate);
  }
  return out;
}

// A finite window onto F together with the recipe that regenerates it.
struct FamilyWindow {
  Ordinal bound;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::vector<FiniteOrdinalSet> members;  // sorted lexicographically, distinct
};

enum class Entailment { Refuted, NoWitnessInWindow };

struct EntailmentResult {
  Entailment verdict = Entailment::NoWitnessInWindow;
  std::optional<std::size_t> certificate;  // index into window.members
};

// Refutes A |- B when some window member D has A c D and D n B = {}. A
// refutation is sound for the whole family; the other outcome says nothing.
inline EntailmentResult entails(const FiniteOrdinalSet& a, const FiniteOrdinalSet& b,
                                const FamilyWindow& window) {
  for (std::size_t i = 0; i < window.members.size(); ++i) {
    const auto& d = window.members[i];
    if (d.includes(a) && !d.intersects(b)) return {Entailment::Refuted, i};
  }
  return {};
}

inline const char* to_string(Entailment e) {
  return e == Entailment::Refuted ? "REFUTED" : "NO_WITNESS_IN_WINDOW";
}

namespace detail {

// Limit ordinals <= bound whose early blocks seed every window.
inline std::vector<Ordinal> window_block_sources(const Ordinal& bound) {
  std::vector<Ordinal> out;
  auto push = [&](const Ordinal& eta) {
    if (eta.is_limit() && eta <= bound && std::find(out.begin(), out.end(), eta) == out.end()) {
      out.push_back(eta);
    }
  };
  push(Ordinal::omega());
  if (bound.is_limit()) {
    for (std::uint64_t i = 0; i < 3; ++i) push(fund_seq(bound, i));
    push(bound);
  }
  return out;
}

}  // namespace detail

// Coefficient ceiling for the random points of a window; larger values make
// the closures (and the blocks behind them) grow quickly. Finite points get an
// extra shift below count + 1 so small bounds still yield enough members.
inline constexpr std::uint64_t kWindowCoefficient = 8;

// `count` distinct members of F: the blocks S_0..S_3 of a few limits <= bound,
// then cofinal_extend of seeded random sets (size <= 6) of ordinals below bound.
inline FamilyWindow enumerate_family(const TowerState& tower, const Ordinal& bound, std::uint64_t count,
                                     std::uint64_t seed) {
  if (tower.config().cap < bound) {
    throw CapExceeded(bound.to_string() + " exceeds cap " + tower.config().cap.to_string());
  }
  std::set<FiniteOrdinalSet> members;
  for (const Ordinal& eta : detail::window_block_sources(bound)) {
    for (std::uint64_t n = 0; n < 4 && members.size() < count; ++n) members.insert(tower.block(eta, n));
  }
  if (!bound.is_zero()) {
    Lcg64 rng(seed);
    const std::uint64_t attempts = 200 * count + 1000;
    for (std::uint64_t t = 0; t < attempts && members.size() < count; ++t) {
      const std::uint64_t size = rng.between(0, 6);
      std::vector<Ordinal> picks;
      for (std::uint64_t j = 0; j < size; ++j) {
        // Finite points get spread; shifting infinite ones would deepen blocks.
        Ordinal x = random_below(bound, rng, kWindowCoefficient);
        if (x.is_finite()) {
          const Ordinal shifted = add(x, Ordinal::finite(rng.below(count + 1)));
          if (shifted < bound) x = shifted;
        }
        picks.push_back(x);
      }
      members.insert(cofinal_extend(tower, FiniteOrdinalSet(std::move(picks))));
    }
  }
  if (members.size() < count) {
    throw DomainError("window-exhausted", "only " + std::to_string(members.size()) +
                                              " distinct members found below " + bound.to_string());
  }
  FamilyWindow window{bound, seed, count, {}};
  window.members.assign(members.begin(), members.end());
  return window;
}

}  // namespace cofinal
