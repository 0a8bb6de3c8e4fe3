#pragma once

// Finite set systems over an explicit ground list, with subsets encoded as
// bitmasks (bit i <-> ground[i]). Traces, shattering, exact VC dimension, a
// greedy shattered-set hunter, and the Sauer-Shelah count check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cofinal/error.hpp"

namespace cofinal {

using Mask = std::uint64_t;

template <class Point>
class SetSystem {
 public:
  static constexpr std::size_t kMaxGround = 64;

  SetSystem() = default;
  SetSystem(std::vector<Point> ground, std::vector<Mask> sets) : ground_(std::move(ground)), sets_(std::move(sets)) {
    if (ground_.size() > kMaxGround) {
      throw GuardExceeded("ground of " + std::to_string(ground_.size()) + " points exceeds " +
                          std::to_string(kMaxGround));
    }
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (ground_[i] == ground_[j]) throw DomainError("duplicate-point", "ground points must be distinct");
      }
    }
    for (Mask s : sets_) check_subset(s);
  }

  const std::vector<Point>& ground() const noexcept { return ground_; }
  const std::vector<Mask>& sets() const noexcept { return sets_; }
  Mask full() const noexcept { return ground_.size() == 64 ? ~Mask{0} : (Mask{1} << ground_.size()) - 1; }

  void add_set(Mask s) {
    check_subset(s);
    sets_.push_back(s);
  }

  std::optional<std::size_t> index_of(const Point& p) const {
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (ground_[i] == p) return i;
    }
    return std::nullopt;
  }

  template <class Range>
  Mask mask_of(const Range& points) const {
    Mask m = 0;
    for (const auto& p : points) {
      auto i = index_of(p);
      if (!i) throw DomainError("not-in-ground", "point is not in the ground set");
      m |= Mask{1} << *i;
    }
    return m;
  }

  void check_subset(Mask a) const {
    if ((a & ~full()) != 0) throw DomainError("not-in-ground", "subset is not contained in the ground");
  }

 private:
  std::vector<Point> ground_;
  std::vector<Mask> sets_;
};

// {F n A : F in sys}, sorted and duplicate-free.
template <class Point>
std::vector<Mask> trace(const SetSystem<Point>& sys, Mask a) {
  sys.check_subset(a);
  std::vector<Mask> out;
  out.reserve(sys.sets().size());
  for (Mask s : sys.sets()) out.push_back(s & a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline constexpr int kShatterGuard = 25;

template <class Point>
bool is_shattered(const SetSystem<Point>& sys, Mask a) {
  const int k = std::popcount(a);
  if (k > kShatterGuard) {
    throw GuardExceeded("shattering check on " + std::to_string(k) + " points exceeds guard " +
                        std::to_string(kShatterGuard));
  }
  if (sys.sets().size() < (std::size_t{1} << k)) return false;
  return trace(sys, a).size() == (std::size_t{1} << k);
}

namespace detail {

// Shattered k-subsets from the shattered (k-1)-subsets; a set can only be
// shattered when every subset one smaller is.
template <class Point>
std::vector<Mask> next_shattered_level(const SetSystem<Point>& sys, const std::vector<Mask>& level) {
  const std::set<Mask> previous(level.begin(), level.end());
  std::vector<Mask> out;
  const std::size_t n = sys.ground().size();
  for (Mask base : level) {
    const int top = base == 0 ? -1 : 63 - std::countl_zero(base);
    for (std::size_t i = static_cast<std::size_t>(top + 1); i < n; ++i) {
      const Mask candidate = base | (Mask{1} << i);
      bool faces = true;
      for (Mask rest = base; rest && faces; rest &= rest - 1) {
        faces = previous.count(candidate & ~(rest & -rest)) > 0;
      }
      if (faces && is_shattered(sys, candidate)) out.push_back(candidate);
    }
  }
  return out;
}

}  // namespace detail

inline constexpr std::size_t kDefaultVcGroundLimit = 16;

// Largest k with some shattered k-subset (0 when only the empty set is, and
// also for a system with no sets at all).
template <class Point>
std::size_t vc_dim(const SetSystem<Point>& sys, std::size_t ground_limit = kDefaultVcGroundLimit) {
  if (sys.ground().size() > ground_limit) {
    throw GuardExceeded("exact VC search limited to " + std::to_string(ground_limit) + " ground points");
  }
  if (sys.sets().empty()) return 0;
  std::vector<Mask> level{0};
  std::size_t dim = 0;
  for (;;) {
    level = detail::next_shattered_level(sys, level);
    if (level.empty()) return dim;
    ++dim;
  }
}

struct HuntResult {
  std::optional<Mask> found;
  bool exhaustive = false;  // when true and found is empty, no k-subset is shattered
};

enum class HuntMode { Greedy, Exhaustive };

// Greedy extension in ground order: for the chosen set C every pattern S c C
// keeps its list of witnesses (members with trace S on C); a point c is
// admissible when each list has a member containing c and one omitting it.
// If the greedy pass stalls and mode is Exhaustive, fall back to a level-wise
// search over all subsets.
template <class Point>
HuntResult hunt_shattered(const SetSystem<Point>& sys, std::size_t k, HuntMode mode = HuntMode::Exhaustive,
                          std::size_t ground_limit = kDefaultVcGroundLimit) {
  if (k > static_cast<std::size_t>(kShatterGuard)) {
    throw GuardExceeded("hunt size " + std::to_string(k) + " exceeds guard");
  }
  const std::size_t n = sys.ground().size();
  if (k == 0) return {sys.sets().empty() ? std::nullopt : std::optional<Mask>(0), true};

  Mask chosen = 0;
  std::vector<std::vector<std::size_t>> witnesses(1);
  for (std::size_t f = 0; f < sys.sets().size(); ++f) witnesses[0].push_back(f);
  std::vector<std::size_t> chosen_points;
  for (std::size_t c = 0; c < n && chosen_points.size() < k; ++c) {
    const Mask bit = Mask{1} << c;
    bool admissible = true;
    for (const auto& list : witnesses) {
      bool with = false;
      bool without = false;
      for (std::size_t f : list) {
        ((sys.sets()[f] & bit) ? with : without) = true;
        if (with && without) break;
      }
      if (!(with && without)) {
        admissible = false;
        break;
      }
    }
    if (!admissible) continue;
    std::vector<std::vector<std::size_t>> split;
    split.reserve(witnesses.size() * 2);
    for (const auto& list : witnesses) {
      std::vector<std::size_t> in;
      std::vector<std::size_t> out;
      for (std::size_t f : list) ((sys.sets()[f] & bit) ? in : out).push_back(f);
      split.push_back(std::move(out));
      split.push_back(std::move(in));
    }
    witnesses = std::move(split);
    chosen |= bit;
    chosen_points.push_back(c);
  }
  if (chosen_points.size() == k) return {chosen, false};
  if (mode == HuntMode::Greedy || n > ground_limit) return {std::nullopt, false};

  std::vector<Mask> level{0};
  for (std::size_t size = 1; size <= k; ++size) {
    level = detail::next_shattered_level(sys, level);
    if (level.empty()) return {std::nullopt, true};
  }
  return {level.front(), true};
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t sauer_bound(std::uint64_t n, std::uint64_t d) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= d && i <= n; ++i) total += binomial(n, i);
  return total;
}

struct SauerReport {
  std::uint64_t traces = 0;
  std::uint64_t bound = 0;
  bool holds = false;
};

// Distinct traces on the whole ground versus sum_{i<=d} C(n, i).
template <class Point>
SauerReport sauer_check(const SetSystem<Point>& sys, std::uint64_t d) {
  SauerReport r;
  r.traces = trace(sys, sys.full()).size();
  r.bound = sauer_bound(sys.ground().size(), d);
  r.holds = r.traces <= r.bound;
  return r;
}

}  // namespace cofinal
