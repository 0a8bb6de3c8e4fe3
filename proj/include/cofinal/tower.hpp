#pragma once

// The tower of well-orders <^alpha on {gamma : gamma < alpha}.
//
//   <^0        empty
//   <^(a+1)    a first, then <^a
//   <^eta      (eta limit) order type w: eta is covered by finite blocks
//              S_0 = {} c S_1 c S_2 c ..., each S_n an initial segment, and
//              S_(n+1) \ S_n is listed in increasing ordinal order.
//
// The blocks are built from the closure procedure:
//   S_(n+1) = close(a_n, S_n u {b_n}) u {a_n},
// with b_n = enum_below(eta, n) and a_n the least fund_seq(eta, m) strictly
// above max(S_n u {b_n}).

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "cofinal/error.hpp"
#include "cofinal/ordinal.hpp"
#include "cofinal/ordinal_set.hpp"

namespace cofinal {

struct TowerConfig {
  Ordinal cap = Ordinal::power(Ordinal::finite(3));
  // Upper limit on blocks built for one limit ordinal.
  std::uint64_t iteration_ceiling = 1ULL << 22;
  // Upper limit on the length of an explicitly materialized successor tail.
  std::uint64_t materialize_limit = 1ULL << 22;
};

class TowerState {
 public:
  explicit TowerState(TowerConfig config = {}) : config_(std::move(config)) {}

  TowerState(const TowerState&) = delete;
  TowerState& operator=(const TowerState&) = delete;

  const TowerConfig& config() const noexcept { return config_; }

  // Position of x in <^alpha.
  std::uint64_t rank(const Ordinal& alpha, const Ordinal& x) const {
    std::lock_guard lock(mutex_);
    check_cap(alpha);
    if (!(x < alpha)) throw OutOfRange(x.to_string() + " is not below " + alpha.to_string());
    return rank_impl(alpha, x);
  }

  // Element of rank k in <^alpha.
  Ordinal nth(const Ordinal& alpha, std::uint64_t k) const {
    std::lock_guard lock(mutex_);
    check_cap(alpha);
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    if (k < m) return add(lam, Ordinal::finite(m - 1 - k));
    if (lam.is_zero()) {
      throw OutOfRange("rank " + std::to_string(k) + " out of range for " + alpha.to_string());
    }
    return limit_nth(lam, k - m);
  }

  // alpha, beta |- gamma: beta, gamma < alpha and gamma precedes beta in <^alpha.
  bool turnstile(const Ordinal& alpha, const Ordinal& beta, const Ordinal& gamma) const {
    std::lock_guard lock(mutex_);
    check_cap(alpha);
    check_cap(beta);
    check_cap(gamma);
    if (!(beta < alpha) || !(gamma < alpha)) return false;
    return rank_impl(alpha, gamma) < rank_impl(alpha, beta);
  }

  // Finite B with A c B c alpha such that B u {alpha} is closed.
  FiniteOrdinalSet close(const Ordinal& alpha, const FiniteOrdinalSet& a) const {
    std::lock_guard lock(mutex_);
    check_cap(alpha);
    if (!a.empty() && !(a.max() < alpha)) {
      throw OutOfRange(a.max().to_string() + " is not below " + alpha.to_string());
    }
    return close_impl(alpha, a);
  }

  // The block S_n of the limit eta.
  FiniteOrdinalSet block(const Ordinal& eta, std::uint64_t n) const {
    std::lock_guard lock(mutex_);
    check_cap(eta);
    if (!eta.is_limit()) throw NotALimit(eta.to_string() + " is not a limit ordinal");
    LimitState& st = state_for(eta);
    while (st.block_end.size() <= n) extend(eta, st);
    return prefix(st, st.block_end[n]);
  }

  // Number of blocks built so far for eta (0 if untouched).
  std::size_t built_blocks(const Ordinal& eta) const {
    std::lock_guard lock(mutex_);
    auto it = limits_.find(eta);
    return it == limits_.end() ? 0 : it->second.block_end.size();
  }

 private:
  struct LimitState {
    std::vector<Ordinal> order;  // <^eta order, as far as built
    std::map<Ordinal, std::uint64_t> rank_of;
    std::vector<std::uint64_t> block_end{0};  // |S_n|
    FiniteOrdinalSet current;                 // S_(block_end.size()-1)
    std::uint64_t fund_cursor = 0;
  };

  void check_cap(const Ordinal& a) const {
    if (config_.cap < a) {
      throw CapExceeded(a.to_string() + " exceeds cap " + config_.cap.to_string());
    }
  }

  LimitState& state_for(const Ordinal& eta) const { return limits_[eta]; }

  std::uint64_t rank_impl(const Ordinal& alpha, const Ordinal& x) const {
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    if (lam <= x) return m - 1 - *difference(lam, x).as_finite();
    return m + limit_rank(lam, x);
  }

  std::uint64_t limit_rank(const Ordinal& eta, const Ordinal& x) const {
    LimitState& st = state_for(eta);
    ensure_member(eta, st, x);
    return st.rank_of.at(x);
  }

  Ordinal limit_nth(const Ordinal& eta, std::uint64_t k) const {
    LimitState& st = state_for(eta);
    while (st.order.size() <= k) extend(eta, st);
    return st.order[k];
  }

  void ensure_member(const Ordinal& eta, LimitState& st, const Ordinal& x) const {
    if (st.rank_of.count(x)) return;
    // x enters no later than block enum_index(eta, x) + 1.
    const std::uint64_t deadline = enum_index(eta, x) + 1;
    while (!st.rank_of.count(x)) {
      if (st.block_end.size() > deadline) {
        throw IterationCeiling(x.to_string() + " missing from the blocks of " + eta.to_string());
      }
      extend(eta, st);
    }
  }

  // Index of the first block containing x (x must already be placed).
  static std::uint64_t block_index(const LimitState& st, const Ordinal& x) {
    const std::uint64_t r = st.rank_of.at(x);
    return static_cast<std::uint64_t>(
        std::upper_bound(st.block_end.begin(), st.block_end.end(), r) - st.block_end.begin());
  }

  static FiniteOrdinalSet prefix(const LimitState& st, std::uint64_t length) {
    return FiniteOrdinalSet(std::vector<Ordinal>(st.order.begin(), st.order.begin() + static_cast<std::ptrdiff_t>(length)));
  }

  void extend(const Ordinal& eta, LimitState& st) const {
    const std::uint64_t n = st.block_end.size() - 1;
    if (n >= config_.iteration_ceiling) {
      throw IterationCeiling("block ceiling reached for " + eta.to_string());
    }
    FiniteOrdinalSet seed = st.current;
    seed.insert(enum_below(eta, n));
    Ordinal alpha_n = fund_seq(eta, st.fund_cursor);
    while (!(seed.max() < alpha_n)) alpha_n = fund_seq(eta, ++st.fund_cursor);
    FiniteOrdinalSet next = close_impl(alpha_n, seed);
    next.insert(alpha_n);
    const FiniteOrdinalSet fresh = set_difference(next, st.current);
    for (const Ordinal& x : fresh) {
      st.rank_of.emplace(x, st.order.size());
      st.order.push_back(x);
    }
    st.block_end.push_back(st.order.size());
    st.current = std::move(next);
  }

  FiniteOrdinalSet close_impl(const Ordinal& alpha, const FiniteOrdinalSet& a) const {
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    if (m > config_.materialize_limit) {
      throw GuardExceeded("successor tail of " + alpha.to_string() + " is too long to materialize");
    }
    std::vector<Ordinal> out;
    if (!lam.is_zero()) {
      const FiniteOrdinalSet lower = a.below(lam);
      if (!lower.empty()) {
        LimitState& st = state_for(lam);
        std::uint64_t n = 0;
        for (const Ordinal& x : lower) {
          ensure_member(lam, st, x);
          n = std::max(n, block_index(st, x));
        }
        out.assign(st.order.begin(), st.order.begin() + static_cast<std::ptrdiff_t>(st.block_end[n]));
      }
    }
    for (std::uint64_t j = 0; j < m; ++j) out.push_back(add(lam, Ordinal::finite(j)));
    return FiniteOrdinalSet(std::move(out));
  }

  TowerConfig config_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<Ordinal, LimitState> limits_;
};

}  // namespace cofinal
