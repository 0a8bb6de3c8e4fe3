#pragma once

// Test-only reference for the tower, written straight from the recursive
// definitions (no lambda+m shortcuts, no shared state with the library):
//
//   close(0, A)      = {}
//   close(d+1, A)    = close(d, A - {d}) u {d}
//   close(eta, A)    = first block S_n containing A
//   S_0 = {},  S_(n+1) = close(a_n, S_n u {b_n}) u {a_n}
//   rank in <^(d+1): d is first, then <^d
//   rank in <^eta:   blocks in turn, each block's new elements ascending
//
// Only the ordinal-core primitives (fund_seq, enum_below) are shared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "cofinal/ordinal.hpp"
#include "cofinal/ordinal_set.hpp"

namespace oracle {

using cofinal::Ordinal;
using OrdSet = std::set<Ordinal>;

class NaiveTower {
 public:
  std::uint64_t rank(const Ordinal& alpha, const Ordinal& x) {
    if (!(x < alpha)) throw std::out_of_range("rank: x not below alpha");
    if (alpha.is_successor()) {
      const Ordinal d = alpha.predecessor();
      return x == d ? 0 : 1 + rank(d, x);
    }
    Limit& lim = limits_[alpha];
    while (!lim.rank.count(x)) grow(alpha, lim);
    return lim.rank.at(x);
  }

  // The first k elements of <^alpha (fewer if alpha is finite and small).
  std::vector<Ordinal> prefix(const Ordinal& alpha, std::uint64_t k) {
    std::vector<Ordinal> out;
    Ordinal a = alpha;
    while (out.size() < k && a.is_successor()) {
      a = a.predecessor();
      out.push_back(a);
    }
    if (out.size() == k || a.is_zero()) return out;
    Limit& lim = limits_[a];
    while (lim.order.size() < k - out.size()) grow(a, lim);
    out.insert(out.end(), lim.order.begin(), lim.order.begin() + static_cast<std::ptrdiff_t>(k - out.size()));
    return out;
  }

  OrdSet close(const Ordinal& alpha, OrdSet a) {
    if (alpha.is_zero()) return {};
    if (alpha.is_successor()) {
      const Ordinal d = alpha.predecessor();
      a.erase(d);
      OrdSet out = close(d, std::move(a));
      out.insert(d);
      return out;
    }
    Limit& lim = limits_[alpha];
    for (std::size_t n = 0;; ++n) {
      while (lim.blocks.size() <= n) grow(alpha, lim);
      const OrdSet& s = lim.blocks[n];
      if (std::includes(s.begin(), s.end(), a.begin(), a.end())) return s;
      if (n > kCeiling) throw std::runtime_error("naive close: ceiling");
    }
  }

  OrdSet block(const Ordinal& eta, std::size_t n) {
    Limit& lim = limits_[eta];
    while (lim.blocks.size() <= n) grow(eta, lim);
    return lim.blocks[n];
  }

 private:
  static constexpr std::size_t kCeiling = 200000;

  struct Limit {
    std::vector<OrdSet> blocks{OrdSet{}};
    std::vector<Ordinal> order;
    std::map<Ordinal, std::uint64_t> rank;
  };

  void grow(const Ordinal& eta, Limit& lim) {
    const std::size_t n = lim.blocks.size() - 1;
    if (n > kCeiling) throw std::runtime_error("naive blocks: ceiling");
    OrdSet seed = lim.blocks.back();
    seed.insert(cofinal::enum_below(eta, n));
    const Ordinal top = *seed.rbegin();
    Ordinal a;
    for (std::uint64_t m = 0;; ++m) {
      a = cofinal::fund_seq(eta, m);
      if (top < a) break;
    }
    OrdSet next = close(a, seed);
    next.insert(a);
    // close() may have grown lim.blocks through recursion on other limits only.
    for (const auto& x : next) {
      if (!lim.blocks.back().count(x)) {
        lim.rank.emplace(x, lim.order.size());
        lim.order.push_back(x);
      }
    }
    lim.blocks.push_back(std::move(next));
  }

  std::map<Ordinal, Limit> limits_;
};

// Closedness by triples: for every alpha in A, each beta in A below alpha, and
// each gamma preceding beta in <^alpha, gamma must be in A. The gammas of all
// betas at one alpha form the prefix of <^alpha up to the largest beta rank.
inline bool closed_by_triples(NaiveTower& t, const cofinal::FiniteOrdinalSet& a) {
  for (const auto& alpha : a) {
    std::uint64_t deepest = 0;
    for (const auto& beta : a) {
      if (beta < alpha) deepest = std::max(deepest, t.rank(alpha, beta));
    }
    for (const auto& gamma : t.prefix(alpha, deepest)) {
      if (!a.contains(gamma)) return false;
    }
  }
  return true;
}

// Distinct traces, by direct set intersection.
inline std::set<std::set<std::size_t>> brute_trace(const std::vector<std::set<std::size_t>>& sets,
                                                   const std::set<std::size_t>& a) {
  std::set<std::set<std::size_t>> out;
  for (const auto& s : sets) {
    std::set<std::size_t> t;
    std::set_intersection(s.begin(), s.end(), a.begin(), a.end(), std::inserter(t, t.end()));
    out.insert(std::move(t));
  }
  return out;
}

}  // namespace oracle
