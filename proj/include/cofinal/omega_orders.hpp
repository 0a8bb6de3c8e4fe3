#pragma once

// Almost-agreeing w-orders <^alpha on every alpha in [w, cap].
//
//   <^w         canonical order on w
//   <^(b+1)     b first, then <^b
//   <^eta       eta > w limit; a_0 = w < a_1 < ... cofinal in eta. The chain
//               D_0 = <^w, D_(i+1) = adjust(D_i into <^(a_(i+1))) makes each
//               D_(i+1) extend D_i; <* is their union. Blocks
//                 b_i = {x < a_i : x <* i} minus the earlier blocks,
//               each sorted by <*, concatenated.
//
// Any two orders differ only on a finite set, and exception_set() produces a
// finite superset of that set by composing the pieces of the construction.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "cofinal/error.hpp"
#include "cofinal/ordinal.hpp"
#include "cofinal/ordinal_set.hpp"
#include "cofinal/random.hpp"
#include "cofinal/tower.hpp"

namespace cofinal {

// An w-order (or a finite order) given by its rank function and inverse.
template <class P>
struct OrderFns {
  std::function<std::uint64_t(const P&)> rank;
  std::function<P(std::uint64_t)> nth;
  std::function<bool(const P&)> contains;
};

// Finite order listed from first to last.
template <class P>
OrderFns<P> listed_order(std::vector<P> items) {
  auto shared = std::make_shared<const std::vector<P>>(std::move(items));
  OrderFns<P> fns;
  fns.rank = [shared](const P& x) -> std::uint64_t {
    auto it = std::find(shared->begin(), shared->end(), x);
    if (it == shared->end()) throw OutOfRange("point not in the listed order");
    return static_cast<std::uint64_t>(it - shared->begin());
  };
  fns.nth = [shared](std::uint64_t k) -> P {
    if (k >= shared->size()) throw OutOfRange("rank " + std::to_string(k) + " past the end of a listed order");
    return (*shared)[k];
  };
  fns.contains = [shared](const P& x) { return std::find(shared->begin(), shared->end(), x) != shared->end(); };
  return fns;
}

// The order on Y that agrees with `outer` off `points` and restricts to
// `inner` on X. Points are removed largest first and reinserted smallest
// first; each x goes immediately after the inner-largest z below it among the
// points of X already present (or to the very front when there is none).
//
// Everything past the materialized head keeps its outer order, shifted by the
// number of inserted points.
template <class P>
class AdjustedOrder {
 public:
  AdjustedOrder(OrderFns<P> inner, OrderFns<P> outer, std::vector<P> points)
      : outer_(std::move(outer)), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    for (const P& x : points_) {
      if (!inner.contains(x)) throw DomainError("bad-certificate", "exception point outside the inner order");
      outer_point_ranks_.push_back(outer_.rank(x));
    }
    std::sort(outer_point_ranks_.begin(), outer_point_ranks_.end());

    const std::size_t r = points_.size();
    std::vector<std::optional<P>> anchors(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t rx = inner.rank(points_[k]);
      for (std::uint64_t j = rx; j-- > 0;) {
        P z = inner.nth(j);
        if (!std::binary_search(points_.begin() + static_cast<std::ptrdiff_t>(k) + 1, points_.end(), z)) {
          anchors[k] = std::move(z);
          break;
        }
      }
    }
    std::uint64_t base_length = 0;
    for (const auto& a : anchors) {
      if (a && !is_point(*a)) base_length = std::max(base_length, base_rank(*a) + 1);
    }
    for (std::uint64_t b = 0; b < base_length; ++b) head_.push_back(base_nth(b));
    for (std::size_t k = 0; k < r; ++k) {
      auto at = head_.begin();
      if (anchors[k]) at = std::find(head_.begin(), head_.end(), *anchors[k]) + 1;
      head_.insert(at, points_[k]);
    }
    for (std::size_t i = 0; i < head_.size(); ++i) head_rank_.emplace(head_[i], i);
  }

  std::uint64_t rank(const P& y) const {
    if (auto it = head_rank_.find(y); it != head_rank_.end()) return it->second;
    return base_rank(y) + points_.size();
  }

  P nth(std::uint64_t k) const {
    if (k < head_.size()) return head_[k];
    return base_nth(k - points_.size());
  }

  bool contains(const P& y) const { return outer_.contains(y); }
  const std::vector<P>& points() const noexcept { return points_; }
  std::size_t head_size() const noexcept { return head_.size(); }

 private:
  bool is_point(const P& y) const { return std::binary_search(points_.begin(), points_.end(), y); }

  // Rank of y in the outer order with the points deleted.
  std::uint64_t base_rank(const P& y) const {
    const std::uint64_t r = outer_.rank(y);
    const auto below = std::lower_bound(outer_point_ranks_.begin(), outer_point_ranks_.end(), r);
    return r - static_cast<std::uint64_t>(below - outer_point_ranks_.begin());
  }

  P base_nth(std::uint64_t b) const {
    std::uint64_t skipped = 0;
    for (;;) {
      const auto upto = std::upper_bound(outer_point_ranks_.begin(), outer_point_ranks_.end(), b + skipped);
      const auto c = static_cast<std::uint64_t>(upto - outer_point_ranks_.begin());
      if (c == skipped) break;
      skipped = c;
    }
    return outer_.nth(b + skipped);
  }

  OrderFns<P> outer_;
  std::vector<P> points_;
  std::vector<std::uint64_t> outer_point_ranks_;
  std::vector<P> head_;
  std::map<P, std::uint64_t> head_rank_;
};

template <class P>
AdjustedOrder<P> adjust_one(OrderFns<P> inner, OrderFns<P> outer, std::vector<P> points) {
  return AdjustedOrder<P>(std::move(inner), std::move(outer), std::move(points));
}

// Orders at lower and upper agree on every pair outside `points`.
struct ExceptionCert {
  Ordinal lower;
  Ordinal upper;
  FiniteOrdinalSet points;
};

struct AgreementCheck {
  bool ok = true;
  std::uint64_t checked = 0;
  std::optional<std::pair<Ordinal, Ordinal>> witness;  // first disagreeing pair
};

enum class Provenance { Base, Prepend, Limit };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Base: return "BASE";
    case Provenance::Prepend: return "PREPEND";
    case Provenance::Limit: return "LIMIT";
  }
  return "?";
}

class AlmostAgreeTower {
 public:
  explicit AlmostAgreeTower(TowerConfig config = {}) : config_(std::move(config)) {}

  AlmostAgreeTower(const AlmostAgreeTower&) = delete;
  AlmostAgreeTower& operator=(const AlmostAgreeTower&) = delete;

  const TowerConfig& config() const noexcept { return config_; }

  std::uint64_t rank(const Ordinal& alpha, const Ordinal& x) const {
    std::lock_guard lock(mutex_);
    check_alpha(alpha);
    if (!(x < alpha)) throw OutOfRange(x.to_string() + " is not below " + alpha.to_string());
    return rank_impl(alpha, x);
  }

  Ordinal nth(const Ordinal& alpha, std::uint64_t k) const {
    std::lock_guard lock(mutex_);
    check_alpha(alpha);
    return nth_impl(alpha, k);
  }

  Provenance provenance(const Ordinal& alpha) const {
    check_alpha(alpha);
    if (alpha == Ordinal::omega()) return Provenance::Base;
    return alpha.is_limit() ? Provenance::Limit : Provenance::Prepend;
  }

  ExceptionCert exception_set(const Ordinal& beta, const Ordinal& alpha) const {
    std::lock_guard lock(mutex_);
    check_alpha(alpha);
    check_alpha(beta);
    if (!(beta < alpha)) throw DomainError("bad-pair", "need beta < alpha");
    return ExceptionCert{beta, alpha, exception_impl(beta, alpha)};
  }

  static constexpr std::uint64_t kFrontSample = 16;
  static constexpr std::uint64_t kSampleCoefficient = 24;

  // Compares the two orders on `samples` seeded pairs x, y < lower outside the
  // points. Half the draws come from the front of <^lower (the first
  // |points| + kFrontSample elements), where disagreements live; the rest are
  // random ordinals with coefficients up to kSampleCoefficient. Gives up
  // after 64 draws per requested pair; `checked` says how many were compared.
  AgreementCheck verify_exception(const ExceptionCert& cert, std::uint64_t samples, std::uint64_t seed) const {
    std::lock_guard lock(mutex_);
    check_alpha(cert.upper);
    check_alpha(cert.lower);
    if (!(cert.lower < cert.upper)) throw DomainError("bad-pair", "need lower < upper");
    Lcg64 rng(seed);
    const std::uint64_t front = cert.points.size() + kFrontSample;
    auto draw = [&] {
      return rng.coin() ? nth_impl(cert.lower, rng.below(front)) : random_below(cert.lower, rng, kSampleCoefficient);
    };
    AgreementCheck out;
    for (std::uint64_t attempt = 0; attempt < 64 * samples && out.checked < samples; ++attempt) {
      Ordinal x = draw();
      Ordinal y = draw();
      if (x == y || cert.points.contains(x) || cert.points.contains(y)) continue;
      ++out.checked;
      const bool lo = rank_impl(cert.lower, x) < rank_impl(cert.lower, y);
      const bool hi = rank_impl(cert.upper, x) < rank_impl(cert.upper, y);
      if (lo != hi) {
        out.ok = false;
        out.witness = std::make_pair(std::move(x), std::move(y));
        return out;
      }
    }
    return out;
  }

  // <^alpha as a standalone handle; every call takes the lock.
  OrderFns<Ordinal> order(const Ordinal& alpha) const {
    check_alpha(alpha);
    return {[this, alpha](const Ordinal& x) { return rank(alpha, x); },
            [this, alpha](std::uint64_t k) { return nth(alpha, k); },
            [alpha](const Ordinal& x) { return x < alpha; }};
  }

  // a_0 .. a_(n-1) for the limit eta > w.
  std::vector<Ordinal> chain(const Ordinal& eta, std::size_t n) const {
    std::lock_guard lock(mutex_);
    LimitNode& node = limit_node(eta);
    ensure_alphas(node, eta, n);
    return std::vector<Ordinal>(node.alphas.begin(), node.alphas.begin() + static_cast<std::ptrdiff_t>(n));
  }

  // Rank of x in D_i (the i-th adjusted order of eta's chain, on a_i).
  std::uint64_t chain_rank(const Ordinal& eta, std::size_t i, const Ordinal& x) const {
    std::lock_guard lock(mutex_);
    LimitNode& node = limit_node(eta);
    ensure_alphas(node, eta, i + 1);
    if (!(x < node.alphas[i])) throw OutOfRange(x.to_string() + " is not below " + node.alphas[i].to_string());
    return dot_rank(node, eta, i, x);
  }

  // The block b_i of eta, in <* order.
  std::vector<Ordinal> limit_block(const Ordinal& eta, std::size_t i) const {
    std::lock_guard lock(mutex_);
    LimitNode& node = limit_node(eta);
    ensure_blocks(node, eta, i + 1);
    return std::vector<Ordinal>(node.order.begin() + static_cast<std::ptrdiff_t>(node.block_end[i]),
                                node.order.begin() + static_cast<std::ptrdiff_t>(node.block_end[i + 1]));
  }

 private:
  struct LimitNode {
    std::vector<Ordinal> alphas;
    std::uint64_t fund_cursor = 0;
    std::vector<std::unique_ptr<AdjustedOrder<Ordinal>>> dots;  // dots[i-1] is D_i
    std::vector<FiniteOrdinalSet> processed;                    // points of D_i vs <^(a_i)
    std::vector<Ordinal> order;
    std::map<Ordinal, std::uint64_t> rank_of;
    std::vector<std::uint64_t> block_end{0};
  };

  void check_alpha(const Ordinal& alpha) const {
    if (config_.cap < alpha) throw CapExceeded(alpha.to_string() + " exceeds cap " + config_.cap.to_string());
    if (alpha < Ordinal::omega()) {
      throw DomainError("below-omega", "these orders start at w, got " + alpha.to_string());
    }
  }

  LimitNode& limit_node(const Ordinal& eta) const {
    check_alpha(eta);
    if (!eta.is_limit() || eta == Ordinal::omega()) {
      throw NotALimit(eta.to_string() + " is not a limit above w");
    }
    return limits_[eta];
  }

  std::uint64_t rank_impl(const Ordinal& alpha, const Ordinal& x) const {
    if (alpha == Ordinal::omega()) return *x.as_finite();
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    if (m > 0) {
      if (lam <= x) return m - 1 - *difference(lam, x).as_finite();
      return m + rank_impl(lam, x);
    }
    return limit_rank(limits_[alpha], alpha, x);
  }

  Ordinal nth_impl(const Ordinal& alpha, std::uint64_t k) const {
    if (alpha == Ordinal::omega()) return Ordinal::finite(k);
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    if (m > 0) return k < m ? add(lam, Ordinal::finite(m - 1 - k)) : nth_impl(lam, k - m);
    return limit_nth(limits_[alpha], alpha, k);
  }

  std::uint64_t limit_rank(LimitNode& node, const Ordinal& eta, const Ordinal& x) const {
    for (std::size_t blocks = node.block_end.size() - 1;;) {
      if (auto it = node.rank_of.find(x); it != node.rank_of.end()) return it->second;
      ensure_blocks(node, eta, ++blocks);
    }
  }

  Ordinal limit_nth(LimitNode& node, const Ordinal& eta, std::uint64_t k) const {
    for (std::size_t blocks = node.block_end.size() - 1; node.order.size() <= k;) ensure_blocks(node, eta, ++blocks);
    return node.order[k];
  }

  void ensure_alphas(LimitNode& node, const Ordinal& eta, std::size_t n) const {
    if (node.alphas.empty()) node.alphas.push_back(Ordinal::omega());
    while (node.alphas.size() < n) {
      Ordinal next = fund_seq(eta, node.fund_cursor++);
      if (node.alphas.back() < next) node.alphas.push_back(std::move(next));
    }
  }

  // <^alpha as an order handle; the limit node below alpha is resolved once.
  OrderFns<Ordinal> aa_fns(const Ordinal& alpha) const {
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    auto contains = [alpha](const Ordinal& x) { return x < alpha; };
    if (lam == Ordinal::omega()) {
      return {[this, alpha](const Ordinal& x) { return rank_impl(alpha, x); },
              [this, alpha](std::uint64_t k) { return nth_impl(alpha, k); }, contains};
    }
    LimitNode* node = &limits_[lam];
    return {[this, node, lam, m](const Ordinal& x) -> std::uint64_t {
              if (lam <= x) return m - 1 - *difference(lam, x).as_finite();
              return m + limit_rank(*node, lam, x);
            },
            [this, node, lam, m](std::uint64_t k) {
              return k < m ? add(lam, Ordinal::finite(m - 1 - k)) : limit_nth(*node, lam, k - m);
            },
            contains};
  }

  OrderFns<Ordinal> dot_fns(LimitNode& node, const Ordinal& eta, std::size_t i) const {
    if (i == 0) return aa_fns(Ordinal::omega());
    ensure_dots(node, eta, i);
    const AdjustedOrder<Ordinal>* d = node.dots[i - 1].get();
    return {[d](const Ordinal& x) { return d->rank(x); }, [d](std::uint64_t k) { return d->nth(k); },
            [d](const Ordinal& x) { return d->contains(x); }};
  }

  std::uint64_t dot_rank(LimitNode& node, const Ordinal& eta, std::size_t i, const Ordinal& x) const {
    if (i == 0) return *x.as_finite();
    if (node.dots.size() < i) ensure_dots(node, eta, i);
    return node.dots[i - 1]->rank(x);
  }

  Ordinal dot_nth(LimitNode& node, const Ordinal& eta, std::size_t i, std::uint64_t k) const {
    if (i == 0) return Ordinal::finite(k);
    if (node.dots.size() < i) ensure_dots(node, eta, i);
    return node.dots[i - 1]->nth(k);
  }

  void ensure_dots(LimitNode& node, const Ordinal& eta, std::size_t i) const {
    ensure_alphas(node, eta, i + 1);
    if (node.processed.empty()) node.processed.emplace_back();
    while (node.dots.size() < i) {
      const std::size_t j = node.dots.size() + 1;
      FiniteOrdinalSet points =
          set_union(node.processed[j - 1], exception_impl(node.alphas[j - 1], node.alphas[j]));
      auto inner = dot_fns(node, eta, j - 1);
      auto dot = std::make_unique<AdjustedOrder<Ordinal>>(inner, aa_fns(node.alphas[j]), points.elements());
      check_extends(*dot, inner, node.alphas[j]);
      node.dots.push_back(std::move(dot));
      node.processed.push_back(std::move(points));
    }
  }

  // D_j must restrict to D_(j-1); an unsound certificate shows up as a
  // disagreement near the front of the inner order.
  static void check_extends(const AdjustedOrder<Ordinal>& dot, const OrderFns<Ordinal>& inner, const Ordinal& at) {
    const std::uint64_t probe = std::max<std::uint64_t>(16, dot.head_size() + 8);
    std::uint64_t last = 0;
    Ordinal prev;
    for (std::uint64_t k = 0; k < probe; ++k) {
      Ordinal x = inner.nth(k);
      const std::uint64_t r = dot.rank(x);
      if (k > 0 && r <= last) {
        throw CertificateViolation("adjusted order on " + at.to_string() + " puts " + x.to_string() +
                                   " before " + prev.to_string());
      }
      last = r;
      prev = std::move(x);
    }
  }

  void ensure_blocks(LimitNode& node, const Ordinal& eta, std::size_t count) const {
    while (node.block_end.size() <= count) {
      const std::size_t i = node.block_end.size() - 1;
      if (i >= config_.iteration_ceiling) throw IterationCeiling("block ceiling reached for " + eta.to_string());
      const std::uint64_t top = dot_rank(node, eta, i, Ordinal::finite(i));
      for (std::uint64_t j = 0; j < top; ++j) {
        Ordinal y = dot_nth(node, eta, i, j);
        if (node.rank_of.emplace(y, node.order.size()).second) node.order.push_back(std::move(y));
      }
      node.block_end.push_back(node.order.size());
    }
  }

  // Finite X0 with <^beta and <^alpha|beta agreeing off X0; w <= beta < alpha.
  FiniteOrdinalSet exception_impl(const Ordinal& beta, const Ordinal& alpha) const {
    if (beta == alpha) return {};
    const std::uint64_t m = alpha.finite_part();
    const Ordinal lam = alpha.limit_part();
    if (m > 0) return beta < lam ? exception_impl(beta, lam) : FiniteOrdinalSet{};
    LimitNode& node = limits_[alpha];
    std::size_t i = 0;
    for (;; ++i) {
      ensure_alphas(node, alpha, i + 1);
      if (beta <= node.alphas[i]) break;
    }
    ensure_dots(node, alpha, i);
    ensure_blocks(node, alpha, i + 1);
    FiniteOrdinalSet out = exception_impl(beta, node.alphas[i]);
    for (const Ordinal& x : node.processed[i]) {
      if (x < beta) out.insert(x);
    }
    for (std::uint64_t k = 0; k < node.block_end[i + 1]; ++k) {
      if (node.order[k] < beta) out.insert(node.order[k]);
    }
    return out;
  }

  TowerConfig config_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<Ordinal, LimitNode> limits_;
};

}  // namespace cofinal
