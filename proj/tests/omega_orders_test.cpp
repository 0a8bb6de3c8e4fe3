#include <gtest/gtest.h>

#include "cofinal/omega_orders.hpp"
#include "cofinal/random.hpp"

using namespace cofinal;

namespace {

Ordinal W(const char* s) { return parse_ordinal(s); }

// Exhaustive agreement of <^lower and <^upper on the first `n` elements of
// <^lower, skipping the certificate points. Returns the first bad pair.
std::optional<std::pair<Ordinal, Ordinal>> disagreement(const AlmostAgreeTower& aa, const ExceptionCert& c,
                                                        std::uint64_t n) {
  std::vector<Ordinal> xs;
  for (std::uint64_t k = 0; k < n; ++k) {
    Ordinal x = aa.nth(c.lower, k);
    if (!c.points.contains(x)) xs.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const bool lo = aa.rank(c.lower, xs[i]) < aa.rank(c.lower, xs[j]);
      const bool hi = aa.rank(c.upper, xs[i]) < aa.rank(c.upper, xs[j]);
      if (lo != hi) return std::make_pair(xs[i], xs[j]);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Adjust, EmptyCertificateLeavesOuterUnchanged) {
  AlmostAgreeTower aa;
  const auto adjusted = adjust_one(aa.order(W("w")), aa.order(W("w*2")), {});
  Lcg64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const Ordinal y = random_below(W("w*2"), rng, 30);
    EXPECT_EQ(adjusted.rank(y), aa.rank(W("w*2"), y));
  }
  for (std::uint64_t k = 0; k < 50; ++k) EXPECT_EQ(adjusted.nth(k), aa.nth(W("w*2"), k));
}

TEST(Adjust, HandExample) {
  const auto inner = listed_order<int>({1, 0});
  const auto outer = listed_order<int>({0, 1, 2});
  const auto adjusted = adjust_one(inner, outer, {0});
  EXPECT_EQ(adjusted.nth(0), 1);
  EXPECT_EQ(adjusted.nth(1), 0);
  EXPECT_EQ(adjusted.nth(2), 2);
  EXPECT_EQ(adjusted.rank(2), 2u);
}

TEST(Adjust, RejectsPointsOutsideInner) {
  const auto inner = listed_order<int>({1, 0});
  const auto outer = listed_order<int>({0, 1, 2});
  try {
    adjust_one(inner, outer, {2});
    FAIL() << "expected bad-certificate";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), "bad-certificate");
  }
}

// Random finite instances: inner is outer|X with the points of X moved
// around; the adjusted order must restrict to inner on X and keep outer's
// order on everything else.
TEST(Adjust, RestrictionLawOnFiniteOrders) {
  Lcg64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.between(2, 12));
    std::vector<int> outer(n);
    for (int i = 0; i < n; ++i) outer[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(outer[i], outer[rng.below(i + 1)]);
    std::vector<int> x_list;  // X in outer order
    std::set<int> x_set;
    for (int v : outer) {
      if (rng.coin()) {
        x_list.push_back(v);
        x_set.insert(v);
      }
    }
    if (x_list.empty()) continue;
    std::vector<int> points;
    std::vector<int> inner;
    for (int v : x_list) {
      if (rng.below(3) == 0) {
        points.push_back(v);
      } else {
        inner.push_back(v);
      }
    }
    for (int p : points) inner.insert(inner.begin() + static_cast<std::ptrdiff_t>(rng.below(inner.size() + 1)), p);
    const auto adjusted = adjust_one(listed_order(inner), listed_order(outer), points);
    std::vector<int> result;
    for (int k = 0; k < n; ++k) result.push_back(adjusted.nth(static_cast<std::uint64_t>(k)));
    for (int k = 0; k < n; ++k) ASSERT_EQ(adjusted.rank(result[k]), static_cast<std::uint64_t>(k));
    std::vector<int> sorted = result;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n; ++k) ASSERT_EQ(sorted[k], k);
    std::vector<int> on_x;
    for (int v : result) {
      if (x_set.count(v)) on_x.push_back(v);
    }
    ASSERT_EQ(on_x, inner);
    std::vector<int> off_result;
    std::vector<int> off_outer;
    const std::set<int> pset(points.begin(), points.end());
    for (int v : result) {
      if (!pset.count(v)) off_result.push_back(v);
    }
    for (int v : outer) {
      if (!pset.count(v)) off_outer.push_back(v);
    }
    ASSERT_EQ(off_result, off_outer);
  }
}

TEST(AaExamples, BaseAndPrepend) {
  AlmostAgreeTower aa;
  for (std::uint64_t n = 0; n < 40; ++n) EXPECT_EQ(aa.rank(W("w"), Ordinal::finite(n)), n);
  EXPECT_EQ(aa.rank(W("w+1"), W("w")), 0u);
  EXPECT_EQ(aa.nth(W("w"), 7), W("7"));
  EXPECT_EQ(aa.nth(W("w+1"), 0), W("w"));
  EXPECT_EQ(aa.provenance(W("w")), Provenance::Base);
  EXPECT_EQ(aa.provenance(W("w+4")), Provenance::Prepend);
  EXPECT_EQ(aa.provenance(W("w^2")), Provenance::Limit);
}

TEST(AaExamples, Exceptions) {
  AlmostAgreeTower aa;
  EXPECT_TRUE(aa.exception_set(W("w"), W("w+1")).points.empty());
  EXPECT_TRUE(aa.exception_set(W("w"), W("w+5")).points.empty());
  const auto c = aa.exception_set(W("w"), W("w*2"));
  EXPECT_FALSE(disagreement(aa, c, 60));
  const auto v = aa.verify_exception(c, 200, 3);
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.checked, 200u);
  EXPECT_TRUE(aa.verify_exception(aa.exception_set(W("w"), W("w+1")), 100, 1).ok);
}

TEST(AaExamples, NegativeControl) {
  AlmostAgreeTower aa;
  const ExceptionCert wrong{W("w+3"), W("w*2"), {}};
  const auto found = disagreement(aa, wrong, 20);
  ASSERT_TRUE(found) << "orders at w+3 and w*2 agree on their fronts; pick another control";
  const auto v = aa.verify_exception(wrong, 200, 1);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.witness);
  const auto& [x, y] = *v.witness;
  EXPECT_NE(aa.rank(W("w+3"), x) < aa.rank(W("w+3"), y), aa.rank(W("w*2"), x) < aa.rank(W("w*2"), y));
}

TEST(AaErrors, Domain) {
  AlmostAgreeTower aa(TowerConfig{W("w^2*2")});
  EXPECT_THROW(aa.rank(W("w^3"), W("0")), CapExceeded);
  EXPECT_THROW(aa.rank(W("w"), W("w")), OutOfRange);
  EXPECT_THROW(aa.chain(W("w+1"), 2), NotALimit);
  try {
    aa.rank(W("5"), W("1"));
    FAIL() << "expected below-omega";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), "below-omega");
  }
  try {
    aa.exception_set(W("w*2"), W("w+1"));
    FAIL() << "expected bad-pair";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), "bad-pair");
  }
}

TEST(AaProperties, OrderTypeOmega) {
  AlmostAgreeTower aa;
  Lcg64 rng(43);
  for (const char* a : {"w", "w+3", "w*2", "w*3+1", "w^2", "w^2+w", "w^2*2"}) {
    const Ordinal alpha = W(a);
    std::set<Ordinal> seen;
    for (std::uint64_t k = 0; k < 50; ++k) {
      const Ordinal x = aa.nth(alpha, k);
      ASSERT_TRUE(x < alpha);
      ASSERT_TRUE(seen.insert(x).second) << a;
      ASSERT_EQ(aa.rank(alpha, x), k) << a;
    }
    for (int i = 0; i < 60; ++i) {
      const Ordinal x = random_below(alpha, rng);
      ASSERT_EQ(aa.nth(alpha, aa.rank(alpha, x)), x) << a << " " << x;
    }
  }
}

TEST(AaProperties, PrependLaw) {
  AlmostAgreeTower aa;
  Lcg64 rng(44);
  for (int i = 0; i < 100; ++i) {
    const Ordinal alpha = add(W("w"), random_below(W("w^2"), rng));
    const Ordinal next = alpha.successor();
    EXPECT_EQ(aa.rank(next, alpha), 0u);
    const Ordinal x = random_below(alpha, rng);
    EXPECT_EQ(aa.rank(next, x), 1 + aa.rank(alpha, x));
  }
}

TEST(AaProperties, ChainStartsAtOmegaAndIncreases) {
  AlmostAgreeTower aa;
  for (const char* e : {"w*2", "w*3", "w^2", "w^2+w", "w^2*2"}) {
    const auto c = aa.chain(W(e), 8);
    ASSERT_EQ(c.front(), W("w"));
    for (std::size_t i = 1; i < c.size(); ++i) {
      EXPECT_TRUE(c[i - 1] < c[i]);
      EXPECT_TRUE(c[i] < W(e));
    }
  }
}

// D_(i+1) restricted to a_i is D_i, and D_i almost agrees with <^(a_i).
TEST(AaProperties, ChainLaw) {
  AlmostAgreeTower aa;
  for (const char* e : {"w*2", "w^2", "w^2+w"}) {
    const Ordinal eta = W(e);
    const auto c = aa.chain(eta, 7);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      std::vector<Ordinal> xs;
      for (std::uint64_t k = 0; xs.size() < 25; ++k) {
        Ordinal x = aa.nth(c[i], k);
        xs.push_back(std::move(x));
      }
      for (std::size_t p = 0; p < xs.size(); ++p) {
        for (std::size_t q = p + 1; q < xs.size(); ++q) {
          const bool now = aa.chain_rank(eta, i, xs[p]) < aa.chain_rank(eta, i, xs[q]);
          const bool next = aa.chain_rank(eta, i + 1, xs[p]) < aa.chain_rank(eta, i + 1, xs[q]);
          ASSERT_EQ(now, next) << e << " i=" << i << " " << xs[p] << " " << xs[q];
        }
      }
    }
  }
}

TEST(AaProperties, BlocksPartitionTheLimit) {
  AlmostAgreeTower aa;
  Lcg64 rng(45);
  for (const char* e : {"w*2", "w^2"}) {
    const Ordinal eta = W(e);
    std::map<Ordinal, std::size_t> home;
    std::uint64_t offset = 0;
    for (std::size_t i = 0; offset < 120; ++i) {
      ASSERT_LT(i, 200u);
      const auto b = aa.limit_block(eta, i);
      for (std::size_t k = 0; k < b.size(); ++k) {
        ASSERT_TRUE(b[k] < eta);
        ASSERT_TRUE(home.emplace(b[k], i).second) << b[k] << " in two blocks";
        ASSERT_EQ(aa.rank(eta, b[k]), offset + k);
      }
      offset += b.size();
    }
    for (int s = 0; s < 100; ++s) {
      const Ordinal x = random_below(eta, rng, 4);
      const std::uint64_t r = aa.rank(eta, x);
      if (r < offset) {
        EXPECT_TRUE(home.count(x)) << x;
      }
    }
  }
}

TEST(AaProperties, AlmostAgreementOnPrefixes) {
  AlmostAgreeTower aa;
  Lcg64 rng(46);
  int checked = 0;
  while (checked < 40) {
    const Ordinal alpha = add(W("w"), random_below(W("w^2*2"), rng, 4)).successor();
    const Ordinal beta = add(W("w"), random_below(alpha, rng, 4));
    if (!(beta < alpha)) continue;
    const auto c = aa.exception_set(beta, alpha);
    for (const auto& p : c.points) ASSERT_TRUE(p < beta);
    const auto bad = disagreement(aa, c, c.points.size() + 30);
    ASSERT_FALSE(bad) << beta << " < " << alpha << ": " << bad->first << ", " << bad->second;
    const auto v = aa.verify_exception(c, 200, static_cast<std::uint64_t>(checked));
    ASSERT_TRUE(v.ok) << beta << " < " << alpha;
    ASSERT_EQ(v.checked, 200u);
    ++checked;
  }
}

// Almost agreement composes: points(b,g) u (points(g,a) n b) covers (b,a).
TEST(AaProperties, CertificatesCompose) {
  AlmostAgreeTower aa;
  Lcg64 rng(47);
  int checked = 0;
  while (checked < 25) {
    std::array<Ordinal, 3> v{add(W("w"), random_below(W("w^2*2"), rng, 4)),
                             add(W("w"), random_below(W("w^2*2"), rng, 4)),
                             add(W("w"), random_below(W("w^2*2"), rng, 4))};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) continue;
    const auto low = aa.exception_set(v[0], v[1]);
    const auto high = aa.exception_set(v[1], v[2]);
    const ExceptionCert composed{v[0], v[2], set_union(low.points, high.points.below(v[0]))};
    EXPECT_FALSE(disagreement(aa, composed, composed.points.size() + 25)) << v[0] << " " << v[1] << " " << v[2];
    EXPECT_TRUE(aa.verify_exception(composed, 100, 9).ok);
    ++checked;
  }
}

TEST(AaProperties, OrderHandleMatchesDirectQueries) {
  AlmostAgreeTower aa;
  const auto fns = aa.order(W("w^2"));
  for (std::uint64_t k = 0; k < 40; ++k) {
    const Ordinal x = fns.nth(k);
    EXPECT_EQ(x, aa.nth(W("w^2"), k));
    EXPECT_EQ(fns.rank(x), k);
    EXPECT_TRUE(fns.contains(x));
  }
  EXPECT_FALSE(fns.contains(W("w^2")));
}
