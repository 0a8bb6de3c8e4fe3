#include <gtest/gtest.h>

#include "cofinal/closed_family.hpp"
#include "cofinal/random.hpp"
#include "cofinal/tower.hpp"
#include "support/naive_tower.hpp"

using namespace cofinal;

namespace {

Ordinal W(const char* s) { return parse_ordinal(s); }
FiniteOrdinalSet S(const char* s) { return parse_ordinal_set(s); }

oracle::OrdSet as_std(const FiniteOrdinalSet& a) { return {a.begin(), a.end()}; }

}  // namespace

TEST(TowerExamples, Rank) {
  TowerState t;
  EXPECT_EQ(t.rank(W("5"), W("2")), 2u);
  for (std::uint64_t n = 0; n < 30; ++n) EXPECT_EQ(t.rank(W("w"), Ordinal::finite(n)), n);
  EXPECT_EQ(t.rank(W("w+1"), W("w")), 0u);
}

TEST(TowerExamples, Nth) {
  TowerState t;
  EXPECT_EQ(t.nth(W("5"), 0), W("4"));
  EXPECT_EQ(t.nth(W("w+1"), 3), W("2"));
  EXPECT_EQ(t.nth(W("w"), 7), W("7"));
}

TEST(TowerExamples, Turnstile) {
  TowerState t;
  EXPECT_TRUE(t.turnstile(W("3"), W("0"), W("2")));
  EXPECT_TRUE(t.turnstile(W("w+1"), W("3"), W("w")));
  EXPECT_FALSE(t.turnstile(W("2"), W("5"), W("0")));
}

TEST(TowerExamples, Close) {
  TowerState t;
  EXPECT_EQ(t.close(W("3"), S("0")), S("0,1,2"));
  EXPECT_EQ(t.close(W("0"), S("")), S(""));
  EXPECT_EQ(t.close(W("w"), S("2,5")), S("0,1,2,3,4,5"));
}

TEST(TowerExamples, Blocks) {
  TowerState t;
  EXPECT_TRUE(t.block(W("w"), 0).empty());
  EXPECT_EQ(t.block(W("w"), 3), S("0,1,2,3"));
  for (std::uint64_t n = 0; n < 20; ++n) {
    const auto a = t.block(W("w"), n);
    const auto b = t.block(W("w"), n + 1);
    EXPECT_TRUE(b.includes(a));
    EXPECT_GT(b.size(), a.size());
  }
}

TEST(TowerErrors, Domain) {
  TowerState t(TowerConfig{W("w^2")});
  EXPECT_THROW(t.rank(W("w^2+1"), W("0")), CapExceeded);
  EXPECT_THROW(t.rank(W("w"), W("w")), OutOfRange);
  EXPECT_THROW(t.nth(W("4"), 4), OutOfRange);
  EXPECT_THROW(t.block(W("w+1"), 2), NotALimit);
  EXPECT_THROW(t.close(W("5"), S("7")), OutOfRange);
  EXPECT_THROW(t.turnstile(W("w^3"), W("0"), W("1")), CapExceeded);
}

TEST(TowerErrors, IterationCeiling) {
  TowerState t(TowerConfig{W("w^3"), 4});
  EXPECT_THROW(t.rank(W("w"), W("100")), IterationCeiling);
}

// Rank against the naive recursive tower.
TEST(TowerOracle, RanksMatchNaive) {
  TowerState t;
  oracle::NaiveTower naive;
  Lcg64 rng(11);
  const Ordinal top = W("w^2+w*5");
  for (int i = 0; i < 300; ++i) {
    const Ordinal alpha = random_below(top.successor(), rng);
    if (alpha.is_zero()) continue;
    const Ordinal x = random_below(alpha, rng);
    ASSERT_EQ(t.rank(alpha, x), naive.rank(alpha, x)) << alpha << " " << x;
  }
}

TEST(TowerOracle, BlocksMatchNaive) {
  TowerState t;
  oracle::NaiveTower naive;
  for (const char* eta : {"w", "w*2", "w*3", "w^2", "w^2+w"}) {
    for (std::size_t n = 0; n <= 10; ++n) {
      ASSERT_EQ(as_std(t.block(W(eta), n)), naive.block(W(eta), n)) << eta << " n=" << n;
    }
  }
}

TEST(TowerOracle, CloseMatchesNaive) {
  TowerState t;
  oracle::NaiveTower naive;
  Lcg64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Ordinal alpha = random_below(W("w^2"), rng).successor();
    std::vector<Ordinal> items;
    const std::uint64_t size = rng.below(5);
    for (std::uint64_t k = 0; k < size; ++k) items.push_back(random_below(alpha, rng));
    const FiniteOrdinalSet a(items);
    ASSERT_EQ(as_std(t.close(alpha, a)), naive.close(alpha, as_std(a))) << alpha << " " << a;
  }
}

TEST(TowerProperties, Totality) {
  TowerState t;
  Lcg64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Ordinal alpha = random_below(W("w^2+w*6"), rng);
    if (alpha < W("2")) continue;
    const Ordinal x = random_below(alpha, rng);
    const Ordinal y = random_below(alpha, rng);
    if (x == y) continue;
    const auto rx = t.rank(alpha, x);
    const auto ry = t.rank(alpha, y);
    EXPECT_NE(rx, ry);
    EXPECT_NE(t.turnstile(alpha, x, y), t.turnstile(alpha, y, x));
    EXPECT_EQ(t.nth(alpha, rx), x);
  }
}

TEST(TowerProperties, PrefixHasNoGaps) {
  TowerState t;
  for (const char* eta : {"w", "w*2", "w^2", "w^2+w*3", "w^3"}) {
    std::set<Ordinal> seen;
    for (std::uint64_t k = 0; k < 50; ++k) {
      const Ordinal x = t.nth(W(eta), k);
      ASSERT_TRUE(x < W(eta));
      ASSERT_TRUE(seen.insert(x).second);
      ASSERT_EQ(t.rank(W(eta), x), k);
    }
  }
}

TEST(TowerProperties, SuccessorLaw) {
  TowerState t;
  Lcg64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const Ordinal alpha = random_below(W("w^2*2"), rng);
    const Ordinal next = alpha.successor();
    EXPECT_EQ(t.rank(next, alpha), 0u);
    if (alpha.is_zero()) continue;
    const Ordinal x = random_below(alpha, rng);
    EXPECT_EQ(t.rank(next, x), 1 + t.rank(alpha, x));
  }
}

TEST(TowerProperties, BlocksAreRankPrefixes) {
  TowerState t;
  for (const char* eta : {"w", "w*2", "w^2"}) {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const auto s = t.block(W(eta), n);
      std::uint64_t top = 0;
      for (const auto& x : s) top = std::max(top, t.rank(W(eta), x));
      EXPECT_EQ(top, s.size() - 1) << eta << " n=" << n;
      EXPECT_TRUE(is_closed(t, s));
    }
  }
}

TEST(TowerProperties, ClosureSoundness) {
  TowerState t;
  Lcg64 rng(15);
  for (int i = 0; i < 300; ++i) {
    const Ordinal alpha = random_below(W("w^2"), rng).successor();
    std::vector<Ordinal> items;
    const std::uint64_t size = rng.below(7);
    for (std::uint64_t k = 0; k < size; ++k) items.push_back(random_below(alpha, rng));
    const FiniteOrdinalSet a(items);
    auto b = t.close(alpha, a);
    EXPECT_TRUE(b.includes(a));
    if (!b.empty()) {
      EXPECT_TRUE(b.max() < alpha);
    }
    b.insert(alpha);
    EXPECT_TRUE(is_closed(t, b)) << alpha << " " << a;
  }
}

TEST(TowerProperties, TriplesAreComparable) {
  TowerState t;
  Lcg64 rng(16);
  for (int i = 0; i < 300; ++i) {
    const FiniteOrdinalSet tri{random_below(W("w^2"), rng), random_below(W("w^2"), rng), random_below(W("w^2"), rng)};
    if (tri.size() != 3) continue;
    const Ordinal& top = tri[2];
    EXPECT_TRUE(t.turnstile(top, tri[0], tri[1]) || t.turnstile(top, tri[1], tri[0]));
  }
}

TEST(TowerProperties, DeepSuccessorTailUsesClosedForm) {
  TowerState t;
  const Ordinal alpha = W("w*2+1000000");
  EXPECT_EQ(t.rank(alpha, W("w*2+999999")), 0u);
  EXPECT_EQ(t.rank(alpha, W("w*2")), 999999u);
  EXPECT_EQ(t.rank(alpha, W("0")), 1000000u + t.rank(W("w*2"), W("0")));
}
