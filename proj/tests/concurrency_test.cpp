#include <gtest/gtest.h>

#include <thread>

#include "cofinal/omega_orders.hpp"
#include "cofinal/random.hpp"
#include "cofinal/tower.hpp"

using namespace cofinal;

namespace {

struct Query {
  Ordinal alpha;
  Ordinal x;
};

std::vector<Query> queries(std::uint64_t seed, int n, const Ordinal& least) {
  Lcg64 rng(seed);
  std::vector<Query> out;
  while (static_cast<int>(out.size()) < n) {
    const Ordinal alpha = random_below(parse_ordinal("w^2+w*4"), rng);
    if (alpha.is_zero() || alpha < least) continue;
    out.push_back({alpha, random_below(alpha, rng)});
  }
  return out;
}

template <class Tower>
void compare_threaded(const std::vector<Query>& qs) {
  Tower sequential;
  std::vector<std::uint64_t> expected;
  for (const auto& q : qs) expected.push_back(sequential.rank(q.alpha, q.x));

  Tower shared;
  constexpr int kThreads = 8;
  std::vector<std::vector<std::uint64_t>> got(kThreads, std::vector<std::uint64_t>(qs.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t) {
    pool.emplace_back([&, t] {
      // Each thread walks the queries from a different offset to interleave cache fills.
      for (std::size_t k = 0; k < qs.size(); ++k) {
        const std::size_t i = (k + t * qs.size() / kThreads) % qs.size();
        got[t][i] = shared.rank(qs[i].alpha, qs[i].x);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < kThreads; ++t) EXPECT_EQ(got[t], expected) << "thread " << t;
}

}  // namespace

TEST(Concurrency, SharedTowerMatchesSequential) { compare_threaded<TowerState>(queries(41, 400, Ordinal())); }

// These orders exist from w on.
TEST(Concurrency, SharedAlmostAgreeTowerMatchesSequential) { compare_threaded<AlmostAgreeTower>(queries(42, 200, parse_ordinal("w"))); }
