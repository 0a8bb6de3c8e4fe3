#pragma once

// Seeded verification suites, one check per acceptance criterion. Output is a
// deterministic function of the options (no timings, no addresses).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cofinal/closed_family.hpp"
#include "cofinal/omega_orders.hpp"
#include "cofinal/ordinal.hpp"
#include "cofinal/random.hpp"
#include "cofinal/relations.hpp"
#include "cofinal/set_system.hpp"
#include "cofinal/tower.hpp"

namespace cofinal {

using IndexSet = std::set<std::size_t>;

// Brute-force references that criterion 4 compares the library against.
struct ReferenceOracles {
  std::function<bool(const TowerState&, const FiniteOrdinalSet&)> closed;
  // Distinct traces of `sets` on `a`, all as index sets over a ground of size n.
  std::function<std::set<IndexSet>(std::size_t n, const std::vector<IndexSet>& sets, const IndexSet& a)> trace;
};

namespace reference {

// Every (alpha, beta) pair of the set, every gamma before beta in <^alpha. The
// gammas for one alpha are a prefix of <^alpha, so the deepest beta covers all.
inline bool closed_all_pairs(const TowerState& tower, const FiniteOrdinalSet& a) {
  for (const auto& alpha : a) {
    std::uint64_t deepest = 0;
    for (const auto& beta : a) {
      if (beta < alpha) deepest = std::max(deepest, tower.rank(alpha, beta));
    }
    for (std::uint64_t k = 0; k < deepest; ++k) {
      if (!a.contains(tower.nth(alpha, k))) return false;
    }
  }
  return true;
}

inline std::set<IndexSet> trace_sets(std::size_t, const std::vector<IndexSet>& sets, const IndexSet& a) {
  std::set<IndexSet> out;
  for (const auto& s : sets) {
    IndexSet t;
    for (std::size_t p : s) {
      if (a.count(p)) t.insert(p);
    }
    out.insert(std::move(t));
  }
  return out;
}

}  // namespace reference

inline ReferenceOracles default_oracles() { return {reference::closed_all_pairs, reference::trace_sets}; }

struct SuiteOptions {
  std::uint64_t seed = 1;
  Ordinal bound = Ordinal::power(Ordinal::finite(2));
  Ordinal cap = Ordinal::power(Ordinal::finite(3));
  ReferenceOracles oracles = default_oracles();
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class Suite { All, Tower, Family, Vc, Aa };

namespace detail {

inline Lcg64 criterion_rng(std::uint64_t seed, int criterion) {
  return Lcg64(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(criterion));
}

inline Ordinal w_power(std::uint64_t e, std::uint64_t c = 1) { return Ordinal::power(Ordinal::finite(e), c); }

inline Ordinal draw_at_most(const Ordinal& top, Lcg64& rng) { return random_below(top.successor(), rng); }

inline FiniteOrdinalSet draw_set(const Ordinal& bound, std::uint64_t max_size, Lcg64& rng) {
  std::vector<Ordinal> v;
  if (bound.is_zero()) return {};
  const std::uint64_t size = rng.between(0, max_size);
  for (std::uint64_t i = 0; i < size; ++i) v.push_back(random_below(bound, rng));
  return FiniteOrdinalSet(std::move(v));
}

inline IndexSet mask_to_indices(Mask m) {
  IndexSet out;
  for (std::size_t i = 0; m; ++i, m >>= 1) {
    if (m & 1U) out.insert(i);
  }
  return out;
}

// Coefficient of w^e in the normal form of x.
inline std::uint64_t coefficient_at(const Ordinal& x, std::uint64_t e) {
  for (const auto& t : x.terms()) {
    if (t.exponent == Ordinal::finite(e)) return t.coefficient;
  }
  return 0;
}

inline std::string frac(std::uint64_t good, std::uint64_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

class SuiteRunner {
 public:
  explicit SuiteRunner(const SuiteOptions& opt)
      : opt_(opt), tower_(TowerConfig{opt.cap}), aa_(TowerConfig{opt.cap}) {}

  CheckResult tower_totality() {
    auto rng = criterion_rng(opt_.seed, 1);
    const Ordinal top = add(w_power(2), w_power(1, 5));
    std::uint64_t good = 0;
    std::string first_bad;
    for (int i = 0; i < 500; ++i) {
      Ordinal alpha;
      do alpha = draw_at_most(top, rng);
      while (alpha < Ordinal::finite(2));
      Ordinal x = random_below(alpha, rng);
      Ordinal y;
      do y = random_below(alpha, rng);
      while (y == x);
      const auto rx = tower_.rank(alpha, x);
      const auto ry = tower_.rank(alpha, y);
      const bool ok = ((rx < ry) != (ry < rx)) && tower_.nth(alpha, rx) == x && tower_.nth(alpha, ry) == y;
      if (ok) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = "; first failure alpha=" + alpha.to_string() + " x=" + x.to_string() + " y=" + y.to_string();
      }
    }
    return {1, "tower totality and rank consistency", good == 500, frac(good, 500) + " pairs" + first_bad};
  }

  CheckResult vc_dimension_two() {
    auto rng = criterion_rng(opt_.seed, 2);
    std::uint64_t good = 0;
    for (int i = 0; i < 300; ++i) {
      FiniteOrdinalSet t;
      while (t.size() < 3) t.insert(random_below(opt_.bound, rng));
      if (cond4_check(tower_, t)) ++good;
    }
    const FamilyWindow window = enumerate_family(tower_, opt_.bound, 60, opt_.seed);
    bool triple_free = true;
    std::string pair_note = "no ground with a shattered pair";
    bool pair_found = false;
    for (std::uint64_t g = 0; g < 64 && !pair_found && triple_free; ++g) {
      const auto ground = window_ground(window, 12, opt_.seed + g);
      const auto sys = restrict_window(window, ground);
      const HuntResult h3 = hunt_shattered(sys, 3, HuntMode::Exhaustive);
      if (h3.found || !h3.exhaustive) {
        triple_free = false;
        pair_note = "ground " + std::to_string(g) + ": k=3 not excluded";
        break;
      }
      const HuntResult h2 = hunt_shattered(sys, 2, HuntMode::Exhaustive);
      if (h2.found && is_shattered(sys, *h2.found) && vc_dim(sys) == 2) {
        pair_found = true;
        std::string pair;
        for (std::size_t p = 0; p < ground.size(); ++p) {
          if (*h2.found >> p & 1U) pair += (pair.empty() ? "" : ",") + ground[p].to_string();
        }
        pair_note = "ground attempt " + std::to_string(g) + " of 12 points: k=3 NONE (exhaustive), k=2 {" + pair +
                    "}, vc_dim 2";
      }
    }
    const bool pass = good == 300 && triple_free && pair_found;
    return {2, "VC-dimension-2 law", pass, frac(good, 300) + " triples covered; " + pair_note};
  }

  CheckResult closure_soundness() {
    auto rng = criterion_rng(opt_.seed, 3);
    std::uint64_t ext_good = 0;
    for (int i = 0; i < 300; ++i) {
      const FiniteOrdinalSet a = draw_set(opt_.bound, 6, rng);
      const FiniteOrdinalSet e = cofinal_extend(tower_, a);
      if (e.includes(a) && is_closed(tower_, e)) ++ext_good;
    }
    std::uint64_t close_good = 0;
    for (int i = 0; i < 300; ++i) {
      const Ordinal alpha = draw_at_most(opt_.bound, rng);
      const FiniteOrdinalSet a = draw_set(alpha, 6, rng);
      FiniteOrdinalSet b = tower_.close(alpha, a);
      const bool inside = b.empty() || b.max() < alpha;
      b.insert(alpha);
      if (inside && b.includes(a) && is_closed(tower_, b)) ++close_good;
    }
    return {3, "cofinality and closure soundness", ext_good == 300 && close_good == 300,
            "cofinal_extend " + frac(ext_good, 300) + ", close " + frac(close_good, 300)};
  }

  CheckResult oracle_equivalence() {
    auto rng = criterion_rng(opt_.seed, 4);
    std::uint64_t closed_agree = 0;
    std::uint64_t closed_true = 0;
    for (int i = 0; i < 500; ++i) {
      FiniteOrdinalSet a = draw_set(opt_.bound, 6, rng);
      if (i % 3 != 0) a = cofinal_extend(tower_, a);
      if (i % 3 == 2) a.erase(a[rng.below(a.size())]);
      const bool mine = is_closed(tower_, a);
      closed_true += mine;
      if (mine == opt_.oracles.closed(tower_, a)) ++closed_agree;
    }
    std::uint64_t queries = 0;
    std::uint64_t trace_agree = 0;
    std::uint64_t shattered = 0;
    for (int s = 0; s < 100; ++s) {
      const std::size_t n = rng.between(1, 10);
      const Mask full = (Mask{1} << n) - 1;
      std::vector<Mask> sets;
      const std::uint64_t m = rng.between(0, 24);
      for (std::uint64_t j = 0; j < m; ++j) sets.push_back(rng.next() & full);
      if (s % 4 == 0) {
        const Mask base = rng.next() & full;
        for (Mask sub = base;; sub = (sub - 1) & base) {
          sets.push_back(sub);
          if (sub == 0) break;
        }
      }
      std::vector<std::size_t> ground(n);
      for (std::size_t p = 0; p < n; ++p) ground[p] = p;
      const SetSystem<std::size_t> sys(ground, sets);
      std::vector<IndexSet> as_sets;
      for (Mask x : sets) as_sets.push_back(mask_to_indices(x));
      for (int q = 0; q < 10; ++q) {
        const Mask a = q == 0 ? full : (rng.next() & full);
        std::set<IndexSet> mine;
        for (Mask t : trace(sys, a)) mine.insert(mask_to_indices(t));
        const auto theirs = opt_.oracles.trace(n, as_sets, mask_to_indices(a));
        const bool shat = is_shattered(sys, a);
        shattered += shat;
        const bool oracle_shat = theirs.size() == (std::size_t{1} << std::popcount(a));
        ++queries;
        if (mine == theirs && shat == oracle_shat) ++trace_agree;
      }
    }
    const bool pass = closed_agree == 500 && trace_agree == queries;
    return {4, "brute-force oracle equivalence", pass,
            "is_closed " + frac(closed_agree, 500) + " agree (" + std::to_string(closed_true) +
                " closed); trace/is_shattered " + frac(trace_agree, queries) + " queries on 100 systems agree (" +
                std::to_string(shattered) + " shattered)"};
  }

  CheckResult instability_ladder() {
    const Ladder lad = ladder(tower_, 20, opt_.bound);
    std::uint64_t good = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      for (std::size_t j = 0; j < 20; ++j) good += lad.sets[j].contains(lad.points[i]) == (i <= j);
    }
    std::uint64_t closed = 0;
    for (const auto& s : lad.sets) closed += is_closed(tower_, s);
    return {5, "instability ladder", good == 400 && closed == 20,
            frac(good, 400) + " index pairs; " + frac(closed, 20) + " rungs closed; x_19 = " +
                lad.points.back().to_string()};
  }

  CheckResult sauer_conformity() {
    std::uint64_t good = 0;
    std::uint64_t max_traces = 0;
    std::uint64_t max_dim = 0;
    for (std::uint64_t w = 0; w < 50; ++w) {
      const FamilyWindow window = enumerate_family(tower_, opt_.bound, 40, opt_.seed + w);
      const auto sys = restrict_window(window, window_ground(window, 12, opt_.seed + w));
      const SauerReport r = sauer_check(sys, 2);
      good += r.holds;
      max_traces = std::max(max_traces, r.traces);
      max_dim = std::max<std::uint64_t>(max_dim, vc_dim(sys));
    }
    return {6, "Sauer-Shelah conformity", good == 50,
            frac(good, 50) + " windows within sum_{i<=2} C(12,i) = " + std::to_string(sauer_bound(12, 2)) +
                "; max traces " + std::to_string(max_traces) + ", max vc_dim " + std::to_string(max_dim)};
  }

  CheckResult section_size() {
    auto rng = criterion_rng(opt_.seed, 7);
    const Ordinal top = add(w_power(2), w_power(1, 5));
    std::uint64_t good = 0;
    std::uint64_t drawn = 0;
    for (std::uint64_t attempt = 0; drawn < 100 && attempt < 1000000; ++attempt) {
      Ordinal alpha = draw_at_most(top, rng);
      if (alpha.is_zero()) continue;
      Ordinal beta = random_below(alpha, rng);
      const std::uint64_t r = tower_.rank(alpha, beta);
      if (r > 40) continue;
      ++drawn;
      // A box of ordinals below alpha wide enough to hold every predecessor.
      std::uint64_t hi[3] = {0, 0, 0};
      for (std::uint64_t k = 0; k <= r; ++k) {
        const Ordinal g = tower_.nth(alpha, k);
        for (std::uint64_t e = 0; e < 3; ++e) hi[e] = std::max(hi[e], coefficient_at(g, e));
      }
      std::uint64_t count = 0;
      for (std::uint64_t a2 = 0; a2 <= hi[2] + 1; ++a2) {
        for (std::uint64_t a1 = 0; a1 <= hi[1] + 1; ++a1) {
          for (std::uint64_t a0 = 0; a0 <= hi[0] + 1; ++a0) {
            const Ordinal g = add(add(w_power(2, a2), w_power(1, a1)), Ordinal::finite(a0));
            if (g < alpha && example_R(tower_, g, beta, alpha)) ++count;
          }
        }
      }
      good += count == r;
    }
    return {7, "section-size identity", drawn == 100 && good == 100, frac(good, drawn) + " sections exact"};
  }

  CheckResult aa_order_type() {
    auto rng = criterion_rng(opt_.seed, 8);
    const std::vector<Ordinal> alphas{Ordinal::omega(), add(Ordinal::omega(), Ordinal::finite(3)), w_power(1, 2),
                                      w_power(2)};
    std::uint64_t prefix_good = 0;
    std::uint64_t inverse_good = 0;
    for (const auto& alpha : alphas) {
      std::set<Ordinal> seen;
      bool ok = true;
      for (std::uint64_t k = 0; k < 50; ++k) {
        Ordinal x = aa_.nth(alpha, k);
        ok = ok && x < alpha && aa_.rank(alpha, x) == k && seen.insert(x).second;
      }
      prefix_good += ok;
      for (int s = 0; s < 200; ++s) {
        const Ordinal x = random_below(alpha, rng);
        inverse_good += aa_.nth(alpha, aa_.rank(alpha, x)) == x;
      }
    }
    return {8, "almost-agreeing orders have type w", prefix_good == 4 && inverse_good == 800,
            "prefix-complete to k=50 on " + frac(prefix_good, 4) + " orders; nth(rank(x)) = x on " +
                frac(inverse_good, 800) + " points"};
  }

  CheckResult almost_agreement() {
    auto rng = criterion_rng(opt_.seed, 9);
    const Ordinal top = w_power(2, 2);
    std::uint64_t good = 0;
    std::size_t max_size = 0;
    std::string first_bad;
    for (std::uint64_t i = 0; i < 100; ++i) {
      Ordinal alpha;
      do alpha = draw_at_most(top, rng);
      while (!(Ordinal::omega() < alpha));
      Ordinal beta;
      do beta = random_below(alpha, rng);
      while (beta < Ordinal::omega());
      const ExceptionCert cert = aa_.exception_set(beta, alpha);
      const AgreementCheck check = aa_.verify_exception(cert, 200, opt_.seed + i);
      max_size = std::max(max_size, cert.points.size());
      if (check.ok && check.checked == 200) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = "; first failure " + beta.to_string() + " < " + alpha.to_string();
      }
    }
    return {9, "almost-agreement certificates", good == 100,
            frac(good, 100) + " certificates hold on 200 pairs each; max certificate size " +
                std::to_string(max_size) + first_bad};
  }

  CheckResult adjust_unit_law() {
    auto rng = criterion_rng(opt_.seed, 10);
    const Ordinal w2 = w_power(1, 2);
    const bool restriction_exact = aa_.exception_set(Ordinal::omega(), w2).points.empty();
    const auto outer = aa_.order(w2);
    const auto adjusted = adjust_one(aa_.order(Ordinal::omega()), outer, {});
    std::uint64_t same = 0;
    for (int s = 0; s < 100; ++s) {
      const Ordinal x = random_below(w2, rng);
      same += adjusted.rank(x) == outer.rank(x);
    }
    const auto hand = adjust_one(listed_order<int>({1, 0}), listed_order<int>({0, 1, 2}), {0});
    const std::vector<int> got{hand.nth(0), hand.nth(1), hand.nth(2)};
    const bool hand_ok = got == std::vector<int>{1, 0, 2};
    std::ostringstream listed;
    listed << "[" << got[0] << "," << got[1] << "," << got[2] << "]";
    return {10, "cut-insertion unit law", restriction_exact && same == 100 && hand_ok,
            "empty certificate leaves the outer order: " + frac(same, 100) + " ranks; [1,0] into [0,1,2] gives " +
                listed.str()};
  }

  CheckResult literal_round_trip() {
    auto rng = criterion_rng(opt_.seed, 11);
    const Ordinal bound = Ordinal::power(add(Ordinal::omega(), Ordinal::finite(2)));
    std::uint64_t good = 0;
    for (int i = 0; i < 100; ++i) {
      const Ordinal x = random_below(bound, rng);
      const std::string text = x.to_string();
      const Ordinal back = parse_ordinal(text);
      good += back == x && back.to_string() == text;
    }
    return {11, "ordinal literal round trip", good == 100, frac(good, 100) + " literals"};
  }

 private:
  const SuiteOptions& opt_;
  TowerState tower_;
  AlmostAgreeTower aa_;
};

}  // namespace detail

inline std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& opt = {}) {
  if (opt.cap < opt.bound) throw CapExceeded("bound " + opt.bound.to_string() + " exceeds cap " + opt.cap.to_string());
  detail::SuiteRunner run(opt);
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Tower) {
    out.push_back(run.tower_totality());
    out.push_back(run.section_size());
    out.push_back(run.literal_round_trip());
  }
  if (all || suite == Suite::Family) {
    out.push_back(run.closure_soundness());
    out.push_back(run.oracle_equivalence());
    out.push_back(run.instability_ladder());
  }
  if (all || suite == Suite::Vc) {
    out.push_back(run.vc_dimension_two());
    out.push_back(run.sauer_conformity());
  }
  if (all || suite == Suite::Aa) {
    out.push_back(run.aa_order_type());
    out.push_back(run.almost_agreement());
    out.push_back(run.adjust_unit_law());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.criterion < b.criterion; });
  return out;
}

inline std::string format_check(const CheckResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.criterion) + "] " + r.name + ": " +
         r.detail;
}

}  // namespace cofinal
