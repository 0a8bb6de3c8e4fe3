#pragma once

// The `cofinal` command line. run() takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 domain error (bad literal, cap exceeded, ...),
// 2 usage error. `verify` also exits 1 when any selected check fails.

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cofinal/closed_family.hpp"
#include "cofinal/error.hpp"
#include "cofinal/json_io.hpp"
#include "cofinal/omega_orders.hpp"
#include "cofinal/ordinal.hpp"
#include "cofinal/ordinal_set.hpp"
#include "cofinal/relations.hpp"
#include "cofinal/set_system.hpp"
#include "cofinal/suites.hpp"
#include "cofinal/tower.hpp"

namespace cofinal::cli {

namespace detail {

struct Options {
  std::string cap = "w^3";
  std::uint64_t seed = 1;
  std::string bound = "w^2";
  std::uint64_t count = 40;
  std::uint64_t samples = 200;
  std::string output = "text";
  std::string window_file;
  std::string alpha;
  std::size_t ground_size = 12;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  bool json() const { return opt_.output == "json"; }
  std::ostream& out() { return out_; }

  Ordinal cap() {
    if (!cap_) cap_ = parse_ordinal(opt_.cap);
    return *cap_;
  }

  Ordinal bound() {
    const Ordinal b = parse_ordinal(opt_.bound);
    if (cap() < b) throw CapExceeded("bound " + b.to_string() + " exceeds cap " + cap().to_string());
    return b;
  }

  Ordinal alpha() {
    if (opt_.alpha.empty()) throw DomainError("usage", "--alpha is required here");
    return parse_ordinal(opt_.alpha);
  }

  TowerState& tower() {
    if (!tower_) tower_ = std::make_unique<TowerState>(TowerConfig{cap()});
    return *tower_;
  }

  AlmostAgreeTower& aa() {
    if (!aa_) aa_ = std::make_unique<AlmostAgreeTower>(TowerConfig{cap()});
    return *aa_;
  }

  FamilyWindow window() {
    if (opt_.window_file.empty()) return enumerate_family(tower(), bound(), opt_.count, opt_.seed);
    std::ifstream in(opt_.window_file);
    if (!in) throw DomainError("io", "cannot read " + opt_.window_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw DomainError("json", e.what());
    }
    return window_from_json(j);
  }

  // Ground points: the given set, or a seeded draw of ground_size points.
  std::vector<Ordinal> ground(const FamilyWindow& w, const std::string& given) {
    if (!given.empty()) {
      const FiniteOrdinalSet s = parse_ordinal_set(given);
      return {s.begin(), s.end()};
    }
    return window_ground(w, opt_.ground_size, opt_.seed);
  }

  std::uint64_t samples() const { return opt_.samples; }
  std::uint64_t seed() const { return opt_.seed; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::optional<Ordinal> cap_;
  std::unique_ptr<TowerState> tower_;
  std::unique_ptr<AlmostAgreeTower> aa_;
};

inline Json ordinals_json(const std::vector<Ordinal>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

// Ground lists keep their bit order, so print them as lists.
inline std::string ordinals_text(const std::vector<Ordinal>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + "]";
}

inline std::vector<Ordinal> points_of(const SetSystem<Ordinal>& sys, Mask m) {
  std::vector<Ordinal> out;
  for (std::size_t i = 0; i < sys.ground().size(); ++i) {
    if (m >> i & 1U) out.push_back(sys.ground()[i]);
  }
  return out;
}

inline std::uint64_t parse_nat(const std::string& s) {
  const Ordinal o = parse_ordinal(s);
  const auto n = o.as_finite();
  if (!n) throw DomainError("not-finite", s + " is not a natural number");
  return *n;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Session;
  detail::Options opt;
  CLI::App app{"Executable ordinal towers, closed families, VC analytics and almost-agreeing w-orders.", "cofinal"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.add_option("--cap", opt.cap, "Largest ordinal the towers may touch")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for windows, samples and suites")->capture_default_str();
  app.add_option("--bound", opt.bound, "Bound for windows and suites")->capture_default_str();
  CLI::Option* count_opt =
      app.add_option("--count", opt.count, "Window size (default 40), or samples for aa verify (default 200)");
  app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--window", opt.window_file, "Read the family window from this JSON file");
  app.add_option("--alpha", opt.alpha, "Order index for rank/nth/close");
  app.add_option("--ground", opt.ground_size, "Number of seeded ground points for vc commands")->capture_default_str();

  std::function<void(Session&)> action;
  // Positional string slots shared by the subcommands; at most three are used.
  std::string p1, p2, p3, p4;

  auto leaf = [&](CLI::App* parent, const char* name, const char* help, std::function<void(Session&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto group = [&](const char* name, const char* help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->fallthrough();
    g->require_subcommand(1);
    return g;
  };

  // ord
  CLI::App* ord = group("ord", "Ordinal arithmetic and literals");
  leaf(ord, "cmp", "Compare two ordinals (LT, EQ, GT)", [&](Session& s) {
    const Ordinal a = parse_ordinal(p1), b = parse_ordinal(p2);
    const std::string r = to_string(compare(a, b));
    if (s.json()) {
      s.out() << Json{{"a", a.to_string()}, {"b", b.to_string()}, {"result", r}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("a", p1)->required();
  ord->get_subcommand("cmp")->add_option("b", p2)->required();
  leaf(ord, "add", "Ordinal sum a + b", [&](Session& s) {
    const Ordinal r = add(parse_ordinal(p1), parse_ordinal(p2));
    if (s.json()) {
      s.out() << Json{{"result", r.to_string()}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("a", p1)->required();
  ord->get_subcommand("add")->add_option("b", p2)->required();
  leaf(ord, "fund", "n-th element of the fundamental sequence of a limit", [&](Session& s) {
    const Ordinal r = fund_seq(parse_ordinal(p1), detail::parse_nat(p2));
    if (s.json()) {
      s.out() << Json{{"result", r.to_string()}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("limit", p1)->required();
  ord->get_subcommand("fund")->add_option("n", p2)->required();
  leaf(ord, "enum", "n-th value of the enumeration of {x < eta}", [&](Session& s) {
    const Ordinal r = enum_below(parse_ordinal(p1), detail::parse_nat(p2));
    if (s.json()) {
      s.out() << Json{{"result", r.to_string()}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("eta", p1)->required();
  ord->get_subcommand("enum")->add_option("n", p2)->required();
  leaf(ord, "parse", "Print the canonical form of a literal", [&](Session& s) {
    const Ordinal r = parse_ordinal(p1);
    if (s.json()) {
      s.out() << Json{{"input", p1}, {"canonical", r.to_string()}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("literal", p1)->required();

  // tower
  CLI::App* tower = group("tower", "The tower of well-orders");
  leaf(tower, "rank", "Position of x in the order at --alpha", [&](Session& s) {
    const Ordinal a = s.alpha(), x = parse_ordinal(p1);
    const std::uint64_t r = s.tower().rank(a, x);
    if (s.json()) {
      s.out() << Json{{"alpha", a.to_string()}, {"x", x.to_string()}, {"rank", r}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("x", p1)->required();
  leaf(tower, "nth", "Element of rank k in the order at --alpha", [&](Session& s) {
    const Ordinal a = s.alpha();
    const Ordinal x = s.tower().nth(a, detail::parse_nat(p1));
    if (s.json()) {
      s.out() << Json{{"alpha", a.to_string()}, {"k", detail::parse_nat(p1)}, {"x", x.to_string()}}.dump() << "\n";
    } else {
      s.out() << x << "\n";
    }
  })->add_option("k", p1)->required();
  leaf(tower, "close", "Closure of a finite set below --alpha", [&](Session& s) {
    const Ordinal a = s.alpha();
    const FiniteOrdinalSet b = s.tower().close(a, parse_ordinal_set(p1));
    if (s.json()) {
      s.out() << Json{{"alpha", a.to_string()}, {"closure", ordinal_set_to_json(b)}}.dump() << "\n";
    } else {
      s.out() << b << "\n";
    }
  })->add_option("set", p1)->required();
  leaf(tower, "turnstile", "alpha, beta |- gamma", [&](Session& s) {
    const bool r = s.tower().turnstile(parse_ordinal(p1), parse_ordinal(p2), parse_ordinal(p3));
    if (s.json()) {
      s.out() << Json{{"result", r}}.dump() << "\n";
    } else {
      s.out() << (r ? "true" : "false") << "\n";
    }
  })->add_option("alpha", p1)->required();
  tower->get_subcommand("turnstile")->add_option("beta", p2)->required();
  tower->get_subcommand("turnstile")->add_option("gamma", p3)->required();
  leaf(tower, "blocks", "Blocks S_0..S_n of a limit", [&](Session& s) {
    const Ordinal eta = parse_ordinal(p1);
    const std::uint64_t n = detail::parse_nat(p2);
    Json j = Json::array();
    for (std::uint64_t i = 0; i <= n; ++i) {
      const FiniteOrdinalSet b = s.tower().block(eta, i);
      if (s.json()) {
        j.push_back(ordinal_set_to_json(b));
      } else {
        s.out() << "S_" << i << " = " << b << "\n";
      }
    }
    if (s.json()) s.out() << Json{{"eta", eta.to_string()}, {"blocks", j}}.dump() << "\n";
  })->add_option("eta", p1)->required();
  tower->get_subcommand("blocks")->add_option("n", p2)->required();

  // family
  CLI::App* family = group("family", "The cofinal family of closed sets");
  leaf(family, "extend", "Smallest-step closed superset", [&](Session& s) {
    const FiniteOrdinalSet d = cofinal_extend(s.tower(), parse_ordinal_set(p1));
    if (s.json()) {
      s.out() << Json{{"member", ordinal_set_to_json(d)}}.dump() << "\n";
    } else {
      s.out() << d << "\n";
    }
  })->add_option("set", p1)->required();
  leaf(family, "check", "Is the set closed? Prints a violation otherwise", [&](Session& s) {
    const auto v = find_closure_violation(s.tower(), parse_ordinal_set(p1));
    if (s.json()) {
      Json j{{"closed", !v}};
      if (v) j["violation"] = {{"alpha", v->alpha.to_string()}, {"beta", v->beta.to_string()}, {"gamma", v->gamma.to_string()}};
      s.out() << j.dump() << "\n";
    } else if (v) {
      s.out() << "not closed: " << v->alpha << ", " << v->beta << " |- " << v->gamma << " (missing)\n";
    } else {
      s.out() << "closed\n";
    }
  })->add_option("set", p1)->required();
  leaf(family, "ladder", "Instability ladder of the given length below --bound", [&](Session& s) {
    const Ladder l = ladder(s.tower(), detail::parse_nat(p1), s.bound());
    if (s.json()) {
      Json sets = Json::array();
      for (const auto& x : l.sets) sets.push_back(ordinal_set_to_json(x));
      s.out() << Json{{"points", detail::ordinals_json(l.points)}, {"sets", sets}}.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < l.points.size(); ++i) s.out() << "x_" << i << " = " << l.points[i] << "  s_" << i << " = " << l.sets[i] << "\n";
    }
  })->add_option("length", p1)->required();
  leaf(family, "window", "Seeded window of members (--bound, --count, --seed)", [&](Session& s) {
    const FamilyWindow w = s.window();
    if (s.json()) {
      s.out() << window_to_json(w).dump(2) << "\n";
    } else {
      for (const auto& m : w.members) s.out() << m << "\n";
    }
  });
  leaf(family, "entails", "Look for a member containing A and missing B", [&](Session& s) {
    const FiniteOrdinalSet a = parse_ordinal_set(p1), b = parse_ordinal_set(p2);
    const FamilyWindow w = s.window();
    const auto r = entails(a, b, w);
    if (s.json()) {
      Json j{{"verdict", to_string(r.verdict)}};
      if (r.certificate) j["certificate"] = ordinal_set_to_json(w.members[*r.certificate]);
      s.out() << j.dump() << "\n";
    } else {
      s.out() << to_string(r.verdict);
      if (r.certificate) s.out() << " by " << w.members[*r.certificate];
      s.out() << "\n";
    }
  })->add_option("a", p1)->required();
  family->get_subcommand("entails")->add_option("b", p2)->required();

  // vc
  CLI::App* vc = group("vc", "Set-system analytics on a window");
  leaf(vc, "dim", "Exact VC dimension of the window on the ground", [&](Session& s) {
    const FamilyWindow w = s.window();
    const auto sys = restrict_window(w, s.ground(w, p1));
    const std::size_t d = vc_dim(sys);
    if (s.json()) {
      s.out() << Json{{"ground", detail::ordinals_json(sys.ground())}, {"vc_dim", d}}.dump() << "\n";
    } else {
      s.out() << "ground " << detail::ordinals_text(sys.ground()) << "\nvc_dim " << d << "\n";
    }
  })->add_option("ground", p1, "Ground points (default: seeded draw from the window)");
  leaf(vc, "shatter", "Is the set shattered by the window?", [&](Session& s) {
    const FamilyWindow w = s.window();
    const FiniteOrdinalSet a = parse_ordinal_set(p1);
    const auto sys = restrict_window(w, {a.begin(), a.end()});
    const auto cert = shatter_certificate(sys, sys.full());
    if (s.json()) {
      Json j{{"shattered", cert.has_value()}};
      if (cert) j["certificate"] = shatter_to_json(*cert);
      s.out() << j.dump() << "\n";
    } else if (cert) {
      s.out() << "shattered\n";
      for (const auto& [mask, idx] : cert->witnesses) s.out() << "  pattern " << mask << ": " << w.members[idx] << "\n";
    } else {
      s.out() << "not shattered (" << trace(sys, sys.full()).size() << " of " << (Mask{1} << a.size()) << " patterns)\n";
    }
  })->add_option("set", p1)->required();
  leaf(vc, "hunt", "Search for a shattered k-set (exhaustive on small grounds)", [&](Session& s) {
    const FamilyWindow w = s.window();
    const auto sys = restrict_window(w, s.ground(w, p2));
    const auto r = hunt_shattered(sys, detail::parse_nat(p1));
    if (s.json()) {
      Json j{{"ground", detail::ordinals_json(sys.ground())}, {"exhaustive", r.exhaustive}};
      j["found"] = r.found ? detail::ordinals_json(detail::points_of(sys, *r.found)) : Json(nullptr);
      s.out() << j.dump() << "\n";
    } else {
      s.out() << "ground " << detail::ordinals_text(sys.ground()) << "\n";
      if (r.found) {
        s.out() << "found " << detail::ordinals_text(detail::points_of(sys, *r.found)) << "\n";
      } else {
        s.out() << "NONE" << (r.exhaustive ? " (exhaustive)" : " (inconclusive)") << "\n";
      }
    }
  })->add_option("k", p1)->required();
  vc->get_subcommand("hunt")->add_option("ground", p2, "Ground points (default: seeded draw from the window)");
  leaf(vc, "sauer", "Trace count against the Sauer-Shelah bound with d = vc_dim", [&](Session& s) {
    const FamilyWindow w = s.window();
    const auto sys = restrict_window(w, s.ground(w, p1));
    const std::size_t d = vc_dim(sys);
    const auto r = sauer_check(sys, d);
    if (s.json()) {
      s.out() << Json{{"ground", detail::ordinals_json(sys.ground())}, {"d", d}, {"traces", r.traces}, {"bound", r.bound}, {"holds", r.holds}}.dump() << "\n";
    } else {
      s.out() << "ground " << detail::ordinals_text(sys.ground()) << "\n"
              << r.traces << " traces <= " << r.bound << " (d = " << d << "): " << (r.holds ? "holds" : "VIOLATED") << "\n";
    }
  })->add_option("ground", p1, "Ground points (default: seeded draw from the window)");
  leaf(vc, "cond4", "Does some arrangement (a; b, c) of the 3-set satisfy R?", [&](Session& s) {
    const bool r = cond4_check(s.tower(), parse_ordinal_set(p1));
    if (s.json()) {
      s.out() << Json{{"result", r}}.dump() << "\n";
    } else {
      s.out() << (r ? "true" : "false") << "\n";
    }
  })->add_option("set", p1)->required();
  leaf(vc, "rmk", "Evaluate R_{m,k}(x_0, ..., x_k) inside the window", [&](Session& s) {
    const FamilyWindow w = s.window();
    std::vector<Ordinal> tuple;
    std::stringstream ss(p3);
    for (std::string item; std::getline(ss, item, ',');) tuple.push_back(parse_ordinal(item));
    const auto r = rmk_eval(detail::parse_nat(p1), detail::parse_nat(p2), tuple, w);
    if (s.json()) {
      Json j{{"value", to_string(r.value)}, {"window_relative", true}};
      j["pattern_witness"] = r.pattern_witness ? ordinal_set_to_json(w.members[*r.pattern_witness]) : Json(nullptr);
      j["universal_counterexample"] =
          r.universal_counterexample ? ordinal_set_to_json(w.members[*r.universal_counterexample]) : Json(nullptr);
      s.out() << j.dump() << "\n";
    } else {
      s.out() << to_string(r.value) << "\n";
      if (r.pattern_witness) s.out() << "  pattern witness " << w.members[*r.pattern_witness] << " (holds for the whole family)\n";
      if (r.universal_counterexample) s.out() << "  counterexample " << w.members[*r.universal_counterexample] << "\n";
      if (r.pattern_witness && !r.universal_counterexample) s.out() << "  universal clause checked in the window only\n";
    }
  })->add_option("m", p1)->required();
  vc->get_subcommand("rmk")->add_option("k", p2)->required();
  vc->get_subcommand("rmk")->add_option("tuple", p3, "x_0,...,x_k")->required();

  // aa
  CLI::App* aa = group("aa", "Almost-agreeing w-orders");
  leaf(aa, "rank", "Position of x in the order at --alpha", [&](Session& s) {
    const Ordinal a = s.alpha(), x = parse_ordinal(p1);
    const std::uint64_t r = s.aa().rank(a, x);
    if (s.json()) {
      s.out() << Json{{"alpha", a.to_string()}, {"x", x.to_string()}, {"rank", r}}.dump() << "\n";
    } else {
      s.out() << r << "\n";
    }
  })->add_option("x", p1)->required();
  leaf(aa, "nth", "Element of rank k in the order at --alpha", [&](Session& s) {
    const Ordinal a = s.alpha();
    const std::uint64_t k = detail::parse_nat(p1);
    const Ordinal x = s.aa().nth(a, k);
    if (s.json()) {
      s.out() << Json{{"alpha", a.to_string()}, {"k", k}, {"x", x.to_string()}}.dump() << "\n";
    } else {
      s.out() << x << "\n";
    }
  })->add_option("k", p1)->required();
  leaf(aa, "exceptions", "Exception certificate for the orders at beta < alpha", [&](Session& s) {
    const ExceptionCert c = s.aa().exception_set(parse_ordinal(p1), parse_ordinal(p2));
    if (s.json()) {
      s.out() << cert_to_json(c).dump() << "\n";
    } else {
      s.out() << "lower " << c.lower << "\nupper " << c.upper << "\npoints " << c.points << "\nsize " << c.points.size() << "\n";
    }
  })->add_option("beta", p1)->required();
  aa->get_subcommand("exceptions")->add_option("alpha", p2)->required();
  leaf(aa, "verify", "Sample --count pairs against a certificate (computed, or read from a file)", [&](Session& s) {
    ExceptionCert c;
    if (!p3.empty()) {
      std::ifstream in(p3);
      if (!in) throw DomainError("io", "cannot read " + p3);
      try {
        c = cert_from_json(Json::parse(in));
      } catch (const Json::parse_error& e) {
        throw DomainError("json", e.what());
      }
    } else {
      if (p1.empty() || p2.empty()) throw DomainError("usage", "give beta and alpha, or --cert");
      c = s.aa().exception_set(parse_ordinal(p1), parse_ordinal(p2));
    }
    const AgreementCheck r = s.aa().verify_exception(c, s.samples(), s.seed());
    if (s.json()) {
      Json j{{"certificate", cert_to_json(c)}, {"ok", r.ok}, {"checked", r.checked}};
      j["witness"] = r.witness ? Json::array({r.witness->first.to_string(), r.witness->second.to_string()}) : Json(nullptr);
      s.out() << j.dump() << "\n";
    } else {
      s.out() << (r.ok ? "agree" : "DISAGREE") << " on " << r.checked << " sampled pairs outside " << c.points.size() << " points\n";
      if (r.witness) s.out() << "  witness " << r.witness->first << ", " << r.witness->second << "\n";
    }
    if (!r.ok) throw DomainError("certificate-violation", "orders at " + c.lower.to_string() + " and " + c.upper.to_string() + " disagree outside the points");
  });
  aa->get_subcommand("verify")->add_option("beta", p1);
  aa->get_subcommand("verify")->add_option("alpha", p2);
  aa->get_subcommand("verify")->add_option("--cert", p3, "ExceptionCert JSON file");

  // verify
  CLI::App* verify = group("verify", "Seeded acceptance suites");
  bool failed = false;
  auto suite_leaf = [&](const char* name, Suite which) {
    leaf(verify, name, "Run the suite", [&failed, which](Session& s) {
      SuiteOptions so;
      so.seed = s.seed();
      so.bound = s.bound();
      so.cap = s.cap();
      const auto results = run_suite(which, so);
      std::size_t passed = 0;
      Json j = Json::array();
      for (const auto& r : results) {
        passed += r.pass;
        if (s.json()) {
          j.push_back({{"criterion", r.criterion}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
          s.out() << format_check(r) << "\n";
        }
      }
      if (s.json()) {
        s.out() << Json{{"checks", j}, {"passed", passed}, {"total", results.size()}}.dump(2) << "\n";
      } else {
        s.out() << passed << "/" << results.size() << " checks passed\n";
      }
      failed = passed != results.size();
    });
  };
  suite_leaf("all", Suite::All);
  suite_leaf("tower", Suite::Tower);
  suite_leaf("family", Suite::Family);
  suite_leaf("vc", Suite::Vc);
  suite_leaf("aa", Suite::Aa);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (count_opt->count() > 0) opt.samples = opt.count;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }
  // CLI11 runs the leaf callback during parse; a group without a leaf fails
  // require_subcommand above.
  if (!action) {
    err << "error: usage: no command given\n";
    return 2;
  }
  try {
    Session session(opt, out);
    action(session);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return e.kind() == "usage" ? 2 : 1;
  }
  return failed ? 1 : 0;
}

}  // namespace cofinal::cli
