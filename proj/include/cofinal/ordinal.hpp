#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is a strictly decreasing sum  w^e1*c1 + ... + w^ek*ck  with every
// coefficient >= 1; the empty sum is 0. Exponents are themselves Ordinals, so
// the representation is canonical: two values are equal iff their term lists
// are identical.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cofinal/error.hpp"

namespace cofinal {

class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coefficient; coefficient 0 yields zero.
  static Ordinal power(Ordinal exponent, std::uint64_t coefficient = 1);
  // Builds from terms that are already in canonical order; throws otherwise.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept;
  std::optional<std::uint64_t> as_finite() const noexcept;

  // alpha = limit_part() + finite_part(), limit_part() a limit or 0.
  std::uint64_t finite_part() const noexcept;
  Ordinal limit_part() const;

  const Ordinal& leading_exponent() const;  // requires non-zero
  Ordinal successor() const;
  Ordinal predecessor() const;  // requires is_successor()

  std::string to_string() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

enum class Comparison { LT, EQ, GT };

Comparison compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal operator+(const Ordinal& a, const Ordinal& b);
// The unique d with lo + d == hi; requires lo <= hi.
Ordinal difference(const Ordinal& lo, const Ordinal& hi);

Ordinal fund_seq(const Ordinal& lam, std::uint64_t n);
Ordinal enum_below(const Ordinal& eta, std::uint64_t n);
// Some index n with enum_below(eta, n) == gamma; requires gamma < eta.
std::uint64_t enum_index(const Ordinal& eta, const Ordinal& gamma);

Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& a);
std::string to_string(Comparison c);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

namespace literals {
inline Ordinal operator""_ord(const char* text, std::size_t len) {
  return parse_ordinal(std::string_view(text, len));
}
}  // namespace literals

// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw DomainError("overflow", "coefficient overflow");
  }
  return a + b;
}

}  // namespace detail

inline Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back(Term{Ordinal{}, n});
  return r;
}

inline Ordinal Ordinal::omega() { return power(finite(1)); }

inline Ordinal Ordinal::power(Ordinal exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) r.terms_.push_back(Term{std::move(exponent), coefficient});
  return r;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw DomainError("non-canonical", "zero coefficient");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw DomainError("non-canonical", "exponents not strictly decreasing");
    }
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

inline bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline bool Ordinal::is_limit() const noexcept {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

inline std::optional<std::uint64_t> Ordinal::as_finite() const noexcept {
  if (terms_.empty()) return 0;
  if (is_finite()) return terms_[0].coefficient;
  return std::nullopt;
}

inline std::uint64_t Ordinal::finite_part() const noexcept {
  return is_successor() ? terms_.back().coefficient : 0;
}

inline Ordinal Ordinal::limit_part() const {
  Ordinal r = *this;
  if (r.is_successor()) r.terms_.pop_back();
  return r;
}

inline const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero", "zero has no leading exponent");
  return terms_.front().exponent;
}

inline Ordinal Ordinal::successor() const { return add(*this, finite(1)); }

inline Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("not-a-successor", to_string() + " has no predecessor");
  Ordinal r = *this;
  if (--r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (auto c = ta.exponent <=> tb.exponent; c != 0) return c;
    if (auto c = ta.coefficient <=> tb.coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

inline Comparison compare(const Ordinal& a, const Ordinal& b) {
  const auto c = a <=> b;
  if (c < 0) return Comparison::LT;
  if (c > 0) return Comparison::GT;
  return Comparison::EQ;
}

inline Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    const auto c = t.exponent <=> lead.exponent;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) carry = t.coefficient;
      break;
    }
  }
  out.push_back(Ordinal::Term{lead.exponent, detail::checked_add(carry, lead.coefficient)});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

inline Ordinal difference(const Ordinal& lo, const Ordinal& hi) {
  if (hi < lo) throw DomainError("range", "difference(" + lo.to_string() + ", " + hi.to_string() + ") with lo > hi");
  const auto& a = lo.terms();
  const auto& b = hi.terms();
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k].exponent == b[k].exponent &&
         a[k].coefficient == b[k].coefficient) {
    ++k;
  }
  if (k == b.size()) return Ordinal{};  // lo == hi
  std::vector<Ordinal::Term> out;
  if (k < a.size() && a[k].exponent == b[k].exponent) {
    // same exponent, hi has the larger coefficient
    out.push_back(Ordinal::Term{b[k].exponent, b[k].coefficient - a[k].coefficient});
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k) + 1, b.end());
  } else {
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  }
  return Ordinal::from_terms(std::move(out));
}

// lam = P + w^e*c with c >= 1. For e = e'+1 the n-th element is
// P + w^e*(c-1) + w^e'*n; for limit e it is P + w^e*(c-1) + w^(e[n]).
inline Ordinal fund_seq(const Ordinal& lam, std::uint64_t n) {
  if (!lam.is_limit()) throw NotALimit(lam.to_string() + " is not a limit ordinal");
  std::vector<Ordinal::Term> out(lam.terms().begin(), lam.terms().end() - 1);
  const auto& last = lam.terms().back();
  if (last.coefficient > 1) out.push_back(Ordinal::Term{last.exponent, last.coefficient - 1});
  if (last.exponent.is_successor()) {
    if (n > 0) out.push_back(Ordinal::Term{last.exponent.predecessor(), n});
  } else {
    out.push_back(Ordinal::Term{fund_seq(last.exponent, n), 1});
  }
  return Ordinal::from_terms(std::move(out));
}

namespace detail {

inline constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t interval_size(const Ordinal& length) {
  if (auto f = length.as_finite()) return *f;
  return kInfinite;
}

// Enumeration plan for a limit eta = P + w^e*c. The interval [0, eta) is cut
// into "fixed" intervals (one per unit w^e_t of every term of P, and c-1
// copies of w^e) followed by the "tail" intervals [eta[i-1], eta[i]) of the
// fundamental sequence, with eta[-1] = P + w^e*(c-1). Interval q is then
// visited by a diagonal dovetail: round r emits element r-q of every interval
// q <= r that still has one.
class IntervalPlan {
 public:
  explicit IntervalPlan(const Ordinal& eta) : eta_(eta) {
    Ordinal start;
    const auto& terms = eta.terms();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::uint64_t copies = t + 1 == terms.size() ? terms[t].coefficient - 1 : terms[t].coefficient;
      const Ordinal unit = Ordinal::power(terms[t].exponent);
      for (std::uint64_t u = 0; u < copies; ++u) {
        fixed_starts_.push_back(start);
        fixed_lengths_.push_back(unit);
        start = add(start, unit);
      }
    }
    tail_base_ = start;
    const Ordinal& e = terms.back().exponent;
    if (e.is_successor()) {
      tail0_size_ = 0;
      tail_rest_finite_ = e.predecessor().is_zero();
    } else {
      tail0_size_ = fund_seq(e, 0).is_zero() ? 1 : kInfinite;
      tail_rest_finite_ = false;
    }
  }

  std::uint64_t fixed_count() const { return fixed_starts_.size(); }

  std::uint64_t size(std::uint64_t q) const {
    const std::uint64_t f = fixed_count();
    if (q < f) return kInfinite;
    if (q == f) return tail0_size_;
    return tail_rest_finite_ ? 1 : kInfinite;
  }

  Ordinal start(std::uint64_t q) const {
    const std::uint64_t f = fixed_count();
    if (q < f) return fixed_starts_[q];
    return q == f ? tail_base_ : fund_seq(eta_, q - f - 1);
  }

  Ordinal length(std::uint64_t q) const {
    const std::uint64_t f = fixed_count();
    if (q < f) return fixed_lengths_[q];
    return difference(start(q), fund_seq(eta_, q - f));
  }

  // Number of intervals with an element in round r.
  std::uint64_t emissions(std::uint64_t r) const {
    const std::uint64_t f = fixed_count();
    std::uint64_t count = std::min<std::uint64_t>(f, r + 1);
    if (r >= f) {
      const std::uint64_t t = r - f;
      if (tail0_size_ > t) ++count;
      if (tail_rest_finite_) {
        if (t >= 1) ++count;
      } else {
        count += t;
      }
    }
    return count;
  }

  bool emits(std::uint64_t q, std::uint64_t r) const { return q <= r && size(q) > r - q; }

  Ordinal element(std::uint64_t q, std::uint64_t j) const {
    return add(start(q), enum_below(length(q), j));
  }

  // Interval holding gamma (< eta).
  std::uint64_t locate(const Ordinal& gamma) const {
    for (std::uint64_t q = 0; q < fixed_count(); ++q) {
      if (gamma < add(fixed_starts_[q], fixed_lengths_[q])) return q;
    }
    for (std::uint64_t i = 0;; ++i) {
      if (gamma < fund_seq(eta_, i)) return fixed_count() + i;
    }
  }

 private:
  Ordinal eta_;
  std::vector<Ordinal> fixed_starts_;
  std::vector<Ordinal> fixed_lengths_;
  Ordinal tail_base_;
  std::uint64_t tail0_size_ = 0;
  bool tail_rest_finite_ = false;
};

}  // namespace detail

inline Ordinal enum_below(const Ordinal& eta, std::uint64_t n) {
  if (eta.is_zero()) throw DomainError("empty", "enum_below(0) has nothing to enumerate");
  if (eta.is_successor()) {
    const std::uint64_t m = eta.finite_part();
    const Ordinal lam = eta.limit_part();
    if (n < m) return add(lam, Ordinal::finite(m - 1 - n));
    if (lam.is_zero()) return Ordinal{};
    return enum_below(lam, n - m);
  }
  const detail::IntervalPlan plan(eta);
  std::uint64_t r = 0;
  std::uint64_t seen = 0;
  for (;;) {
    const std::uint64_t e = plan.emissions(r);
    if (n < seen + e) break;
    seen += e;
    ++r;
  }
  std::uint64_t k = n - seen;
  for (std::uint64_t q = 0; q <= r; ++q) {
    if (!plan.emits(q, r)) continue;
    if (k == 0) return plan.element(q, r - q);
    --k;
  }
  throw IterationCeiling("enum_below: round bookkeeping mismatch");
}

inline std::uint64_t enum_index(const Ordinal& eta, const Ordinal& gamma) {
  if (!(gamma < eta)) {
    throw OutOfRange(gamma.to_string() + " is not below " + eta.to_string());
  }
  if (eta.is_successor()) {
    const std::uint64_t m = eta.finite_part();
    const Ordinal lam = eta.limit_part();
    if (lam <= gamma) return m - 1 - *difference(lam, gamma).as_finite();
    return m + enum_index(lam, gamma);
  }
  const detail::IntervalPlan plan(eta);
  const std::uint64_t q = plan.locate(gamma);
  const Ordinal offset = difference(plan.start(q), gamma);
  const std::uint64_t j = enum_index(plan.length(q), offset);
  const std::uint64_t r = q + j;
  std::uint64_t index = 0;
  for (std::uint64_t rr = 0; rr < r; ++rr) index += plan.emissions(rr);
  for (std::uint64_t qq = 0; qq < q; ++qq) {
    if (plan.emits(qq, r)) ++index;
  }
  return index;
}

// Grammar:
//   ordinal := term ("+" term)*
//   term    := "w" ("^" atom)? ("*" nat)? | nat
//   atom    := nat | "w" | "(" ordinal ")"
// Whitespace between tokens is ignored. Sums are normalized with `add`.
namespace detail {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = ordinal();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Ordinal ordinal() {
    Ordinal value = term();
    while (accept('+')) value = add(value, term());
    return value;
  }

  Ordinal term() {
    skip_space();
    if (accept('w')) {
      Ordinal exponent = Ordinal::finite(1);
      if (accept('^')) exponent = atom();
      std::uint64_t coefficient = 1;
      if (accept('*')) coefficient = nat();
      return Ordinal::power(std::move(exponent), coefficient);
    }
    return Ordinal::finite(nat());
  }

  Ordinal atom() {
    skip_space();
    if (accept('w')) return Ordinal::omega();
    if (accept('(')) {
      Ordinal inner = ordinal();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    return Ordinal::finite(nat());
  }

  std::uint64_t nat() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
      fail(pos_ >= text_.size() ? "unexpected end of input" : "expected a number or 'w'");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Ordinal parse_ordinal(std::string_view text) { return detail::OrdinalParser(text).parse(); }

inline std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal::finite(1)) {
      out += '^';
      if (t.exponent.is_finite() || t.exponent == Ordinal::omega()) {
        out += t.exponent.to_string();
      } else {
        out += '(' + t.exponent.to_string() + ')';
      }
    }
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

inline std::string to_string(const Ordinal& a) { return a.to_string(); }

inline std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::LT: return "LT";
    case Comparison::EQ: return "EQ";
    case Comparison::GT: return "GT";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.to_string(); }

}  // namespace cofinal
