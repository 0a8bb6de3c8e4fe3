#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cofinal/ordinal.hpp"

namespace cofinal {

// Finite set of ordinals kept as a strictly increasing vector.
class FiniteOrdinalSet {
 public:
  using const_iterator = std::vector<Ordinal>::const_iterator;

  FiniteOrdinalSet() = default;
  FiniteOrdinalSet(std::initializer_list<Ordinal> items) : FiniteOrdinalSet(std::vector<Ordinal>(items)) {}
  explicit FiniteOrdinalSet(std::vector<Ordinal> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  static FiniteOrdinalSet range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<Ordinal> v;
    for (std::uint64_t i = lo; i < hi; ++i) v.push_back(Ordinal::finite(i));
    return FiniteOrdinalSet(std::move(v));
  }

  const std::vector<Ordinal>& elements() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const Ordinal& operator[](std::size_t i) const { return items_[i]; }
  const Ordinal& max() const { return items_.back(); }

  bool contains(const Ordinal& x) const { return std::binary_search(items_.begin(), items_.end(), x); }

  bool includes(const FiniteOrdinalSet& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
  }

  bool intersects(const FiniteOrdinalSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        return true;
      }
    }
    return false;
  }

  void insert(const Ordinal& x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) items_.insert(it, x);
  }

  void erase(const Ordinal& x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it != items_.end() && *it == x) items_.erase(it);
  }

  // Elements strictly below `bound`.
  FiniteOrdinalSet below(const Ordinal& bound) const {
    FiniteOrdinalSet r;
    r.items_.assign(items_.begin(), std::lower_bound(items_.begin(), items_.end(), bound));
    return r;
  }

  friend FiniteOrdinalSet set_union(const FiniteOrdinalSet& a, const FiniteOrdinalSet& b) {
    FiniteOrdinalSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }

  friend FiniteOrdinalSet set_difference(const FiniteOrdinalSet& a, const FiniteOrdinalSet& b) {
    FiniteOrdinalSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
    return r;
  }

  friend bool operator==(const FiniteOrdinalSet&, const FiniteOrdinalSet&) = default;
  // Lexicographic on the element lists.
  friend bool operator<(const FiniteOrdinalSet& a, const FiniteOrdinalSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ',';
      out += items_[i].to_string();
    }
    return out + "}";
  }

 private:
  std::vector<Ordinal> items_;
};

inline std::ostream& operator<<(std::ostream& os, const FiniteOrdinalSet& s) { return os << s.to_string(); }

// Comma-separated ordinal literals, optionally wrapped in braces; "" and "{}"
// are the empty set. Commas inside parentheses belong to the literal.
inline FiniteOrdinalSet parse_ordinal_set(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw SyntaxError(text.size(), "expected '}'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Ordinal> items;
  std::size_t start = 0;
  int depth = 0;
  bool any = false;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] != ',') {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] != ' ') any = true;
      continue;
    }
    if (i < body.size() && depth > 0) continue;
    const std::string_view piece = body.substr(start, i - start);
    if (piece.find_first_not_of(' ') != std::string_view::npos) {
      try {
        items.push_back(parse_ordinal(piece));
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + e.position(), "in set element: " + std::string(piece));
      }
    } else if (any || i < body.size()) {
      throw SyntaxError(start, "empty set element");
    }
    start = i + 1;
  }
  return FiniteOrdinalSet(std::move(items));
}

}  // namespace cofinal
