#pragma once

// JSON import/export with ordinals as canonical literals.
//
//   window       {"bound": "w^2", "seed": 1, "members": [["0","1"], ...]}
//   exceptions   {"lower": "w", "upper": "w*2", "points": ["0", ...]}
//   shattering   {"set": ["0","w"], "witnesses": {"0": 4, "1": 0, ...}}

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cofinal/closed_family.hpp"
#include "cofinal/error.hpp"
#include "cofinal/omega_orders.hpp"
#include "cofinal/ordinal_set.hpp"
#include "cofinal/relations.hpp"

namespace cofinal {

using Json = nlohmann::ordered_json;

inline Json ordinal_set_to_json(const FiniteOrdinalSet& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(x.to_string());
  return out;
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError("json", std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Ordinal ordinal_field(const Json& j) {
  if (!j.is_string()) throw DomainError("json", "ordinals must be string literals");
  return parse_ordinal(j.get<std::string>());
}

}  // namespace detail

inline FiniteOrdinalSet ordinal_set_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("json", "expected an array of ordinal literals");
  std::vector<Ordinal> items;
  for (const auto& e : j) items.push_back(detail::ordinal_field(e));
  return FiniteOrdinalSet(std::move(items));
}

inline Json window_to_json(const FamilyWindow& w) {
  Json members = Json::array();
  for (const auto& m : w.members) members.push_back(ordinal_set_to_json(m));
  return Json{{"bound", w.bound.to_string()}, {"seed", w.seed}, {"members", std::move(members)}};
}

// Members are re-sorted and deduplicated; count is the member count.
inline FamilyWindow window_from_json(const Json& j) {
  FamilyWindow w;
  w.bound = detail::ordinal_field(detail::field(j, "bound"));
  const Json& seed = detail::field(j, "seed");
  if (!seed.is_number_unsigned()) throw DomainError("json", "seed must be a non-negative integer");
  w.seed = seed.get<std::uint64_t>();
  const Json& members = detail::field(j, "members");
  if (!members.is_array()) throw DomainError("json", "members must be an array");
  std::set<FiniteOrdinalSet> sorted;
  for (const auto& m : members) sorted.insert(ordinal_set_from_json(m));
  w.members.assign(sorted.begin(), sorted.end());
  w.count = w.members.size();
  return w;
}

inline Json cert_to_json(const ExceptionCert& c) {
  return Json{{"lower", c.lower.to_string()}, {"upper", c.upper.to_string()}, {"points", ordinal_set_to_json(c.points)}};
}

inline ExceptionCert cert_from_json(const Json& j) {
  return ExceptionCert{detail::ordinal_field(detail::field(j, "lower")),
                       detail::ordinal_field(detail::field(j, "upper")),
                       ordinal_set_from_json(detail::field(j, "points"))};
}

inline Json shatter_to_json(const ShatterCertificate& c) {
  Json set = Json::array();
  for (const auto& x : c.set) set.push_back(x.to_string());
  Json witnesses = Json::object();
  for (const auto& [mask, index] : c.witnesses) witnesses[std::to_string(mask)] = index;
  return Json{{"set", std::move(set)}, {"witnesses", std::move(witnesses)}};
}

inline ShatterCertificate shatter_from_json(const Json& j) {
  ShatterCertificate c;
  const Json& set = detail::field(j, "set");
  if (!set.is_array()) throw DomainError("json", "set must be an array");
  for (const auto& e : set) c.set.push_back(detail::ordinal_field(e));
  const Json& witnesses = detail::field(j, "witnesses");
  if (!witnesses.is_object()) throw DomainError("json", "witnesses must be an object");
  for (const auto& [key, value] : witnesses.items()) {
    std::size_t used = 0;
    Mask mask = 0;
    try {
      mask = std::stoull(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw DomainError("json", "witness key \"" + key + "\" is not a bitmask");
    if (!value.is_number_unsigned()) throw DomainError("json", "witness indices must be non-negative integers");
    c.witnesses.emplace(mask, value.get<std::size_t>());
  }
  return c;
}

}  // namespace cofinal
