#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "semiring.hpp"

namespace semiring_lab {

using json = nlohmann::ordered_json;

inline json to_json(const FiniteSemiring& s) {
  return json{{"order", s.order()}, {"add", s.add_table()}, {"mul", s.mul_table()}};
}

inline json to_json(const ElementSet& x) { return json(x.elements()); }

namespace detail {

inline Table table_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw MalformedTables(std::string("missing table '") + key + "'");
  Table t;
  for (const auto& row : j.at(key)) {
    if (!row.is_array()) throw MalformedTables(std::string("table '") + key + "' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw MalformedTables(std::string("table '") + key + "' entries must be integers");
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

/// Moves the additive identity to index 0 and the multiplicative identity to
/// index 1, keeping the remaining elements in their original relative order.
/// Tables without distinct identities are returned unchanged so validation
/// reports the precise axiom failure.
inline std::pair<Table, Table> normalize_identities(const Table& add, const Table& mul) {
  const int n = static_cast<int>(add.size());
  auto identity_row = [n](const Table& t, int e) {
    for (int x = 0; x < n; ++x)
      if (t[e].size() != static_cast<std::size_t>(n) || t[e][x] != x) return false;
    return true;
  };
  int zero = -1, one = -1;
  for (int e = 0; e < n; ++e) {
    if (zero < 0 && identity_row(add, e)) zero = e;
    if (one < 0 && identity_row(mul, e)) one = e;
  }
  if (zero < 0 || one < 0 || zero == one || (zero == 0 && one == 1)) return {add, mul};
  std::vector<int> perm(n, -1);
  perm[zero] = 0;
  perm[one] = 1;
  int next = 2;
  for (int e = 0; e < n; ++e)
    if (perm[e] < 0) perm[e] = next++;
  Table a(n, std::vector<int>(n)), m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ai = add[i][j], mi = mul[i][j];
      if (ai < 0 || ai >= n || mi < 0 || mi >= n) return {add, mul};
      a[perm[i]][perm[j]] = perm[ai];
      m[perm[i]][perm[j]] = perm[mi];
    }
  return {a, m};
}

}  // namespace detail

/// Reads `{"order": n, "add": [[...]], "mul": [[...]]}` and validates it.
inline FiniteSemiring semiring_from_json(const json& j) {
  if (!j.is_object()) throw MalformedTables("semiring JSON must be an object");
  auto add = detail::table_from_json(j, "add");
  auto mul = detail::table_from_json(j, "mul");
  if (j.contains("order") && j.at("order").get<std::size_t>() != add.size())
    throw MalformedTables("'order' does not match the table size");
  auto [a, m] = detail::normalize_identities(add, mul);
  return FiniteSemiring::validate(a, m);
}

inline ElementSet element_set_from_json(const FiniteSemiring& s, const json& j) {
  if (!j.is_array()) throw BadParams("element set must be an array of indices");
  std::vector<Element> xs;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw BadParams("element indices must be integers");
    xs.push_back(v.get<int>());
  }
  return s.set_of(xs);
}

inline json to_json(const SemiringHom& h) {
  return json{{"source", to_json(h.source)}, {"target", to_json(h.target)}, {"map", h.map}};
}

inline SemiringHom hom_from_json(const json& j) {
  auto source = semiring_from_json(j.at("source"));
  auto target = semiring_from_json(j.at("target"));
  return validate_hom(source, target, j.at("map").get<std::vector<Element>>());
}

}  // namespace semiring_lab
