#pragma once

#include <string>
#include <vector>

#include "verdict.hpp"

namespace semiring_lab {

/// An equivalence on S given by a class index per element; classes are
/// numbered in order of their least element.
struct Congruence {
  std::uint64_t owner = 0;
  std::vector<int> class_of;

  bool related(Element x, Element y) const { return class_of[x] == class_of[y]; }
  std::vector<std::vector<Element>> classes() const {
    std::vector<std::vector<Element>> out;
    for (Element x = 0; x < static_cast<Element>(class_of.size()); ++x) {
      if (static_cast<std::size_t>(class_of[x]) >= out.size()) out.resize(class_of[x] + 1);
      out[class_of[x]].push_back(x);
    }
    return out;
  }
  bool operator==(const Congruence&) const = default;
};

inline json to_json(const Congruence& c) { return json(c.classes()); }

/// Compatible with + and · on all triples.
inline bool is_congruence(const FiniteSemiring& s, const Congruence& c) {
  const auto n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (!c.related(s.add(x, z), s.add(y, z)) || !c.related(s.mul(x, z), s.mul(y, z))) return false;
    }
  return true;
}

/// The raw relation x ~ y ⟺ ∃d ∈ 𝔞∩V(S): x = y + d, as a matrix.
inline std::vector<std::vector<bool>> s_relation(const FiniteSemiring& s, const Ideal& a) {
  const auto n = static_cast<Element>(s.order());
  const auto d = a.elements() & invertible_set(s);
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Element y = 0; y < n; ++y) d.for_each([&](Element e) { r[s.add(y, e)][y] = true; });
  return r;
}

inline bool is_equivalence(const std::vector<std::vector<bool>>& r) {
  const auto n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!r[x][x]) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (r[x][y] != r[y][x]) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (r[x][y] && r[y][z] && !r[x][z]) return false;
    }
  }
  return true;
}

/// Φ(𝔞). Throws NotSemisubtractive; an Error if the relation is not an
/// equivalence (which the congruence proposition rules out).
inline Congruence s_congruence(const FiniteSemiring& s, const Ideal& a) {
  require_owner(s, a);
  if (!is_semisubtractive(s, a)) throw NotSemisubtractive();
  const auto r = s_relation(s, a);
  if (!is_equivalence(r)) throw Error("s-relation is not an equivalence");
  Congruence c{s.fingerprint(), std::vector<int>(s.order(), -1)};
  int next = 0;
  for (std::size_t x = 0; x < s.order(); ++x) {
    if (c.class_of[x] >= 0) continue;
    for (std::size_t y = x; y < s.order(); ++y)
      if (r[x][y]) c.class_of[y] = next;
    ++next;
  }
  return c;
}

/// Ψ(~): the class of 0.
inline Ideal ideal_of(const FiniteSemiring& s, const Congruence& c) {
  if (c.owner != s.fingerprint()) throw OwnerMismatch();
  ElementSet z = s.empty_set();
  for (Element x = 0; x < static_cast<Element>(s.order()); ++x)
    if (c.related(x, 0)) z.insert(x);
  return Ideal(s, z);
}

// Replay predicates.

/// Φ(𝔞) is an equivalence compatible with both operations, and Ψ of it is a
/// semisubtractive ideal.
inline bool cong_fails(const Analysis& an, const Ideal& a) {
  const auto& s = an.semiring();
  if (!an.is_semisubtractive(a)) return false;
  const auto r = s_relation(s, a);
  if (!is_equivalence(r)) return true;
  const auto c = s_congruence(s, a);
  if (!is_congruence(s, c)) return true;
  const auto z = ideal_of(s, c).elements();
  return !is_ideal(s, z) || !an.is_semisubtractive(Ideal::unchecked(z));
}

/// Ψ(Φ(𝔞)) = 𝔞 and Φ(Ψ(Φ(𝔞))) = Φ(𝔞).
inline bool bijection_fails(const Analysis& an, const Ideal& a) {
  const auto& s = an.semiring();
  if (!an.is_semisubtractive(a)) return false;
  const auto phi = s_congruence(s, a);
  const auto psi = ideal_of(s, phi);
  if (!(psi == a)) return true;
  return !(s_congruence(s, psi) == phi);
}

/// The round trip on the family {𝔞 ∈ Id_s : 𝔞 ⊆ V(S)}, together with the
/// identity Ψ(Φ(𝔞)) = 𝔞 ∩ V(S) for every semisubtractive 𝔞.
inline bool bijection_restricted_fails(const Analysis& an, const Ideal& a) {
  const auto& s = an.semiring();
  if (!an.is_semisubtractive(a)) return false;
  const auto psi = ideal_of(s, s_congruence(s, a));
  if (!(psi.elements() == (a.elements() & an.invertible()))) return true;
  return a.elements().subset_of(an.invertible()) && bijection_fails(an, a);
}

inline Verdict audit_cong(const Analysis& an) {
  for (const auto& a : an.semisubtractive().members())
    if (cong_fails(an, a)) return Verdict::fail(Witness().set("a", a), "Φ(a) is not a congruence with semisubtractive zero class");
  return Verdict::pass(std::to_string(an.semisubtractive().size()) + " ideals");
}

inline Verdict audit_bijection(const Analysis& an) {
  const auto& s = an.semiring();
  Verdict v = Verdict::pass(std::to_string(an.semisubtractive().size()) + " ideals");
  json trips = json::array();
  for (const auto& a : an.semisubtractive().members()) {
    const auto psi = ideal_of(s, s_congruence(s, a));
    trips.push_back(json{{"a", to_json(a.elements())},
                         {"psi_phi", to_json(psi.elements())},
                         {"equals_a_cap_V", psi.elements() == (a.elements() & an.invertible())}});
    if (v.status == Status::pass && bijection_fails(an, a)) v = Verdict::fail(Witness().set("a", a), "Ψ(Φ(a)) differs from a");
  }
  v.data["round_trips"] = trips;
  return v;
}

inline Verdict audit_bijection_restricted(const Analysis& an) {
  int restricted = 0;
  for (const auto& a : an.semisubtractive().members()) {
    restricted += a.elements().subset_of(an.invertible()) ? 1 : 0;
    if (bijection_restricted_fails(an, a))
      return Verdict::fail(Witness().set("a", a), "round trip fails on the family inside V(S)");
  }
  Verdict v = Verdict::pass(std::to_string(restricted) + " ideals inside V(S)");
  v.data["restricted_family_size"] = restricted;
  return v;
}

}  // namespace semiring_lab
