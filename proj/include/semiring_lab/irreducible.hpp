#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verdict.hpp"

namespace semiring_lab {

/// 𝔟 ∩ 𝔟' = 𝔞 forces 𝔟 = 𝔞 or 𝔟' = 𝔞, for 𝔟, 𝔟' in the family.
inline bool is_irreducible(const FiniteSemiring& s, const Ideal& a, const IdealFamily& family) {
  if (!family.contains(a)) throw NotMember();
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (ideal_intersection(s, m[i], m[j]) == a && !(m[i] == a) && !(m[j] == a)) return false;
  return true;
}

/// 𝔟 ∩ 𝔟' ⊆ 𝔞 forces 𝔟 ⊆ 𝔞 or 𝔟' ⊆ 𝔞.
inline bool is_strongly_irreducible(const FiniteSemiring& s, const Ideal& a, const IdealFamily& family) {
  if (!family.contains(a)) throw NotMember();
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (ideal_intersection(s, m[i], m[j]).subset_of(a) && !m[i].subset_of(a) && !m[j].subset_of(a)) return false;
  return true;
}

inline std::vector<Ideal> s_irreducible_above(const Analysis& an, const Ideal& c, bool strongly) {
  std::vector<Ideal> out;
  for (const auto& b : an.semisubtractive().members()) {
    if (!c.subset_of(b)) continue;
    const bool ok = strongly ? is_strongly_irreducible(an.semiring(), b, an.semisubtractive())
                             : is_irreducible(an.semiring(), b, an.semisubtractive());
    if (ok) out.push_back(b);
  }
  return out;
}

/// An irredundant family of s-irreducible ideals whose intersection is 𝔠,
/// or nothing when even all of them together do not cut down to 𝔠.
inline std::optional<std::vector<Ideal>> irreducible_decomposition(const Analysis& an, const Ideal& c) {
  if (!c.proper()) throw NotProper();
  if (!an.is_semisubtractive(c)) throw NotSemisubtractive();
  const auto& s = an.semiring();
  auto parts = s_irreducible_above(an, c, false);
  if (!(ideal_intersection(s, parts) == c)) return std::nullopt;
  for (std::size_t i = 0; i < parts.size();) {
    auto rest = parts;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!rest.empty() && ideal_intersection(s, rest) == c)
      parts = std::move(rest);
    else
      ++i;
  }
  return parts;
}

/// A minimal proper s-strongly irreducible ideal above 𝔞; ties go to the
/// lexicographically least element list.
inline std::optional<Ideal> minimal_s_strongly_irreducible_above(const Analysis& an, const Ideal& a) {
  if (!a.proper()) throw NotProper();
  if (!an.is_semisubtractive(a)) throw NotSemisubtractive();
  std::vector<Ideal> e;
  for (const auto& b : s_irreducible_above(an, a, true))
    if (b.proper()) e.push_back(b);
  std::optional<Ideal> best;
  for (const auto& b : e) {
    const bool minimal = std::none_of(e.begin(), e.end(), [&](const Ideal& o) { return o.elements().proper_subset_of(b.elements()); });
    if (minimal && (!best || b.elements().elements() < best->elements().elements())) best = b;
  }
  return best;
}

// Replay predicates.

/// `strongly` picks the strongly-irreducible half of the theorem.
inline bool eqsi_fails(const Analysis& an, const Ideal& c, bool strongly) {
  const auto& s = an.semiring();
  const bool ss = an.is_semisubtractive(c);
  const bool lhs = ss && (strongly ? is_strongly_irreducible(s, c, an.semisubtractive()) : is_irreducible(s, c, an.semisubtractive()));
  const bool rhs = ss && (strongly ? is_strongly_irreducible(s, c, an.ideals()) : is_irreducible(s, c, an.ideals()));
  return lhs != rhs;
}

inline bool abi_elementwise(const Analysis& an, const Ideal& c) {
  const auto& s = an.semiring();
  const auto n = static_cast<Element>(s.order());
  std::vector<Ideal> cz;
  for (Element x = 0; x < n; ++x) cz.push_back(an.closure(principal_ideal(s, x)));
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      if (ideal_intersection(s, cz[x], cz[y]).subset_of(c) && !c.contains(x) && !c.contains(y)) return false;
  return true;
}

inline bool abi_fails(const Analysis& an, const Ideal& c) {
  if (!an.is_semisubtractive(c)) return false;
  return is_strongly_irreducible(an.semiring(), c, an.semisubtractive()) != abi_elementwise(an, c);
}

inline bool lir_fails(const Analysis& an, Element x, const Ideal& c) {
  if (x == 0 || c.contains(x) || !c.proper() || !an.is_semisubtractive(c)) return false;
  for (const auto& b : s_irreducible_above(an, c, false))
    if (!b.contains(x)) return false;
  return true;
}

inline bool decomp_fails(const Analysis& an, const Ideal& c) {
  if (!c.proper() || !an.is_semisubtractive(c)) return false;
  return !(ideal_intersection(an.semiring(), s_irreducible_above(an, c, false)) == c);
}

/// S itself counts as its own one-term decomposition.
inline bool decomp_finite_fails(const Analysis& an, const Ideal& c) {
  if (!an.is_semisubtractive(c)) return false;
  if (!c.proper()) return !is_irreducible(an.semiring(), c, an.semisubtractive());
  return !irreducible_decomposition(an, c).has_value();
}

inline bool minssi_fails(const Analysis& an, const Ideal& a) {
  if (!a.proper() || !an.is_semisubtractive(a)) return false;
  return !minimal_s_strongly_irreducible_above(an, a).has_value();
}

/// Forward half: in an arithmetic S, s-irreducible ⟺ s-strongly irreducible.
inline bool arith_forward_fails(const Analysis& an, const Ideal& c) {
  if (!an.is_semisubtractive(c) || !distributivity_audit(an.semiring(), an.ideals()).holds) return false;
  const auto& s = an.semiring();
  return is_irreducible(s, c, an.semisubtractive()) != is_strongly_irreducible(s, c, an.semisubtractive());
}

inline bool irreducibility_coincides(const Analysis& an) {
  for (const auto& c : an.semisubtractive().members())
    if (is_irreducible(an.semiring(), c, an.semisubtractive()) && !is_strongly_irreducible(an.semiring(), c, an.semisubtractive()))
      return false;
  return true;
}

/// Converse half: every s-irreducible ideal being s-strongly irreducible
/// should make Id(S) distributive; the triple is where it is not.
inline bool arith_converse_fails(const Analysis& an, const Ideal& a, const Ideal& b, const Ideal& c) {
  return irreducibility_coincides(an) && distributive_law_fails(an.semiring(), a, b, c);
}

inline bool arith_cor_fails(const Analysis& an, const Ideal& c) {
  if (!an.is_semisubtractive(c) || !distributivity_audit(an.semiring(), an.ideals()).holds) return false;
  return !(ideal_intersection(an.semiring(), s_irreducible_above(an, c, true)) == c);
}

namespace detail {

template <typename Pred>
Verdict per_ideal(const std::vector<Ideal>& ideals, Pred fails, const std::string& why) {
  int checked = 0;
  for (const auto& c : ideals) {
    ++checked;
    if (fails(c)) return Verdict::fail(Witness().set("c", c), why);
  }
  if (checked == 0) return Verdict::vacuous("no eligible ideal");
  return Verdict::pass(std::to_string(checked) + " ideals");
}

inline std::vector<Ideal> proper_members(const IdealFamily& f) {
  std::vector<Ideal> out;
  for (const auto& a : f.members())
    if (a.proper()) out.push_back(a);
  return out;
}

}  // namespace detail

inline Verdict audit_eqsi(const Analysis& an) {
  int checked = 0;
  for (const auto& c : an.ideals().members())
    for (int strongly = 0; strongly < 2; ++strongly) {
      ++checked;
      if (eqsi_fails(an, c, strongly != 0))
        return Verdict::fail(Witness().set("c", c),
                             strongly ? "s-strong irreducibility differs from strong irreducibility plus semisubtractivity"
                                      : "s-irreducibility differs from irreducibility plus semisubtractivity");
    }
  return Verdict::pass(std::to_string(checked) + " instances");
}

inline Verdict audit_abi(const Analysis& an) {
  return detail::per_ideal(an.semisubtractive().members(), [&](const Ideal& c) { return abi_fails(an, c); },
                           "s-strong irreducibility differs from the elementwise criterion");
}

inline Verdict audit_lir(const Analysis& an) {
  int checked = 0;
  for (const auto& c : detail::proper_members(an.semisubtractive()))
    for (Element x = 1; x < static_cast<Element>(an.order()); ++x) {
      if (c.contains(x)) continue;
      ++checked;
      if (lir_fails(an, x, c)) return Verdict::fail(Witness().set("c", c).element("x", x), "every s-irreducible ideal above c contains x");
    }
  if (checked == 0) return Verdict::vacuous("no proper semisubtractive ideal misses a nonzero element");
  return Verdict::pass(std::to_string(checked) + " instances");
}

inline Verdict audit_decomp(const Analysis& an) {
  return detail::per_ideal(detail::proper_members(an.semisubtractive()), [&](const Ideal& c) { return decomp_fails(an, c); },
                           "c is not the intersection of the s-irreducible ideals above it");
}

inline Verdict audit_decomp_finite(const Analysis& an) {
  auto v = detail::per_ideal(an.semisubtractive().members(), [&](const Ideal& c) { return decomp_finite_fails(an, c); },
                             "c is not a finite intersection of s-irreducible ideals");
  if (v.status == Status::pass) {
    json d = json::array();
    for (const auto& c : detail::proper_members(an.semisubtractive())) {
      json parts = json::array();
      const auto decomposition = irreducible_decomposition(an, c);
      for (const auto& p : *decomposition) parts.push_back(to_json(p.elements()));
      d.push_back(json{{"c", to_json(c.elements())}, {"parts", parts}});
    }
    v.data["decompositions"] = d;
  }
  return v;
}

inline Verdict audit_minssi(const Analysis& an) {
  auto v = detail::per_ideal(detail::proper_members(an.semisubtractive()), [&](const Ideal& a) { return minssi_fails(an, a); },
                             "no proper s-strongly irreducible ideal lies above c");
  json maxes = json::array();
  for (const auto& m : an.maximal_semisubtractive())
    maxes.push_back(json{{"m", to_json(m.elements())},
                         {"prime", an.is_prime(m)},
                         {"s_strongly_irreducible", is_strongly_irreducible(an.semiring(), m, an.semisubtractive())}});
  v.data["maximal_semisubtractive"] = maxes;
  return v;
}

inline Verdict audit_arith(const Analysis& an) {
  const auto& s = an.semiring();
  const auto dist = distributivity_audit(s, an.ideals());
  Verdict v = Verdict::pass(dist.holds ? "arithmetic" : "not arithmetic");
  if (dist.holds) {
    for (const auto& c : an.semisubtractive().members())
      if (arith_forward_fails(an, c)) {
        v = Verdict::fail(Witness().set("c", c), "arithmetic, yet c is s-irreducible but not s-strongly irreducible");
        break;
      }
  } else if (irreducibility_coincides(an)) {
    const auto& t = *dist.counterexample;
    v = Verdict::fail(Witness().set("a", t[0]).set("b", t[1]).set("c", t[2]),
                      "every s-irreducible ideal is s-strongly irreducible, yet Id(S) is not distributive");
  }
  v.data = json{{"arithmetic", dist.holds}, {"irreducibility_coincides", irreducibility_coincides(an)}};
  return v;
}

inline Verdict audit_arith_cor(const Analysis& an) {
  if (!distributivity_audit(an.semiring(), an.ideals()).holds) return Verdict::vacuous("not arithmetic");
  return detail::per_ideal(an.semisubtractive().members(), [&](const Ideal& c) { return arith_cor_fails(an, c); },
                           "c is not the intersection of the s-strongly irreducible ideals above it");
}

}  // namespace semiring_lab
