#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verdict.hpp"

namespace semiring_lab {

/// Nonzero x with 1 + s·x = t·x for some s, t.
inline ElementSet semi_units(const FiniteSemiring& s) {
  const auto n = static_cast<Element>(s.order());
  ElementSet out = s.empty_set();
  for (Element x = 1; x < n; ++x) {
    ElementSet tx = s.empty_set();
    for (Element t = 0; t < n; ++t) tx.insert(s.mul(t, x));
    for (Element r = 0; r < n && !out.contains(x); ++r)
      if (tx.contains(s.add(1, s.mul(r, x)))) out.insert(x);
  }
  return out;
}

struct SLocalVerdict {
  bool s_local = false;
  std::optional<Ideal> max_ideal;
  bool non_semi_units_ideal = false;  ///< complement of semi_units is a semisubtractive ideal
  bool nsu_agrees = false;            ///< ... and it equals the unique maximal one
};

inline SLocalVerdict is_s_local(const Analysis& an) {
  const auto& s = an.semiring();
  SLocalVerdict v;
  const auto& m = an.maximal_semisubtractive();
  v.s_local = m.size() == 1;
  if (v.s_local) v.max_ideal = m.front();
  const auto nsu = semi_units(s).complement();
  v.non_semi_units_ideal = is_ideal(s, nsu) && an.is_semisubtractive(Ideal::unchecked(nsu));
  v.nsu_agrees = v.s_local && v.non_semi_units_ideal && v.max_ideal->elements() == nsu;
  return v;
}

inline SLocalVerdict is_s_local(const FiniteSemiring& s) { return is_s_local(*analysis_for(s)); }

/// x·a = x·b implies a = b.
inline ElementSet cancellable_elements(const FiniteSemiring& s) {
  const auto n = static_cast<Element>(s.order());
  ElementSet out = s.empty_set();
  for (Element x = 0; x < n; ++x) {
    ElementSet seen = s.empty_set();
    bool injective = true;
    for (Element a = 0; a < n && injective; ++a) {
      injective = !seen.contains(s.mul(x, a));
      seen.insert(s.mul(x, a));
    }
    if (injective) out.insert(x);
  }
  return out;
}

/// S_X for X the cancellable elements. Fractions (a, s) are identified when
/// a·t = b·s; class 0 is (0,1), class 1 is (1,1), the rest follow in order of
/// their least pair.
struct LocalizedSemiring {
  FiniteSemiring base;
  ElementSet X;
  FiniteSemiring semiring;
  std::map<std::pair<Element, Element>, Element> class_of;
  std::vector<std::pair<Element, Element>> representative;
  SemiringHom canonical;  ///< a -> (a, 1)

  Element fraction(Element a, Element s) const { return class_of.at({a, s}); }
};

inline LocalizedSemiring localize(const FiniteSemiring& s) {
  const auto n = static_cast<Element>(s.order());
  const auto x = cancellable_elements(s);
  const auto xs = x.elements();
  auto equivalent = [&](std::pair<Element, Element> p, std::pair<Element, Element> q) {
    return s.mul(p.first, q.second) == s.mul(q.first, p.second);
  };

  std::vector<std::pair<Element, Element>> pairs{{0, 1}, {1, 1}};
  for (Element a = 0; a < n; ++a)
    for (auto t : xs)
      if (!(t == 1 && (a == 0 || a == 1))) pairs.emplace_back(a, t);

  std::map<std::pair<Element, Element>, Element> class_of;
  std::vector<std::pair<Element, Element>> reps;
  for (auto p : pairs) {
    Element k = -1;
    for (std::size_t i = 0; i < reps.size() && k < 0; ++i)
      if (equivalent(p, reps[i])) k = static_cast<Element>(i);
    if (k < 0) {
      k = static_cast<Element>(reps.size());
      reps.push_back(p);
    }
    class_of[p] = k;
  }
  // the relation must be an equivalence for the class map to mean anything
  for (auto p : pairs)
    for (auto q : pairs)
      if (equivalent(p, q) != (class_of[p] == class_of[q])) throw Error("fraction relation is not an equivalence");

  const std::size_t k = reps.size();
  Table add(k, std::vector<int>(k, -1)), mul(k, std::vector<int>(k, -1));
  for (auto p : pairs)
    for (auto q : pairs) {
      const Element sum = class_of.at({s.add(s.mul(p.first, q.second), s.mul(q.first, p.second)), s.mul(p.second, q.second)});
      const Element prod = class_of.at({s.mul(p.first, q.first), s.mul(p.second, q.second)});
      int& sa = add[class_of[p]][class_of[q]];
      int& ma = mul[class_of[p]][class_of[q]];
      if ((sa >= 0 && sa != sum) || (ma >= 0 && ma != prod)) throw Error("fraction operations are not well defined");
      sa = sum;
      ma = prod;
    }
  auto sx = FiniteSemiring::validate(add, mul);
  std::vector<Element> map(n);
  for (Element a = 0; a < n; ++a) map[a] = class_of.at({a, 1});
  auto hom = validate_hom(s, sx, map);
  return {s, x, sx, std::move(class_of), std::move(reps), std::move(hom)};
}

/// 𝔞S_X: the ideal of S_X generated by the fractions a/1, a ∈ 𝔞.
inline Ideal extend_ideal(const LocalizedSemiring& l, const Ideal& a) {
  require_owner(l.base, a);
  return generated_ideal(l.semiring, hom_image(l.canonical, a.elements()));
}

// Replay predicates.

inline bool sus_fails(const Analysis& an, Element x, const Ideal& a) {
  return semi_units(an.semiring()).contains(x) && an.is_semisubtractive(a) && a.contains(x) && a.proper();
}

inline bool sums_fails(const Analysis& an, Element x) {
  const auto& m = an.maximal_semisubtractive();
  const bool outside = std::none_of(m.begin(), m.end(), [&](const Ideal& i) { return i.contains(x); });
  return semi_units(an.semiring()).contains(x) != outside;
}

/// s-local ⟺ non-semi-units form a semisubtractive ideal, and when S is
/// s-local the maximal ideal is exactly the non-semi-units.
inline bool nsu_fails(const Analysis& an) {
  const auto v = is_s_local(an);
  if (v.s_local != v.non_semi_units_ideal) return true;
  return v.s_local && !v.nsu_agrees;
}

inline bool psl_fails(const Analysis& an, const Ideal& a) {
  if (!an.is_semisubtractive(a)) return false;
  const auto l = localize(an.semiring());
  return !is_semisubtractive(l.semiring, extend_ideal(l, a));
}

/// Hypothesis read as X ∩ 𝔪 = ∅.
inline bool slocal_loc_fails(const Analysis& an) {
  const auto v = is_s_local(an);
  if (!v.s_local) return false;
  const auto l = localize(an.semiring());
  if (!(l.X & v.max_ideal->elements()).empty()) return false;
  const auto& lm = analysis_for(l.semiring)->maximal_semisubtractive();
  return lm.size() != 1 || !(lm.front() == extend_ideal(l, *v.max_ideal));
}

inline Verdict audit_sus(const Analysis& an) {
  const auto su = semi_units(an.semiring());
  int checked = 0;
  for (auto x : su.elements())
    for (const auto& a : an.semisubtractive().members()) {
      if (!a.contains(x)) continue;
      ++checked;
      if (sus_fails(an, x, a))
        return Verdict::fail(Witness().element("x", x).set("a", a), "semi-unit x lies in a proper semisubtractive ideal");
    }
  return Verdict::pass(std::to_string(checked) + " instances");
}

inline Verdict audit_sums(const Analysis& an) {
  for (Element x = 0; x < static_cast<Element>(an.order()); ++x)
    if (sums_fails(an, x)) {
      Witness w;
      w.element("x", x);
      for (const auto& m : an.maximal_semisubtractive())
        if (m.contains(x)) {
          w.set("a", m);
          break;
        }
      return Verdict::fail(std::move(w), "semi-unit status of x disagrees with lying outside every maximal semisubtractive ideal");
    }
  return Verdict::pass(std::to_string(an.order()) + " elements");
}

inline Verdict audit_nsu(const Analysis& an) {
  const auto v = is_s_local(an);
  Verdict out = nsu_fails(an) ? Verdict::fail(Witness().set("nonsemiunits", semi_units(an.semiring()).complement()),
                                              v.s_local != v.non_semi_units_ideal
                                                  ? "s-local status and the non-semi-unit ideal test disagree"
                                                  : "non-semi-units differ from the unique maximal semisubtractive ideal")
                              : Verdict::pass(v.s_local ? "s-local" : "not s-local");
  if (v.max_ideal && out.witness) out.witness->set("m", *v.max_ideal);
  out.data = json{{"s_local", v.s_local}, {"non_semi_units_ideal", v.non_semi_units_ideal}, {"nsu_agrees", v.nsu_agrees}};
  return out;
}

inline Verdict audit_psl(const Analysis& an) {
  for (const auto& a : an.semisubtractive().members())
    if (psl_fails(an, a)) return Verdict::fail(Witness().set("a", a), "extension of a is not semisubtractive");
  return Verdict::pass(std::to_string(an.semisubtractive().size()) + " ideals");
}

inline Verdict audit_slocal_loc(const Analysis& an) {
  const auto v = is_s_local(an);
  if (!v.s_local) return Verdict::vacuous("not s-local");
  const auto l = localize(an.semiring());
  if (!(l.X & v.max_ideal->elements()).empty()) return Verdict::vacuous("X meets m");
  if (slocal_loc_fails(an)) return Verdict::fail(Witness().set("m", *v.max_ideal), "S_X is not s-local with maximal ideal mS_X");
  Verdict out = Verdict::pass("hypothesis read as X ∩ m = ∅");
  out.data = json{{"hypothesis_reading", "X ∩ m = ∅"}};
  return out;
}

}  // namespace semiring_lab
