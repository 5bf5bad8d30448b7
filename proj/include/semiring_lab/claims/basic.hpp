#pragma once

#include <string>
#include <vector>

#include "../context.hpp"

// Predicates and evaluators for the elementary claims: V(S), closure of
// Id_s under the ideal operations, contraction along homs, Golan closure,
// maximal semisubtractive ideals and modularity. Each *_fails predicate
// takes the witness objects directly; evaluators search all candidates in
// deterministic order and report the first failure.

namespace semiring_lab::claims {

namespace detail {

inline bool ss_ideal(const Analysis& an, const Ideal& a) { return an.is_semisubtractive(a); }

inline bool ss_set(const Analysis& an, const ElementSet& x) {
  return is_ideal(an.semiring(), x) && an.is_semisubtractive(Ideal::unchecked(x));
}

inline Verdict passed(int checked, const char* what) {
  if (checked == 0) return Verdict::vacuous(std::string("no ") + what);
  return Verdict::pass(std::to_string(checked) + " " + what);
}

template <typename Pred>
Verdict over_ideals(const std::vector<Ideal>& xs, Pred fails, const char* why) {
  for (const auto& a : xs)
    if (fails(a)) return Verdict::fail(Witness().set("a", a), why);
  return passed(static_cast<int>(xs.size()), "ideals");
}

template <typename Pred>
Verdict over_pairs(const std::vector<Ideal>& xs, const std::vector<Ideal>& ys, Pred fails, const char* why) {
  int n = 0;
  for (const auto& a : xs)
    for (const auto& b : ys) {
      ++n;
      if (fails(a, b)) return Verdict::fail(Witness().set("a", a).set("b", b), why);
    }
  return passed(n, "pairs");
}

template <typename Pred>
Verdict over_triples(const std::vector<Ideal>& xs, const std::vector<Ideal>& ys, const std::vector<Ideal>& zs, Pred fails,
                     const char* why) {
  int n = 0;
  for (const auto& a : xs)
    for (const auto& b : ys)
      for (const auto& c : zs) {
        ++n;
        if (fails(a, b, c)) return Verdict::fail(Witness().set("a", a).set("b", b).set("c", c), why);
      }
  return passed(n, "triples");
}

}  // namespace detail

// V(S)

inline bool epvs1_fails(const Analysis& an) { return !an.invertible().contains(0); }

inline bool epvs2_fails(const Analysis& an, Element x, Element y) {
  const auto& v = an.invertible();
  return v.contains(x) && v.contains(y) && !v.contains(an.semiring().add(x, y));
}

inline bool epvs3_fails(const Analysis& an, Element x, Element y) {
  const auto& v = an.invertible();
  return v.contains(an.semiring().add(x, y)) && !(v.contains(x) && v.contains(y));
}

/// (S, +) is a group iff every equation a + x = b is solvable.
inline bool additive_group(const FiniteSemiring& s) {
  const auto n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a) {
    ElementSet row = s.empty_set();
    for (Element x = 0; x < n; ++x) row.insert(s.add(a, x));
    if (!row.is_full()) return false;
  }
  return true;
}

inline bool epvs4_fails(const Analysis& an) { return additive_group(an.semiring()) != an.invertible().is_full(); }

inline Verdict eval_epvs1(const EvalContext& c) {
  if (epvs1_fails(c.analysis())) return Verdict::fail(Witness(), "0 has no additive inverse");
  return Verdict::pass();
}

template <typename Pred>
Verdict over_element_pairs(const Analysis& an, Pred fails, const char* why) {
  const auto n = static_cast<Element>(an.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (fails(an, x, y)) return Verdict::fail(Witness().element("x", x).element("y", y), why);
  return Verdict::pass(std::to_string(n * n) + " pairs");
}

inline Verdict eval_epvs2(const EvalContext& c) { return over_element_pairs(c.analysis(), epvs2_fails, "V(S) not closed under +"); }
inline Verdict eval_epvs3(const EvalContext& c) {
  return over_element_pairs(c.analysis(), epvs3_fails, "a sum in V(S) has a summand outside V(S)");
}
inline Verdict eval_epvs4(const EvalContext& c) {
  if (epvs4_fails(c.analysis())) return Verdict::fail(Witness(), "ring test and V(S) = S disagree");
  return Verdict::pass(is_ring(c.analysis().semiring()) ? "ring" : "not a ring");
}

// Id_s under the ideal operations

inline bool bpss1_fails(const Analysis& an, const Ideal& a) {
  const auto& s = an.semiring();
  return (is_subtractive(s, a) || is_strongly_subtractive(s, a)) && !an.is_semisubtractive(a);
}
inline bool bpss2_fails(const Analysis& an, const Ideal& p) { return an.is_prime(p) && !an.is_semisubtractive(p); }
inline bool bpss3_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  return an.is_semisubtractive(a) && an.is_semisubtractive(b) && !an.is_semisubtractive(ideal_intersection(an.semiring(), a, b));
}
inline bool bpss4_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  return an.is_semisubtractive(a) && an.is_semisubtractive(b) && !an.is_semisubtractive(ideal_sum(an.semiring(), a, b));
}
inline bool bpss5_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  return an.is_semisubtractive(a) && an.is_semisubtractive(b) && !an.is_semisubtractive(ideal_product(an.semiring(), a, b));
}
inline bool bpss6_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  return an.is_semisubtractive(a) && !an.is_semisubtractive(colon(an.semiring(), a, b));
}

/// The colon/intersection combinations, for whichever shapes the triple
/// fits: a semisubtractive with b, c arbitrary; or a, b semisubtractive.
inline bool bpss7_fails(const Analysis& an, const Ideal& a, const Ideal& b, const Ideal& c) {
  const auto& s = an.semiring();
  auto ss = [&](const Ideal& x) { return an.is_semisubtractive(x); };
  if (ss(a)) {
    const Ideal built[] = {colon(s, a, b),
                           colon(s, colon(s, a, b), c),
                           colon(s, a, ideal_product(s, b, c)),
                           colon(s, colon(s, a, c), b),
                           colon(s, a, ideal_sum(s, b, c)),
                           ideal_intersection(s, colon(s, a, b), colon(s, a, c))};
    for (const auto& x : built)
      if (!ss(x)) return true;
  }
  if (ss(a) && ss(b)) {
    if (!ss(colon(s, ideal_intersection(s, a, b), c))) return true;
    if (!ss(ideal_intersection(s, colon(s, a, c), colon(s, b, c)))) return true;
  }
  return false;
}

inline bool bpss8_fails(const Analysis& an, const ElementSet& x) {
  return !x.empty() && !an.is_semisubtractive(annihilator(an.semiring(), x));
}
inline bool bpss9_fails(const Analysis& an, const Ideal& a) { return !an.is_semisubtractive(an.radical_of(a)); }
inline bool bpss10_fails(const Analysis& an, const Ideal& a) {
  return an.is_semisubtractive(a) && !detail::ss_set(an, a.elements() & an.nilradical_set());
}
inline bool nilradical_is_radical_of_zero_fails(const Analysis& an) {
  return !(an.radical_of(an.zero()).elements() == an.nilradical_set());
}

inline Verdict eval_bpss1(const EvalContext& c) {
  const auto& an = c.analysis();
  return detail::over_ideals(an.ideals().members(), [&](const Ideal& a) { return bpss1_fails(an, a); },
                             "subtractive ideal that is not semisubtractive");
}
inline Verdict eval_bpss2(const EvalContext& c) {
  const auto& an = c.analysis();
  return detail::over_ideals(an.primes(), [&](const Ideal& a) { return bpss2_fails(an, a); }, "prime ideal that is not semisubtractive");
}

template <bool (*F)(const Analysis&, const Ideal&, const Ideal&)>
Verdict ss_pairs(const EvalContext& c, bool second_arbitrary, const char* why) {
  const auto& an = c.analysis();
  const auto& ys = second_arbitrary ? an.ideals().members() : an.semisubtractive().members();
  return detail::over_pairs(an.semisubtractive().members(), ys, [&](const Ideal& a, const Ideal& b) { return F(an, a, b); }, why);
}

inline Verdict eval_bpss3(const EvalContext& c) { return ss_pairs<bpss3_fails>(c, false, "intersection is not semisubtractive"); }
inline Verdict eval_bpss4(const EvalContext& c) { return ss_pairs<bpss4_fails>(c, false, "sum is not semisubtractive"); }
inline Verdict eval_bpss5(const EvalContext& c) { return ss_pairs<bpss5_fails>(c, false, "product is not semisubtractive"); }
inline Verdict eval_bpss6(const EvalContext& c) { return ss_pairs<bpss6_fails>(c, true, "colon ideal is not semisubtractive"); }

inline Verdict eval_bpss7(const EvalContext& c) {
  const auto& an = c.analysis();
  const auto& all = an.ideals().members();
  return detail::over_triples(an.semisubtractive().members(), all, all,
                              [&](const Ideal& a, const Ideal& b, const Ideal& x) { return bpss7_fails(an, a, b, x); },
                              "a colon/intersection combination is not semisubtractive");
}

inline Verdict eval_bpss8(const EvalContext& c) {
  const auto& an = c.analysis();
  const auto n = an.order();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet x = an.semiring().empty_set();
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1) x.insert(static_cast<Element>(i));
    if (bpss8_fails(an, x)) return Verdict::fail(Witness().set("X", x), "annihilator is not semisubtractive");
  }
  return Verdict::pass(std::to_string((std::uint64_t{1} << n) - 1) + " subsets");
}

inline Verdict eval_bpss9(const EvalContext& c) {
  const auto& an = c.analysis();
  auto v = detail::over_ideals(an.ideals().members(), [&](const Ideal& a) { return bpss9_fails(an, a); }, "radical is not semisubtractive");
  v.data["radical_of_S"] = "S (empty intersection convention)";
  return v;
}

inline Verdict eval_bpss10(const EvalContext& c) {
  const auto& an = c.analysis();
  if (nilradical_is_radical_of_zero_fails(an)) return Verdict::fail(Witness(), "nilradical differs from the radical of 0");
  return detail::over_ideals(an.semisubtractive().members(), [&](const Ideal& a) { return bpss10_fails(an, a); },
                             "a ∩ N(S) is not semisubtractive");
}

// Contraction along homs

inline bool cep1_fails(const SemiringHom& h, const Ideal& b) {
  const auto tgt = analysis_for(h.target);
  return tgt->is_semisubtractive(b) && !analysis_for(h.source)->is_semisubtractive(hom_preimage(h, b));
}
inline bool cep2_fails(const SemiringHom& h) { return !analysis_for(h.source)->is_semisubtractive(hom_kernel(h)); }
inline bool cep3_fails(const SemiringHom& h, const Ideal& b1, const Ideal& b2) {
  const auto tgt = analysis_for(h.target);
  if (!tgt->is_semisubtractive(b1) || !tgt->is_semisubtractive(b2)) return false;
  const auto& s = h.source;
  const auto& t = h.target;
  const auto c1 = hom_preimage(h, b1), c2 = hom_preimage(h, b2);
  if (!(hom_preimage(h, ideal_intersection(t, b1, b2)) == ideal_intersection(s, c1, c2))) return true;
  if (!ideal_product(s, c1, c2).subset_of(hom_preimage(h, ideal_product(t, b1, b2)))) return true;
  return !hom_preimage(h, colon(t, b1, b2)).subset_of(colon(s, c1, c2));
}
inline bool cep4_fails(const SemiringHom& h, const Ideal& a) {
  if (!h.surjective() || !analysis_for(h.source)->is_semisubtractive(a)) return false;
  const auto img = hom_image(h, a.elements());
  return !is_ideal(h.target, img) || !analysis_for(h.target)->is_semisubtractive(Ideal::unchecked(img));
}

inline Verdict eval_cep1(const EvalContext& c) {
  int n = 0;
  for (const auto& h : c.homs())
    for (const auto& b : analysis_for(h.target)->semisubtractive().members()) {
      ++n;
      if (cep1_fails(h, b)) return Verdict::fail(Witness().with_hom(h).target_set("b", b), "contraction is not semisubtractive");
    }
  return detail::passed(n, "(hom, ideal) pairs");
}

inline Verdict eval_cep2(const EvalContext& c) {
  for (const auto& h : c.homs())
    if (cep2_fails(h)) return Verdict::fail(Witness().with_hom(h), "kernel is not semisubtractive");
  return detail::passed(static_cast<int>(c.homs().size()), "homs");
}

inline Verdict eval_cep3(const EvalContext& c) {
  int n = 0;
  for (const auto& h : c.homs()) {
    const auto& ts = analysis_for(h.target)->semisubtractive().members();
    for (const auto& b1 : ts)
      for (const auto& b2 : ts) {
        ++n;
        if (cep3_fails(h, b1, b2))
          return Verdict::fail(Witness().with_hom(h).target_set("b1", b1).target_set("b2", b2), "a contraction containment fails");
      }
  }
  return detail::passed(n, "(hom, pair) instances");
}

inline Verdict eval_cep4(const EvalContext& c) {
  int n = 0;
  for (const auto& h : c.homs()) {
    if (!h.surjective()) continue;
    for (const auto& a : c.analysis().semisubtractive().members()) {
      ++n;
      if (cep4_fails(h, a)) return Verdict::fail(Witness().with_hom(h).set("a", a), "surjective image is not semisubtractive");
    }
  }
  return detail::passed(n, "(surjective hom, ideal) pairs");
}

// Golan closure

inline bool lclk1_fails(const Analysis& an, const Ideal& a) {
  const auto& s = an.semiring();
  const auto cz = an.closure(a);
  if (!(cz == golan_closure_by_intersection(s, a, an.semisubtractive()))) return true;
  if (!an.is_semisubtractive(cz) || !a.subset_of(cz)) return true;
  for (const auto& b : an.semisubtractive().members())
    if (a.subset_of(b) && !cz.subset_of(b)) return true;
  return false;
}
inline bool lclk2_fails(const Analysis& an) { return !(an.closure(an.zero()) == an.zero()); }
inline bool lclk3_fails(const Analysis& an) { return !(an.closure(an.whole()) == an.whole()); }
inline bool lclk4_fails(const Analysis& an, const Ideal& a) { return !(an.closure(an.closure(a)) == an.closure(a)); }
inline bool lclk5_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  return a.subset_of(b) && !an.closure(a).subset_of(an.closure(b));
}
inline bool lclk6_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  const auto& s = an.semiring();
  const auto lhs = an.closure(generated_ideal(s, a.elements() | b.elements()));
  return !(an.closure(a).elements() | an.closure(b).elements()).subset_of(lhs.elements());
}
/// Pairwise form of cz(⋂) = ⋂cz; pairs suffice for a finite family.
inline bool lclk7_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  const auto& s = an.semiring();
  return !(an.closure(ideal_intersection(s, a, b)) == ideal_intersection(s, an.closure(a), an.closure(b)));
}
inline bool lclk7_inclusion_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  const auto& s = an.semiring();
  return !an.closure(ideal_intersection(s, a, b)).subset_of(ideal_intersection(s, an.closure(a), an.closure(b)));
}
inline bool lclk8_fails(const Analysis& an, const Ideal& a) { return an.is_semisubtractive(a) != (an.closure(a) == a); }
inline bool lclk9_fails(const Analysis& an, const Ideal& a, const Ideal& b) {
  const auto& s = an.semiring();
  return !(an.closure(ideal_sum(s, a, b)) == an.closure(ideal_sum(s, an.closure(a), an.closure(b))));
}
inline bool lclk10_fails(const Analysis& an, const Ideal& a) { return !an.closure(a).subset_of(an.radical_of(a)); }

template <bool (*F)(const Analysis&, const Ideal&)>
Verdict all_ideals(const EvalContext& c, const char* why) {
  const auto& an = c.analysis();
  return detail::over_ideals(an.ideals().members(), [&](const Ideal& a) { return F(an, a); }, why);
}
template <bool (*F)(const Analysis&, const Ideal&, const Ideal&)>
Verdict all_ideal_pairs(const EvalContext& c, const char* why) {
  const auto& an = c.analysis();
  return detail::over_pairs(an.ideals().members(), an.ideals().members(), [&](const Ideal& a, const Ideal& b) { return F(an, a, b); }, why);
}

inline Verdict eval_lclk1(const EvalContext& c) { return all_ideals<lclk1_fails>(c, "cz(a) is not the least semisubtractive ideal above a"); }
inline Verdict eval_lclk2(const EvalContext& c) {
  if (lclk2_fails(c.analysis())) return Verdict::fail(Witness(), "cz(0) differs from 0");
  return Verdict::pass();
}
inline Verdict eval_lclk3(const EvalContext& c) {
  if (lclk3_fails(c.analysis())) return Verdict::fail(Witness(), "cz(S) differs from S");
  return Verdict::pass();
}
inline Verdict eval_lclk4(const EvalContext& c) { return all_ideals<lclk4_fails>(c, "cz is not idempotent at a"); }
inline Verdict eval_lclk5(const EvalContext& c) { return all_ideal_pairs<lclk5_fails>(c, "cz is not monotone on (a, b)"); }
inline Verdict eval_lclk6(const EvalContext& c) { return all_ideal_pairs<lclk6_fails>(c, "cz(<a ∪ b>) misses part of cz(a) ∪ cz(b)"); }
inline Verdict eval_lclk7(const EvalContext& c) {
  auto v = all_ideal_pairs<lclk7_fails>(c, "cz(a ∩ b) differs from cz(a) ∩ cz(b)");
  const auto inclusion = all_ideal_pairs<lclk7_inclusion_fails>(c, "");
  v.data["inclusion_holds"] = inclusion.status != Status::fail;
  return v;
}
inline Verdict eval_lclk8(const EvalContext& c) { return all_ideals<lclk8_fails>(c, "semisubtractivity differs from being cz-closed"); }
inline Verdict eval_lclk9(const EvalContext& c) { return all_ideal_pairs<lclk9_fails>(c, "cz(a + b) differs from cz(cz(a) + cz(b))"); }
inline Verdict eval_lclk10(const EvalContext& c) { return all_ideals<lclk10_fails>(c, "cz(a) is not inside the radical of a"); }

// Maximal semisubtractive ideals and modularity

inline bool mxc_fails(const Analysis& an, const Ideal& a) {
  if (!a.proper() || !an.is_semisubtractive(a)) return false;
  const auto& m = an.maximal_semisubtractive();
  return std::none_of(m.begin(), m.end(), [&](const Ideal& x) { return a.subset_of(x); });
}

inline Verdict eval_mxc(const EvalContext& c) {
  const auto& an = c.analysis();
  auto v = detail::over_ideals(an.semisubtractive().members(), [&](const Ideal& a) { return mxc_fails(an, a); },
                               "proper semisubtractive ideal below no maximal one");
  json m = json::array();
  for (const auto& x : an.maximal_semisubtractive()) m.push_back(to_json(x.elements()));
  v.data["maximal_semisubtractive"] = m;
  return v;
}

inline bool modular_fails(const Analysis& an, const Ideal& a, const Ideal& b, const Ideal& c) {
  if (!an.is_semisubtractive(a) || !an.is_semisubtractive(b) || !an.is_semisubtractive(c)) return false;
  return modular_law_fails(an.semiring(), a, b, c);
}

inline Verdict eval_modular(const EvalContext& c) {
  const auto& an = c.analysis();
  try {
    const auto v = modularity_audit(an.semiring(), an.semisubtractive());
    if (!v.holds) {
      const auto& t = *v.counterexample;
      return Verdict::fail(Witness().set("a", t[0]).set("b", t[1]).set("c", t[2]), "(a + c) ∩ b is not inside a + (c ∩ b)");
    }
  } catch (const NotClosed& e) {
    // closure failures are reported by the sum/intersection claims
    return Verdict::vacuous(e.what());
  }
  return Verdict::pass(std::to_string(an.semisubtractive().size()) + " members");
}

}  // namespace semiring_lab::claims
