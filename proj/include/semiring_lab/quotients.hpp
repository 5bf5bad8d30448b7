#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enumerator.hpp"
#include "verdict.hpp"

namespace semiring_lab {

/// q + a = {q + x : x ∈ a}.
inline ElementSet coset(const FiniteSemiring& s, const Ideal& a, Element q) {
  ElementSet r = s.empty_set();
  a.elements().for_each([&](Element x) { r.insert(s.add(q, x)); });
  return r;
}

/// The cosets {q + a : q ∈ Q} cover S and distinct representatives have
/// disjoint cosets.
inline bool is_Q_ideal(const FiniteSemiring& s, const Ideal& a, const ElementSet& q) {
  require_owner(s, a);
  if (q.owner() != s.fingerprint()) throw OwnerMismatch();
  if (q.empty()) return false;
  ElementSet covered = s.empty_set();
  bool disjoint = true;
  q.for_each([&](Element r) {
    auto c = coset(s, a, r);
    disjoint = disjoint && (covered & c).empty();
    covered = covered | c;
  });
  return disjoint && covered.is_full();
}

namespace detail {

inline bool lex_less(const ElementSet& a, const ElementSet& b) { return a.elements() < b.elements(); }

inline void exact_covers(const std::vector<ElementSet>& cosets, ElementSet covered, ElementSet chosen,
                         std::vector<ElementSet>& out) {
  if (covered.is_full()) {
    out.push_back(chosen);
    return;
  }
  // branch on the least uncovered element; at most one representative per coset
  const Element u = covered.complement().elements().front();
  for (Element q = 0; q < static_cast<Element>(cosets.size()); ++q) {
    const auto& c = cosets[q];
    if (!c.contains(u) || !(c & covered).empty()) continue;
    ElementSet next = chosen;
    next.insert(q);
    exact_covers(cosets, covered | c, next, out);
  }
}

}  // namespace detail

/// Every Q that witnesses a as a Q-ideal, in lexicographic order of the
/// sorted representative lists.
inline std::vector<ElementSet> all_Q(const FiniteSemiring& s, const Ideal& a) {
  require_owner(s, a);
  std::vector<ElementSet> cosets;
  for (Element q = 0; q < static_cast<Element>(s.order()); ++q) cosets.push_back(coset(s, a, q));
  std::vector<ElementSet> out;
  detail::exact_covers(cosets, s.empty_set(), s.empty_set(), out);
  std::sort(out.begin(), out.end(), detail::lex_less);
  return out;
}

/// Lexicographically least Q, if a is a Q-ideal at all.
inline std::optional<ElementSet> find_Q(const FiniteSemiring& s, const Ideal& a) {
  auto all = all_Q(s, a);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// An ideal together with a representative set whose cosets partition S.
struct QPartition {
  Ideal ideal;
  ElementSet Q;
};

inline QPartition make_q_partition(const FiniteSemiring& s, const Ideal& a, const ElementSet& q) {
  if (!is_Q_ideal(s, a, q)) throw NotAQPartition("representatives do not partition S");
  return {a, q};
}

/// The unique q ∈ Q with x + a ⊆ q + a.
inline Element coset_rep(const FiniteSemiring& s, const QPartition& p, Element x) {
  const auto cx = coset(s, p.ideal, x);
  std::optional<Element> found;
  bool unique = true;
  p.Q.for_each([&](Element q) {
    if (cx.subset_of(coset(s, p.ideal, q))) {
      unique = unique && !found;
      found = q;
    }
  });
  if (!found || !unique) throw NoRep(x);
  return *found;
}

/// S/a on the representatives: index 0 is the zero coset, index 1 the one
/// coset, the rest follow in ascending representative order.
struct QuotientSemiring {
  FiniteSemiring base;
  QPartition witness;
  FiniteSemiring semiring;
  std::vector<Element> projection;  ///< base element -> quotient index
  std::vector<Element> reps;        ///< quotient index -> representative in Q
  bool projection_is_hom = false;

  Element index_of_rep(Element q) const {
    auto it = std::find(reps.begin(), reps.end(), q);
    return it == reps.end() ? -1 : static_cast<Element>(it - reps.begin());
  }
};

/// Builds and re-validates the quotient. Throws QuotientInvalid when the
/// coset tables do not form a semiring (including the order-1 collapse).
inline QuotientSemiring quotient(const FiniteSemiring& s, const QPartition& p) {
  if (!is_Q_ideal(s, p.ideal, p.Q)) throw NotAQPartition("representatives do not partition S");
  const Element zero_rep = coset_rep(s, p, 0);
  const Element one_rep = coset_rep(s, p, 1);
  if (zero_rep == one_rep) throw QuotientInvalid("zero and one fall into the same coset (order-1 quotient)");
  std::vector<Element> reps{zero_rep, one_rep};
  p.Q.for_each([&](Element q) {
    if (q != zero_rep && q != one_rep) reps.push_back(q);
  });
  auto index = [&](Element q) { return static_cast<int>(std::find(reps.begin(), reps.end(), q) - reps.begin()); };
  const std::size_t k = reps.size();
  Table add(k, std::vector<int>(k)), mul(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      add[i][j] = index(coset_rep(s, p, s.add(reps[i], reps[j])));
      mul[i][j] = index(coset_rep(s, p, s.mul(reps[i], reps[j])));
    }
  if (auto v = FiniteSemiring::check_axioms(add, mul)) throw QuotientInvalid(std::string("quotient fails ") + v->what());
  auto q = FiniteSemiring::validate(add, mul);
  std::vector<Element> projection(s.order());
  for (Element x = 0; x < static_cast<Element>(s.order()); ++x) projection[x] = index(coset_rep(s, p, x));
  const bool hom = !check_hom(s, q, projection);
  return {s, p, q, std::move(projection), std::move(reps), hom};
}

/// Every nonzero element has a multiplicative inverse.
inline bool is_semifield(const FiniteSemiring& s) {
  for (Element x = 1; x < static_cast<Element>(s.order()); ++x) {
    bool unit = false;
    for (Element y = 1; y < static_cast<Element>(s.order()) && !unit; ++y) unit = s.mul(x, y) == 1;
    if (!unit) return false;
  }
  return true;
}

/// a/i := {q + i : q ∈ Q ∩ a}, as a subset of the quotient.
inline ElementSet quotient_subset(const QuotientSemiring& q, const ElementSet& a) {
  ElementSet r = q.semiring.empty_set();
  q.witness.Q.for_each([&](Element rep) {
    if (a.contains(rep)) r.insert(q.index_of_rep(rep));
  });
  return r;
}

/// A Q-ideal with one of its witnesses and, when it validates, its quotient.
struct QIdealInstance {
  Ideal ideal;
  ElementSet Q;
  std::optional<QuotientSemiring> quotient;
  std::string invalid_reason;
};

inline QIdealInstance make_q_instance(const FiniteSemiring& s, const Ideal& a, const ElementSet& q) {
  QIdealInstance inst{a, q, std::nullopt, {}};
  try {
    inst.quotient = quotient(s, make_q_partition(s, a, q));
  } catch (const QuotientInvalid& e) {
    inst.invalid_reason = e.what();
  } catch (const ZeroEqualsOne& e) {
    inst.invalid_reason = e.what();
  }
  return inst;
}

/// Q-ideals of S with their lexicographically least witness, or with every
/// witness when `all_witnesses` is set.
inline std::vector<QIdealInstance> q_ideal_instances(const Analysis& an, bool all_witnesses = false) {
  std::vector<QIdealInstance> out;
  for (const auto& a : an.ideals().members()) {
    auto qs = all_Q(an.semiring(), a);
    if (qs.empty()) continue;
    if (!all_witnesses) qs.resize(1);
    for (const auto& q : qs) out.push_back(make_q_instance(an.semiring(), a, q));
  }
  return out;
}

namespace detail {

inline Witness q_witness(const QIdealInstance& inst) { return Witness().set("i", inst.ideal).set("Q", inst.Q); }

inline QIdealInstance read_q_instance(const Analysis& an, const WitnessReader& r) {
  auto i = r.ideal("i");
  auto q = r.set("Q");
  if (!is_Q_ideal(an.semiring(), i, q)) throw MalformedCertificate("witness Q does not partition S");
  return make_q_instance(an.semiring(), i, q);
}

/// Is the quotient-side set x a semisubtractive ideal of the quotient?
inline bool quotient_semisubtractive_ideal(const QuotientSemiring& q, const ElementSet& x) {
  const auto& t = q.semiring;
  if (!is_ideal(t, x)) return false;
  return is_semisubtractive(t, Ideal::unchecked(x));
}

inline bool quotient_prime(const QuotientSemiring& q, const ElementSet& x) {
  const auto& t = q.semiring;
  if (!is_ideal(t, x) || x.is_full()) return false;
  return analysis_for(t)->is_prime(Ideal::unchecked(x));
}

/// Q ∩ V(S) is closed under additive inverses.
inline bool q_closed_under_negation(const Analysis& an, const ElementSet& q) {
  bool ok = true;
  q.for_each([&](Element x) {
    if (auto n = an.neg(x)) ok = ok && q.contains(*n);
  });
  return ok;
}

}  // namespace detail

// Each *_fails predicate below re-checks one instance of a claim and is what
// certificate replay calls. Hypotheses that do not hold make the instance
// pass.

/// Coset lemma: exactly one q ∈ Q with x + i ⊆ q + i.
inline bool qlemma_fails(const FiniteSemiring& s, const QIdealInstance& inst, Element x) {
  const auto cx = coset(s, inst.ideal, x);
  int count = 0;
  inst.Q.for_each([&](Element q) { count += cx.subset_of(coset(s, inst.ideal, q)) ? 1 : 0; });
  return count != 1;
}

/// A proper Q-ideal yields a quotient that validates with a hom projection.
inline bool qsemiring_fails(const QIdealInstance& inst) {
  if (!inst.ideal.proper()) return false;
  return !inst.quotient || !inst.quotient->projection_is_hom;
}

/// Q-ideals are subtractive.
inline bool qsub_fails(const FiniteSemiring& s, const QIdealInstance& inst) { return !is_subtractive(s, inst.ideal); }

inline bool qai_fails(const Analysis& an, const QIdealInstance& inst, const Ideal& a) {
  if (!inst.quotient || !an.is_semisubtractive(a) || !inst.ideal.subset_of(a)) return false;
  if (!detail::q_closed_under_negation(an, inst.Q)) return false;
  return !detail::quotient_semisubtractive_ideal(*inst.quotient, quotient_subset(*inst.quotient, a.elements()));
}

/// `c` is given by its representatives in Q.
inline bool iqs_fails(const Analysis& an, const QIdealInstance& inst, const ElementSet& c_reps) {
  if (!inst.quotient || !c_reps.subset_of(inst.Q)) return false;
  const auto c = quotient_subset(*inst.quotient, c_reps);
  if (!detail::quotient_semisubtractive_ideal(*inst.quotient, c)) return false;
  for (const auto& j : an.semisubtractive().members())
    if (quotient_subset(*inst.quotient, j.elements()) == c) return false;
  return true;
}

inline bool iqss_fails(const Analysis& an, const QIdealInstance& inst) {
  if (!inst.ideal.proper() || !inst.quotient || !is_semifield(inst.quotient->semiring)) return false;
  const auto& m = an.maximal_semisubtractive();
  return std::find(m.begin(), m.end(), inst.ideal) == m.end();
}

inline bool qiji_fails(const Analysis& an, const QIdealInstance& inst, const Ideal& j) {
  if (!inst.quotient || !an.is_semisubtractive(inst.ideal) || !an.is_semisubtractive(j)) return false;
  const auto sum = ideal_sum(an.semiring(), inst.ideal, j);
  return !detail::quotient_semisubtractive_ideal(*inst.quotient, quotient_subset(*inst.quotient, sum.elements()));
}

inline bool pqss_fails(const Analysis& an, const QIdealInstance& inst, const Ideal& p) {
  if (!inst.quotient || !an.is_semisubtractive(p) || !inst.ideal.subset_of(p)) return false;
  const bool prime_below = p.proper() && an.is_prime(p);
  const bool prime_above = detail::quotient_prime(*inst.quotient, quotient_subset(*inst.quotient, p.elements()));
  return prime_below != prime_above;
}

/// Verdicts for the Q-ideal propositions on one semiring, keyed by id:
/// qlemma, qsemiring, qsub, qai, iqs, iqss, qiji, pqss.
inline std::map<std::string, Verdict> audit_q_propositions(const Analysis& an, bool all_witnesses = false) {
  const auto& s = an.semiring();
  const auto instances = q_ideal_instances(an, all_witnesses);
  std::map<std::string, Verdict> out;
  std::map<std::string, int> checked;
  auto record_fail = [&](const std::string& id, Witness w, std::string why) {
    if (!out.count(id)) out.emplace(id, Verdict::fail(std::move(w), std::move(why)));
  };

  json witnesses = json::array();
  for (const auto& inst : instances) {
    const auto base = detail::q_witness(inst);
    for (Element x = 0; x < static_cast<Element>(s.order()); ++x)
      if (qlemma_fails(s, inst, x)) record_fail("qlemma", Witness(base).element("x", x), "no unique coset above x + i");
    ++checked["qlemma"];

    if (inst.ideal.proper()) {
      ++checked["qsemiring"];
      if (qsemiring_fails(inst)) record_fail("qsemiring", base, inst.invalid_reason.empty() ? "projection is not a hom" : inst.invalid_reason);
    }
    ++checked["qsub"];
    if (qsub_fails(s, inst)) record_fail("qsub", base, "Q-ideal is not subtractive");

    if (!inst.quotient) continue;
    const auto& qs = inst.quotient->semiring;

    for (const auto& a : an.semisubtractive().members()) {
      if (!inst.ideal.subset_of(a)) continue;
      if (detail::q_closed_under_negation(an, inst.Q)) ++checked["qai"];
      if (qai_fails(an, inst, a)) record_fail("qai", Witness(base).set("a", a), "a/i is not a semisubtractive ideal");
    }
    // semisubtractive ideals of the quotient, carried back to representatives
    for (const auto& c : analysis_for(qs)->semisubtractive().members()) {
      ElementSet reps = s.empty_set();
      c.elements().for_each([&](Element k) { reps.insert(inst.quotient->reps[k]); });
      ++checked["iqs"];
      if (iqs_fails(an, inst, reps)) record_fail("iqs", Witness(base).set("c", reps), "c is not j/i for any semisubtractive j");
    }
    if (inst.ideal.proper() && is_semifield(qs)) ++checked["iqss"];
    if (iqss_fails(an, inst)) record_fail("iqss", base, "S/i is a semifield but i is not maximal semisubtractive");
    for (const auto& j : an.semisubtractive().members()) {
      if (an.is_semisubtractive(inst.ideal)) ++checked["qiji"];
      if (qiji_fails(an, inst, j)) record_fail("qiji", Witness(base).set("j", j), "(i + j)/i is not a semisubtractive ideal");
    }
    for (const auto& p : an.semisubtractive().members()) {
      if (!inst.ideal.subset_of(p)) continue;
      ++checked["pqss"];
      if (pqss_fails(an, inst, p)) record_fail("pqss", Witness(base).set("p", p), "primality of p and p/i disagree");
    }
  }

  // Q-witness isomorphism classes per Q-ideal, recorded rather than assumed unique
  if (all_witnesses) {
    std::map<std::vector<Element>, std::set<TableEncoding>> classes;
    std::map<std::vector<Element>, int> counts;
    for (const auto& inst : instances) {
      ++counts[inst.ideal.elements().elements()];
      if (inst.quotient) classes[inst.ideal.elements().elements()].insert(canonical_encoding(inst.quotient->semiring));
    }
    for (const auto& [i, c] : counts)
      witnesses.push_back(json{{"i", i}, {"witnesses", c}, {"quotient_classes", classes[i].size()}});
  }

  for (const char* id : {"qlemma", "qsemiring", "qsub", "qai", "iqs", "iqss", "qiji", "pqss"}) {
    if (out.count(id)) continue;
    if (checked[id] == 0)
      out.emplace(id, Verdict::vacuous(instances.empty() ? "no Q-ideal" : "hypothesis never met"));
    else
      out.emplace(id, Verdict::pass(std::to_string(checked[id]) + " instances"));
  }
  if (all_witnesses) out["qsemiring"].data["witness_classes"] = witnesses;
  return out;
}

}  // namespace semiring_lab
