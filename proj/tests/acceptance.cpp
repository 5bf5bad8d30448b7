// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Outcome axiom_suite() {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& name : standard_fixture_names()) {
    const auto s = fixture(name);
    o.require(!FiniteSemiring::check_axioms(s.add_table(), s.mul_table()), name + " fails validation");
  }
  const auto z4 = zmod(4);
  for (int table = 0; table < 2; ++table)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int v = 0; v < 4; ++v) {
          auto add = z4.add_table(), mul = z4.mul_table();
          auto& t = table == 0 ? add : mul;
          if (t[i][j] == v) continue;
          t[i][j] = v;
          try {
            FiniteSemiring::validate(add, mul);
            o.require(false, "mutant accepted");
          } catch (const AxiomViolation& e) {
            o.require(violates(add, mul, e.axiom(), e.witness()), std::string("wrong witness: ") + e.what());
          }
        }
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.ok) o.note = std::to_string(t) + " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& s : corpus(3)) {
    const auto ideals = enumerate_ideals(s);
    o.require(ideals == enumerate_ideals_by_subsets(s), "ideal enumeration differs from the subset filter");
    const auto ss = semisubtractive_family(s, ideals);
    for (const auto& a : ideals) {
      o.require(golan_closure(s, a) == golan_closure_by_intersection(s, a, ss), "closure routes disagree");
      if (a.proper()) o.require(is_prime_elementwise(s, a) == is_prime(s, a, ideals), "prime tests disagree");
    }
  }
  return o;
}

Outcome proven_suite() {
  Outcome o;
  const auto start = Clock::now();
  auto corpus = corpus_up_to(3);
  for (const auto& name : standard_fixture_names()) corpus.entries.push_back({name, fixture(name)});
  std::vector<std::string> ids;
  for (const auto& p : default_registry().entries())
    if (p.tag == Tag::proven) ids.push_back(p.id);
  const auto report = run_audit(corpus, default_registry(), ids);
  for (const auto& [name, id] : report.proven_failures()) o.require(false, id + " fails on " + name);
  std::size_t verdicts = 0;
  for (const auto& row : report.semirings) verdicts += row.results.size();
  o.require(verdicts == corpus.entries.size() * ids.size(), "missing verdicts");
  const double t = seconds_since(start);
  o.require(t < 300.0, "took " + std::to_string(t) + " s");
  if (o.ok) o.note = std::to_string(ids.size()) + " claims x " + std::to_string(corpus.entries.size()) + " semirings, " + std::to_string(t) + " s";
  return o;
}

Outcome audit_completeness() {
  Outcome o;
  auto corpus = corpus_up_to(4);
  for (const auto& name : standard_fixture_names()) corpus.entries.push_back({name, fixture(name)});
  std::vector<std::string> ids;
  for (const auto& p : default_registry().entries())
    if (p.tag == Tag::audit) ids.push_back(p.id);
  const auto j = to_json(run_audit(corpus, default_registry(), ids), false);
  std::size_t fails = 0;
  o.require(j.at("results").size() == corpus.entries.size(), "missing rows");
  for (const auto& row : j.at("results")) {
    o.require(row.at("verdicts").size() == ids.size(), "missing verdicts on " + row.at("name").get<std::string>());
    for (const auto& v : row.at("verdicts")) {
      const auto status = v.at("status").get<std::string>();
      o.require(status == "PASS" || status == "FAIL" || status == "VACUOUS", "bad status");
      if (status != "FAIL") continue;
      ++fails;
      o.require(v.contains("certificate"), "FAIL without certificate");
      if (v.contains("certificate")) o.require(replay(v.at("certificate")).replayed == Status::fail, "certificate does not replay");
    }
  }
  if (o.ok) o.note = std::to_string(ids.size()) + " claims, " + std::to_string(fails) + " certificates replayed";
  return o;
}

Outcome fixture_certificates() {
  Outcome o;
  const auto& reg = default_registry();
  const auto t2 = run_audit(fixture_corpus({"trunc(2)"}), reg, {"sus", "sums"});
  for (const auto& x : t2.semirings[0].results) {
    o.require(x.verdict.status == Status::fail, x.prop->id + " does not fail on trunc(2)");
    if (x.verdict.witness) {
      o.require(x.verdict.witness->elements.at("x") == 2, "witness x");
      o.require(x.verdict.witness->sets.at("a") == std::vector<Element>{0, 2}, "witness a");
      o.require(replay(make_certificate(*x.prop, t2.semirings[0].semiring, x.verdict)).matches(), "replay");
    }
  }
  const auto b2 = run_audit(fixture_corpus({"bool2"}), reg, {"bijection"});
  for (const auto& x : b2.semirings[0].results) {
    if (x.prop->id != "bijection") continue;
    o.require(x.verdict.status == Status::fail && x.verdict.witness->sets.at("a") == std::vector<Element>{0, 1},
              "bool2 bijection certificate");
  }
  auto corpus = corpus_up_to(5);
  for (const auto& name : standard_fixture_names()) corpus.entries.push_back({name, fixture(name)});
  const auto r = run_audit(corpus, reg, {"bijection.restricted"});
  for (const auto& row : r.semirings) o.require(row.results[0].verdict.status == Status::pass, "restricted bijection fails on " + row.name);
  for (const auto& e : corpus.entries) {
    const Analysis an(e.semiring);
    for (const auto& a : an.semisubtractive().members())
      o.require(ideal_of(e.semiring, s_congruence(e.semiring, a)).elements() == (a.elements() & an.invertible()),
                "Ψ(Φ(a)) differs from a ∩ V(S) on " + e.name);
  }
  if (o.ok) o.note = "restricted bijection and Ψ(Φ(a)) = a ∩ V(S) on " + std::to_string(corpus.entries.size()) + " semirings";
  return o;
}

Outcome quotient_check() {
  Outcome o;
  const Analysis an(zmod(4));
  const auto& s = an.semiring();
  const Ideal i(s, s.set_of({0, 2}));
  const auto q = find_Q(s, i);
  o.require(q.has_value(), "no Q for {0,2}");
  if (!q) return o;
  const auto inst = make_q_instance(s, i, *q);
  o.require(inst.quotient.has_value(), "quotient invalid");
  if (!inst.quotient) return o;
  const auto& qs = *inst.quotient;
  o.require(qs.semiring.order() == 2, "quotient order");
  o.require(!FiniteSemiring::check_axioms(qs.semiring.add_table(), qs.semiring.mul_table()), "quotient not validated");
  o.require(canonical_form(qs.semiring) == canonical_form(zmod(2)), "quotient is not Z/2");
  for (const auto& p : an.ideals().members()) o.require(!pqss_fails(an, inst, p), "pqss instance fails");
  o.require(!iqss_fails(an, inst), "iqss instance fails");
  const auto v = audit_q_propositions(an);
  o.require(v.at("pqss").status == Status::pass && v.at("iqss").status == Status::pass, "pqss/iqss verdicts");
  return o;
}

Outcome enumerator_cross_check() {
  Outcome o;
  const std::size_t frozen[] = {0, 0, 2, 6};
  for (std::size_t n : {2, 3}) {
    std::set<TableEncoding> a, b;
    for (const auto& s : enumerate_semirings(n)) a.insert(canonical_encoding(s));
    for (const auto& s : enumerate_semirings_by_filter(n)) b.insert(canonical_encoding(s));
    o.require(a == b, "n=" + std::to_string(n) + ": the two enumerations differ");
    o.require(a.size() == frozen[n], "n=" + std::to_string(n) + ": count changed");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto corpus = corpus_up_to(4);
  auto first = to_json(run_audit(corpus, default_registry()));
  auto second = to_json(run_audit(corpus, default_registry()));
  o.require(first.contains("timestamp") && second.contains("timestamp"), "no timestamp");
  first.erase("timestamp");
  second.erase("timestamp");
  o.require(first.dump(2) == second.dump(2), "reports differ");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite", axiom_suite},
      {"oracle equivalence", oracle_equivalence},
      {"PROVEN suite", proven_suite},
      {"AUDIT suite completeness", audit_completeness},
      {"fixture certificates", fixture_certificates},
      {"quotient check", quotient_check},
      {"enumerator cross-check", enumerator_cross_check},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
