#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

TEST_CASE("Golan closure: fixed point equals the intersection oracle") {
  for (const auto& s : corpus_and_fixtures(5)) {
    const auto ideals = enumerate_ideals(s);
    const auto ss = semisubtractive_family(s, ideals);
    for (const auto& a : ideals) {
      const auto c = golan_closure(s, a);
      CHECK(c == golan_closure_by_intersection(s, a, ss));
      CHECK(ss.contains(c));
      CHECK(a.subset_of(c));
    }
  }
}

TEST_CASE("closure on the product fixture is the identity") {
  const auto p = fixture("prod(zmod(2),bool2)");
  for (const auto& a : enumerate_ideals(p)) CHECK(golan_closure(p, a) == a);
}

TEST_CASE("in a finite semiring every ideal is semisubtractive") {
  // x in V(S) has finite additive order m, so -x = (m - 1)x lies in any ideal holding x
  for (const auto& s : corpus_and_fixtures(6)) {
    for (Element x = 0; x < static_cast<Element>(s.order()); ++x) {
      const auto neg = additive_inverse(s, x);
      if (!neg) continue;
      Element multiple = x;
      while (s.add(multiple, x) != 0) multiple = s.add(multiple, x);
      CHECK(multiple == *neg);
    }
    for (const auto& a : enumerate_ideals(s)) {
      CHECK(is_semisubtractive(s, a));
      CHECK(golan_closure(s, a) == a);
    }
  }
}

TEST_CASE("closure of a set that is not an ideal") {
  const auto z4 = zmod(4);
  // {0,1} is not an ideal; one round adjoins 3 and then generates S
  CHECK(golan_closure(z4, Ideal::unchecked(z4.set_of({0, 1}))) == Ideal::whole(z4));
}

TEST_CASE("lattice audits") {
  const auto z6 = zmod(6);
  const auto fam = semisubtractive_family(z6);
  const auto audit = audit_lattice(z6, fam);
  CHECK(audit.modular.holds);
  CHECK(audit.distributive.holds);
  CHECK(is_arithmetic(z6).holds);
  CHECK(maximal_semisubtractive(z6) == std::vector<Ideal>{ideal_of(z6, {0, 3}), ideal_of(z6, {0, 2, 4})});
  CHECK(maximal_semisubtractive(trunc(2)) == std::vector<Ideal>{ideal_of(trunc(2), {0, 2})});
}

TEST_CASE("an order-5 semiring whose semisubtractive ideals are not modular") {
  const auto s = pentagon();
  const auto fam = semisubtractive_family(s);
  const auto m = modularity_audit(s, fam);
  REQUIRE_FALSE(m.holds);
  const auto& [a, b, c] = *m.counterexample;
  CHECK(modular_law_fails(s, a, b, c));
  CHECK(modular_law_fails(s, ideal_of(s, {0, 3}), ideal_of(s, {0, 2, 3}), ideal_of(s, {0, 4})));
  CHECK_FALSE(is_arithmetic(s).holds);
}

TEST_CASE("Hasse diagram as DOT") {
  const auto dot = hasse_dot(ideal_family(zmod(6)));
  CHECK(dot.find("digraph hasse") == 0);
  CHECK(dot.find("label=\"{0,3}\"") != std::string::npos);
  // {0} -> {0,3}, {0} -> {0,2,4}, both -> S: four covering edges
  std::size_t edges = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  CHECK(edges == 4);
}

TEST_CASE("order claims on the order <= 4 corpus") {
  const AuditOptions opt;
  for (const auto& s : corpus_and_fixtures(4)) {
    const Analysis an(s);
    const EvalContext ctx(an, opt);
    for (const auto* p : default_registry().select({"lclk", "mxc", "modular"})) {
      INFO(p->id);
      CHECK(p->evaluate(ctx).status == Status::pass);
    }
  }
}
