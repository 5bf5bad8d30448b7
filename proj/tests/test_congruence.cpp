#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

using Sets = std::vector<std::vector<Element>>;

TEST_CASE("Φ on Z/4 and Z/6") {
  const auto z4 = zmod(4);
  const auto c = s_congruence(z4, ideal_of(z4, {0, 2}));
  CHECK(c.classes() == Sets{{0, 2}, {1, 3}});
  CHECK(is_congruence(z4, c));
  CHECK(ideal_of(z4, c) == ideal_of(z4, {0, 2}));
  CHECK(to_json(c).dump() == "[[0,2],[1,3]]");

  const auto z6 = zmod(6);
  CHECK(s_congruence(z6, ideal_of(z6, {0, 3})).classes() == Sets{{0, 3}, {1, 4}, {2, 5}});
  CHECK(s_congruence(z6, Ideal::zero(z6)).classes().size() == 6);
}

TEST_CASE("Φ rejects sets that are not semisubtractive") {
  // every ideal of a finite semiring is semisubtractive, so the error path needs a non-ideal
  const auto z4 = zmod(4);
  CHECK_THROWS_AS(s_congruence(z4, Ideal::unchecked(z4.set_of({0, 1}))), NotSemisubtractive);
}

TEST_CASE("bool2 refutes the bijection at a = S") {
  const Analysis an(bool2());
  const auto& s = an.semiring();
  CHECK(ideal_of(s, s_congruence(s, Ideal::whole(s))) == Ideal::zero(s));
  CHECK(bijection_fails(an, Ideal::whole(s)));
  const auto v = audit_bijection(an);
  REQUIRE(v.status == Status::fail);
  CHECK(v.witness->sets.at("a") == std::vector<Element>{0, 1});
  CHECK(audit_bijection_restricted(an).status == Status::pass);
}

TEST_CASE("Ψ(Φ(a)) = a ∩ V(S) and the restricted bijection on the order <= 5 corpus") {
  for (const auto& s : corpus_and_fixtures(5)) {
    const Analysis an(s);
    for (const auto& a : an.semisubtractive().members()) {
      const auto phi = s_congruence(s, a);
      CHECK(is_congruence(s, phi));
      CHECK(ideal_of(s, phi).elements() == (a.elements() & an.invertible()));
      CHECK_FALSE(cong_fails(an, a));
      CHECK_FALSE(bijection_restricted_fails(an, a));
    }
    CHECK(audit_cong(an).status == Status::pass);
    CHECK(audit_bijection_restricted(an).status == Status::pass);
  }
}

TEST_CASE("rings satisfy the unrestricted bijection") {
  for (int n = 2; n <= 6; ++n) CHECK(audit_bijection(Analysis(zmod(n))).status == Status::pass);
}

TEST_CASE("property: random relations are rarely congruences, Φ images always are") {
  std::mt19937 rng(42);
  const auto z6 = zmod(6);
  int congruences = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Congruence c{z6.fingerprint(), std::vector<int>(6)};
    std::uniform_int_distribution<int> label(0, 2);
    for (auto& k : c.class_of) k = label(rng);
    if (is_congruence(z6, c)) {
      ++congruences;
      // every congruence of a ring is Φ of its zero class
      const auto phi = s_congruence(z6, ideal_of(z6, c));
      for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y) CHECK(phi.related(x, y) == c.related(x, y));
    }
  }
  CHECK(congruences < 500);
}
