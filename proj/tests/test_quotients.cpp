#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

using Sets = std::vector<std::vector<Element>>;

static Sets as_lists(const std::vector<ElementSet>& xs) {
  Sets out;
  for (const auto& x : xs) out.push_back(x.elements());
  return out;
}

TEST_CASE("Q witnesses match the oracle") {
  const auto z4 = zmod(4);
  CHECK(as_lists(all_Q(z4, ideal_of(z4, {0, 2}))) == Sets{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(all_Q(trunc(2), ideal_of(trunc(2), {0, 2})).empty());
  CHECK_FALSE(find_Q(trunc(2), ideal_of(trunc(2), {0, 2})));
  const auto p = fixture("prod(zmod(2),bool2)");
  CHECK(as_lists(all_Q(p, ideal_of(p, {0, 3}))) == Sets{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(find_Q(p, ideal_of(p, {0, 3}))->elements() == std::vector<Element>{0, 1});
}

TEST_CASE("Z/4 modulo {0,2} is Z/2") {
  const auto z4 = zmod(4);
  const auto a = ideal_of(z4, {0, 2});
  for (const auto& q : all_Q(z4, a)) {
    const auto qs = quotient(z4, make_q_partition(z4, a, q));
    CHECK(qs.semiring.order() == 2);
    CHECK(are_isomorphic(qs.semiring, zmod(2)));
    CHECK(canonical_form(qs.semiring) == canonical_form(zmod(2)));
    CHECK(qs.projection_is_hom);
    CHECK(qs.projection == std::vector<Element>{0, 1, 0, 1});
  }
  CHECK(is_semifield(zmod(2)));
  CHECK_FALSE(is_semifield(zmod(4)));
}

TEST_CASE("partition errors") {
  const auto z4 = zmod(4);
  const auto a = ideal_of(z4, {0, 2});
  CHECK_THROWS_AS(make_q_partition(z4, a, z4.set_of({0, 2})), NotAQPartition);
  CHECK_THROWS_AS(make_q_partition(z4, a, z4.set_of({1})), NotAQPartition);
  // S itself with Q = {0}: the quotient would have order 1
  CHECK_THROWS_AS(quotient(z4, make_q_partition(z4, Ideal::whole(z4), z4.set_of({0}))), QuotientInvalid);
}

TEST_CASE("coset representatives") {
  const auto z6 = zmod(6);
  const auto p = make_q_partition(z6, ideal_of(z6, {0, 3}), z6.set_of({0, 1, 2}));
  CHECK(coset_rep(z6, p, 4) == 1);
  CHECK(coset_rep(z6, p, 5) == 2);
  CHECK(coset(z6, ideal_of(z6, {0, 3}), 2).elements() == std::vector<Element>{2, 5});
}

TEST_CASE("quotient propositions on the fixtures") {
  for (const auto& s : fixtures()) {
    const Analysis an(s);
    for (const auto& [id, v] : audit_q_propositions(an)) {
      INFO(id);
      CHECK(v.status != Status::fail);
    }
  }
  const Analysis z4(zmod(4));
  const auto v = audit_q_propositions(z4);
  CHECK(v.at("pqss").status == Status::pass);
  CHECK(v.at("iqss").status == Status::pass);
  CHECK(audit_q_propositions(Analysis(trunc(2))).at("iqss").status == Status::vacuous);
}

TEST_CASE("pqss and iqss instances on Z/4 with {0,2}") {
  const Analysis an(zmod(4));
  const auto& s = an.semiring();
  const auto inst = make_q_instance(s, ideal_of(s, {0, 2}), s.set_of({0, 1}));
  REQUIRE(inst.quotient);
  CHECK_FALSE(iqss_fails(an, inst));
  CHECK_FALSE(pqss_fails(an, inst, ideal_of(s, {0, 2})));
  CHECK_FALSE(qai_fails(an, inst, Ideal::whole(s)));
  CHECK_FALSE(qsub_fails(s, inst));
  for (Element x = 0; x < 4; ++x) CHECK_FALSE(qlemma_fails(s, inst, x));
}

TEST_CASE("a/i need not be an ideal of S/i") {
  const Analysis an(z3_cover());
  const auto& s = an.semiring();
  const auto i = ideal_of(s, {0, 3});
  CHECK(as_lists(all_Q(s, i)) == Sets{{0, 1, 2}});
  const auto inst = make_q_instance(s, i, s.set_of({0, 1, 2}));
  REQUIRE(inst.quotient);
  CHECK(are_isomorphic(inst.quotient->semiring, zmod(3)));
  const auto a = ideal_of(s, {0, 2, 3, 4});
  CHECK(an.is_semisubtractive(a));
  CHECK(quotient_subset(*inst.quotient, a.elements()).size() == 2);
  CHECK(qai_fails(an, inst, a));
  CHECK(qiji_fails(an, inst, a));
  CHECK(pqss_fails(an, inst, a));
}

TEST_CASE("a semifield quotient by a non-maximal ideal") {
  const Analysis an(bool2_cover());
  const auto& s = an.semiring();
  const auto inst = make_q_instance(s, ideal_of(s, {0, 3}), s.set_of({0, 1}));
  REQUIRE(inst.quotient);
  CHECK(are_isomorphic(inst.quotient->semiring, bool2()));
  CHECK(iqss_fails(an, inst));
  CHECK(an.is_semisubtractive(ideal_of(s, {0, 2, 3})));
}

TEST_CASE("every Q witness is audited on request") {
  const Analysis an(zmod(4));
  const auto v = audit_q_propositions(an, true);
  CHECK(v.at("qsemiring").status == Status::pass);
  CHECK(v.at("qsemiring").data.contains("witness_classes"));
  CHECK(q_ideal_instances(an, true).size() > q_ideal_instances(an, false).size());
}
