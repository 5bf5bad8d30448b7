#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

TEST_CASE("semi-units match the oracle") {
  CHECK(semi_units(trunc(2)).elements() == std::vector<Element>{1, 2});
  CHECK(semi_units(zmod(4)).elements() == std::vector<Element>{1, 3});
  CHECK(semi_units(bool2()).elements() == std::vector<Element>{1});
  CHECK(cancellable_elements(zmod(4)).elements() == std::vector<Element>{1, 3});
  CHECK(cancellable_elements(trunc(2)).elements() == std::vector<Element>{1});
}

TEST_CASE("s-local status") {
  const auto t2 = is_s_local(trunc(2));
  CHECK(t2.s_local);
  CHECK(elems(*t2.max_ideal) == std::vector<Element>{0, 2});
  CHECK(t2.non_semi_units_ideal);  // the non-semi-units are {0}
  CHECK_FALSE(t2.nsu_agrees);

  const auto z4 = is_s_local(zmod(4));
  CHECK(z4.s_local);
  CHECK(z4.nsu_agrees);
  CHECK_FALSE(is_s_local(zmod(6)).s_local);
}

TEST_CASE("trunc(2) refutes sus and sums with x = 2, a = {0,2}") {
  const Analysis an(trunc(2));
  const auto a = ideal_of(an.semiring(), {0, 2});
  CHECK(sus_fails(an, 2, a));
  CHECK(sums_fails(an, 2));
  for (const auto& v : {audit_sus(an), audit_sums(an)}) {
    REQUIRE(v.status == Status::fail);
    CHECK(v.witness->elements.at("x") == 2);
    CHECK(v.witness->sets.at("a") == std::vector<Element>{0, 2});
  }
  const auto nsu = audit_nsu(an);
  CHECK(nsu.status == Status::fail);
  CHECK(nsu.data.at("nsu_agrees") == false);
}

TEST_CASE("localization at the cancellable elements") {
  for (const auto& s : corpus_and_fixtures(5)) {
    const auto l = localize(s);
    // finite cancellable elements are units, so S_X is S again
    CHECK(are_isomorphic(l.semiring, s));
    CHECK(l.fraction(0, 1) == 0);
    CHECK(l.fraction(1, 1) == 1);
    const Analysis an(s);
    for (const auto& a : an.semisubtractive().members()) CHECK_FALSE(psl_fails(an, a));
  }
  const auto l = localize(zmod(4));
  CHECK(l.fraction(1, 3) == l.fraction(3, 1));
}

TEST_CASE("s-local localization is vacuous or passes") {
  for (const auto& s : corpus_and_fixtures(5)) {
    const auto v = audit_slocal_loc(Analysis(s));
    CHECK(v.status != Status::fail);
  }
  CHECK(audit_slocal_loc(Analysis(zmod(6))).status == Status::vacuous);
}
