#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

TEST_CASE("fixtures validate") {
  for (const auto& name : standard_fixture_names()) {
    INFO(name);
    const auto s = fixture(name);
    CHECK_FALSE(FiniteSemiring::check_axioms(s.add_table(), s.mul_table()));
  }
  CHECK(fixture("zmod(4)").order() == 4);
  CHECK(fixture("trunc(3)").order() == 4);
  CHECK(fixture("prod(zmod(2),zmod(3))").order() == 6);
  CHECK_THROWS_AS(fixture("zmod(1)"), BadParams);
  CHECK_THROWS_AS(fixture("nonsense"), BadParams);
}

TEST_CASE("single cell mutations of Z/4 are caught with a genuine witness") {
  const auto z4 = zmod(4);
  int mutants = 0;
  for (int table = 0; table < 2; ++table)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int v = 0; v < 4; ++v) {
          auto add = z4.add_table(), mul = z4.mul_table();
          auto& t = table == 0 ? add : mul;
          if (t[i][j] == v) continue;
          t[i][j] = v;
          ++mutants;
          try {
            FiniteSemiring::validate(add, mul);
            FAIL("mutant accepted");
          } catch (const AxiomViolation& e) {
            INFO(e.what());
            CHECK(violates(add, mul, e.axiom(), e.witness()));
          }
        }
  CHECK(mutants == 96);
}

TEST_CASE("malformed tables and the trivial semiring") {
  CHECK_THROWS_AS(FiniteSemiring::validate({{0}}, {{0}}), ZeroEqualsOne);
  CHECK_THROWS_AS(FiniteSemiring::validate({{0, 1}, {1, 0}}, {{0, 0}}), MalformedTables);
  CHECK_THROWS_AS(FiniteSemiring::validate({{0, 1}, {1, 5}}, {{0, 0}, {0, 1}}), MalformedTables);
}

TEST_CASE("V(S)") {
  CHECK(invertible_set(zmod(6)).is_full());
  CHECK(invertible_set(bool2()).elements() == std::vector<Element>{0});
  CHECK(invertible_set(trunc(2)).elements() == std::vector<Element>{0});
  // prod(zmod(2),bool2) labels (0,0),(1,1),(0,1),(1,0)
  CHECK(invertible_set(fixture("prod(zmod(2),bool2)")).elements() == std::vector<Element>{0, 3});
  CHECK(is_ring(zmod(5)));
  CHECK_FALSE(is_ring(trunc(3)));
  CHECK(additive_inverse(zmod(6), 2) == 4);
  CHECK_FALSE(additive_inverse(bool2(), 1));
}

TEST_CASE("json round trip and identity normalisation") {
  for (const auto& s : fixtures()) CHECK(semiring_from_json(to_json(s)) == s);
  // identities stored at indices 2 and 0 are moved to 0 and 1
  const json j = {{"add", {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}}, {"mul", {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}}};
  // this is Z/3 with 0 stored as 2 and 1 stored as 0
  CHECK(are_isomorphic(semiring_from_json(j), zmod(3)));
  CHECK_THROWS_AS(semiring_from_json(json::array()), MalformedTables);
}

TEST_CASE("homomorphisms") {
  CHECK(all_homs(zmod(4), zmod(2)).size() == 1);
  CHECK(all_homs(zmod(3), zmod(2)).empty());
  CHECK(all_homs(trunc(2), bool2()).size() == 1);
  CHECK_THROWS_AS(validate_hom(zmod(4), zmod(2), {0, 1, 1, 1}), NotAHom);
  const auto h = validate_hom(zmod(6), zmod(3), {0, 1, 2, 0, 1, 2});
  CHECK(h.surjective());
  CHECK(elems(hom_kernel(h)) == std::vector<Element>{0, 3});
}

TEST_CASE("property: relabelling preserves the axioms and V(S)") {
  std::mt19937 rng(20261018);
  for (const auto& s : corpus_and_fixtures(4)) {
    for (int k = 0; k < 5; ++k) {
      const auto p = random_perm(s.order(), rng);
      const auto t = relabel(s, p);
      CHECK_FALSE(FiniteSemiring::check_axioms(t.add_table(), t.mul_table()));
      CHECK(invertible_set(t).size() == invertible_set(s).size());
      for (Element x = 0; x < static_cast<Element>(s.order()); ++x)
        for (Element y = 0; y < static_cast<Element>(s.order()); ++y) {
          CHECK(t.add(p[x], p[y]) == p[s.add(x, y)]);
          CHECK(t.mul(p[x], p[y]) == p[s.mul(x, y)]);
        }
    }
  }
}

TEST_CASE("property: random tables are rejected or satisfy every axiom") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cell(0, 2);
  int accepted = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Table add(3, std::vector<int>(3)), mul(3, std::vector<int>(3));
    for (int x = 0; x < 3; ++x) {
      add[0][x] = add[x][0] = x;
      mul[1][x] = mul[x][1] = x;
      mul[0][x] = mul[x][0] = 0;
    }
    for (int i = 1; i < 3; ++i)
      for (int j = 1; j < 3; ++j) add[i][j] = cell(rng);
    mul[2][2] = cell(rng);
    if (auto v = FiniteSemiring::check_axioms(add, mul)) {
      CHECK(violates(add, mul, v->axiom(), v->witness()));
    } else {
      ++accepted;
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          for (int z = 0; z < 3; ++z) {
            CHECK(add[add[x][y]][z] == add[x][add[y][z]]);
            CHECK(mul[x][add[y][z]] == add[mul[x][y]][mul[x][z]]);
          }
    }
  }
  CHECK(accepted > 0);
}
