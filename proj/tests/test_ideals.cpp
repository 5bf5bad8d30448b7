#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

using Sets = std::vector<std::vector<Element>>;

TEST_CASE("ideal lists match the brute-force oracle") {
  CHECK(elems(enumerate_ideals(bool2())) == Sets{{0}, {0, 1}});
  CHECK(elems(enumerate_ideals(zmod(4))) == Sets{{0}, {0, 2}, {0, 1, 2, 3}});
  CHECK(elems(enumerate_ideals(trunc(2))) == Sets{{0}, {0, 2}, {0, 1, 2}});
  CHECK(elems(enumerate_ideals(zmod(6))) == Sets{{0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
  CHECK(elems(enumerate_ideals(fixture("prod(zmod(2),bool2)"))) == Sets{{0}, {0, 2}, {0, 3}, {0, 1, 2, 3}});
}

TEST_CASE("enumerate_ideals agrees with the all-subsets filter") {
  for (const auto& s : corpus_and_fixtures(4)) {
    CHECK(enumerate_ideals(s) == enumerate_ideals_by_subsets(s));
    CHECK(enumerate_ideals_by_generators(s) == enumerate_ideals_by_subsets(s));
  }
}

TEST_CASE("elementwise and idealwise primality agree") {
  for (const auto& s : corpus_and_fixtures(4)) {
    const auto ideals = enumerate_ideals(s);
    for (const auto& p : ideals) {
      if (p.proper())
        CHECK(is_prime_elementwise(s, p) == is_prime(s, p, ideals));
      else
        CHECK_THROWS_AS(is_prime_elementwise(s, p), NotProper);
    }
  }
}

TEST_CASE("classification") {
  const auto z6 = zmod(6);
  const auto c = classify(z6, ideal_of(z6, {0, 3}));
  CHECK(c.proper);
  CHECK(c.subtractive);
  CHECK(c.semisubtractive);
  CHECK(c.prime);
  CHECK(c.maximal);
  CHECK_FALSE(c.strongly_subtractive);

  const auto t2 = trunc(2);
  const auto z = classify(t2, Ideal::zero(t2));
  CHECK(z.prime);  // the oracle finds {0} prime in trunc(2)
  CHECK(z.strongly_subtractive);
  const auto top = classify(t2, ideal_of(t2, {0, 2}));
  CHECK(top.maximal);
  CHECK_FALSE(top.subtractive);  // 2 + 1 = 2 but 1 is outside
  CHECK(top.semisubtractive);

  CHECK_FALSE(classify(t2, Ideal::whole(t2)).prime);
}

TEST_CASE("operations on ideals") {
  const auto z6 = zmod(6);
  const auto a = ideal_of(z6, {0, 3}), b = ideal_of(z6, {0, 2, 4});
  CHECK(ideal_sum(z6, a, b) == Ideal::whole(z6));
  CHECK(ideal_intersection(z6, a, b) == Ideal::zero(z6));
  CHECK(ideal_product(z6, a, b) == Ideal::zero(z6));
  CHECK(colon(z6, Ideal::zero(z6), a) == b);
  CHECK(annihilator(z6, z6.set_of({3})) == b);
  CHECK_THROWS_AS(annihilator(z6, z6.empty_set()), EmptySubset);
  CHECK(elems(principal_ideal(z6, 4)) == std::vector<Element>{0, 2, 4});
  CHECK_THROWS_AS(Ideal(z6, z6.set_of({0, 1})), NotAnIdeal);
  CHECK_THROWS_AS(ideal_sum(z6, a, ideal_of(zmod(4), {0, 2})), OwnerMismatch);
}

TEST_CASE("radical and nilradical") {
  const auto z4 = zmod(4), t2 = trunc(2);
  CHECK(elems(radical(z4, Ideal::zero(z4))) == std::vector<Element>{0, 2});
  CHECK(elems(radical(t2, Ideal::zero(t2))) == std::vector<Element>{0});
  CHECK(nilradical(z4).elements() == std::vector<Element>{0, 2});
  CHECK(nilradical(t2).elements() == std::vector<Element>{0});
  // no proper prime lies above S, so the empty intersection gives S
  CHECK(radical(z4, Ideal::whole(z4)) == Ideal::whole(z4));
  for (const auto& s : corpus_and_fixtures(4)) CHECK(radical(s, Ideal::zero(s)).elements() == nilradical(s));
}

TEST_CASE("contraction and image along homomorphisms") {
  const auto h = validate_hom(zmod(6), zmod(3), {0, 1, 2, 0, 1, 2});
  const auto z3 = zmod(3);
  CHECK(elems(hom_preimage(h, Ideal::zero(z3))) == std::vector<Element>{0, 3});
  CHECK(elems(hom_image_ideal(h, ideal_of(zmod(6), {0, 2, 4}))) == std::vector<Element>{0, 1, 2});
}

TEST_CASE("PROVEN ideal claims hold on the fixtures and the order <= 4 corpus") {
  const AuditOptions opt;
  for (const auto& s : corpus_and_fixtures(4)) {
    const Analysis an(s);
    const EvalContext ctx(an, opt);
    for (const auto* p : default_registry().select({"bpss", "cep", "epvs"})) {
      INFO(p->id);
      CHECK(p->evaluate(ctx).status == Status::pass);
    }
  }
}
