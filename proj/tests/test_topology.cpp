#include <catch_amalgamated.hpp>

#include <bit>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

TEST_CASE("the space of Z/6") {
  const Analysis an(zmod(6));
  const SemisubtractiveSpace x(an);
  REQUIRE(x.size() == 4);  // {0}, {0,3}, {0,2,4}, S
  const auto& s = an.semiring();
  CHECK(x.h(Ideal::zero(s)) == x.whole());
  CHECK(std::popcount(x.h(ideal_of(s, {0, 3}))) == 2);
  CHECK(x.h(Ideal::whole(s)) == PointSet{1} << x.index(Ideal::whole(s)));
  CHECK(x.is_closed(0));
  CHECK(x.is_closed(x.whole()));
  // closed sets: 0, {S}, h({0,3}), h({0,2,4}), their union, everything
  CHECK(x.closed_sets().size() == 6);
  const auto j = to_json(x);
  CHECK(j.at("points").size() == 4);
}

TEST_CASE("separation, sobriety, connectedness and compactness on the corpus") {
  for (const auto& s : corpus_and_fixtures(5)) {
    const Analysis an(s);
    const SemisubtractiveSpace x(an);
    CHECK(check_T0(x).status == Status::pass);
    CHECK(check_scir(x).status == Status::pass);
    CHECK(check_sober(x).status == Status::pass);
    CHECK(check_connected(x).status == Status::pass);
    CHECK(check_quasi_compact(an, x).status == Status::pass);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x.point_closure(i) == x.subbasis()[i]);
  }
}

TEST_CASE("closure is the least closed superset") {
  const SemisubtractiveSpace x(Analysis(fixture("prod(zmod(2),zmod(3))")));
  for (PointSet p = 0; p <= x.whole(); ++p) {
    const auto c = x.closure(p);
    CHECK(x.is_closed(c));
    CHECK((p & ~c) == 0);
    for (auto d : x.closed_sets())
      if ((p & ~d) == 0) CHECK((c & ~d) == 0);
  }
}

TEST_CASE("induced maps") {
  const auto h = validate_hom(zmod(6), zmod(3), {0, 1, 2, 0, 1, 2});
  const auto m = induced_map(h);
  CHECK(m.image.size() == 2);
  CHECK_FALSE(conmap1_fails(h));
  CHECK_FALSE(conmap2_fails(h));
  CHECK_FALSE(conmap3_fails(h));
}

TEST_CASE("a surjection that is not a homeomorphism onto h(Ker)") {
  const auto h = validate_hom(trunc(2), bool2(), {0, 1, 1});
  CHECK(h.surjective());
  CHECK(hom_kernel(h) == Ideal::zero(trunc(2)));
  // Id_s(bool2) has 2 points, h({0}) in Id_s(trunc(2)) has 3
  CHECK(conmap2_fails(h));
  CHECK_FALSE(conmap1_fails(h));
  const auto v = audit_conmap2(hom_family(Analysis(trunc(2))));
  CHECK(v.status == Status::fail);
}

TEST_CASE("hom families") {
  const Analysis an(zmod(4));
  const auto homs = hom_family(an);
  CHECK(std::any_of(homs.begin(), homs.end(), [](const SemiringHom& h) { return h.target == zmod(2); }));
  for (std::size_t i = 0; i < homs.size(); ++i)
    for (std::size_t j = i + 1; j < homs.size(); ++j) CHECK_FALSE((homs[i].target == homs[j].target && homs[i].map == homs[j].map));
  for (const auto& h : homs) {
    CHECK_FALSE(conmap1_fails(h));
    CHECK_FALSE(conmap3_fails(h));
  }
}

TEST_CASE("the DOT view of the space") {
  const auto dot = hasse_dot(Analysis(zmod(4)).semisubtractive(), "space");
  CHECK(dot.find("digraph space") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}
