#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace semiring_lab;
using namespace support;

static std::set<TableEncoding> encodings(const std::vector<FiniteSemiring>& xs) {
  std::set<TableEncoding> out;
  for (const auto& s : xs) out.insert(canonical_encoding(s));
  return out;
}

TEST_CASE("backtracking and filtering agree for n = 2, 3") {
  for (std::size_t n : {2, 3}) {
    const auto a = enumerate_semirings(n), b = enumerate_semirings_by_filter(n);
    CHECK(encodings(a) == encodings(b));
    CHECK(encodings(a).size() == a.size());
  }
}

TEST_CASE("class counts") {
  // n = 2, 3 from the double computation; n = 4 also from the Python oracle
  CHECK(enumerate_semirings(2).size() == 2);
  CHECK(enumerate_semirings(3).size() == 6);
  CHECK(enumerate_semirings(4).size() == 36);
  CHECK(enumerate_semirings(5).size() == 228);
  CHECK(enumerate_semirings(1).empty());
}

TEST_CASE("the order 3 classes are the oracle's encodings") {
  // additive then multiplicative table, row major, as printed by the oracle
  const std::set<TableEncoding> oracle = {
      {0, 1, 2, 1, 1, 1, 2, 1, 2, 0, 0, 0, 0, 1, 2, 0, 2, 0}, {0, 1, 2, 1, 1, 1, 2, 1, 2, 0, 0, 0, 0, 1, 2, 0, 2, 2},
      {0, 1, 2, 1, 1, 2, 2, 2, 2, 0, 0, 0, 0, 1, 2, 0, 2, 2}, {0, 1, 2, 1, 2, 0, 2, 0, 1, 0, 0, 0, 0, 1, 2, 0, 2, 1},
      {0, 1, 2, 1, 2, 1, 2, 1, 2, 0, 0, 0, 0, 1, 2, 0, 2, 2}, {0, 1, 2, 1, 2, 2, 2, 2, 2, 0, 0, 0, 0, 1, 2, 0, 2, 2}};
  CHECK(encodings(enumerate_semirings(3)) == oracle);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(enumerate_semirings(7), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_semirings_by_filter(4), OrderTooLarge);
}

TEST_CASE("enumerated semirings are canonical and sorted") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto xs = enumerate_semirings(n);
    for (const auto& s : xs) CHECK(canonical_form(s) == s);
    CHECK(std::is_sorted(xs.begin(), xs.end(), [](const FiniteSemiring& a, const FiniteSemiring& b) {
      return canonical_encoding(a) < canonical_encoding(b);
    }));
  }
}

TEST_CASE("thread count does not change the result") {
  CHECK(encodings(enumerate_semirings(4, false, 1)) == encodings(enumerate_semirings(4, false, 3)));
}

TEST_CASE("property: canonical form is invariant under relabelling") {
  std::mt19937 rng(1234);
  for (const auto& s : corpus_and_fixtures(5)) {
    const auto p = random_perm(s.order(), rng);
    const auto t = relabel(s, p);
    CHECK(canonical_encoding(t) == canonical_encoding(s));
    CHECK(are_isomorphic(s, t));
    CHECK(relabel(s, canonical_labelling(s)) == canonical_form(s));
  }
  CHECK_FALSE(are_isomorphic(zmod(4), trunc(3)));
  CHECK_FALSE(are_isomorphic(zmod(4), fixture("prod(zmod(2),zmod(2))")));
}

TEST_CASE("every fixture appears in the enumeration of its order") {
  for (const auto& s : fixtures()) {
    if (s.order() > 5) continue;
    const auto xs = encodings(enumerate_semirings(s.order()));
    CHECK(xs.count(canonical_encoding(s)) == 1);
  }
}
