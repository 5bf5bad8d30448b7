#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "semiring_lab/semiring_lab.hpp"

namespace support {

using namespace semiring_lab;

/// Does (x, y, z) really break the named axiom in these tables?
inline bool violates(const Table& add, const Table& mul, const std::string& axiom, std::array<int, 3> w) {
  const auto [x, y, z] = w;
  if (axiom == "additive identity") return x == 0 && (add[0][y] != y || add[y][0] != y);
  if (axiom == "multiplicative identity") return x == 1 && (mul[1][y] != y || mul[y][1] != y);
  if (axiom == "zero absorbs") return x == 0 && (mul[0][y] != 0 || mul[y][0] != 0);
  if (axiom == "additive commutativity") return add[x][y] != add[y][x];
  if (axiom == "multiplicative commutativity") return mul[x][y] != mul[y][x];
  if (axiom == "additive associativity") return add[add[x][y]][z] != add[x][add[y][z]];
  if (axiom == "multiplicative associativity") return mul[mul[x][y]][z] != mul[x][mul[y][z]];
  if (axiom == "distributivity") return mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]];
  return false;
}

inline std::vector<FiniteSemiring> fixtures() {
  std::vector<FiniteSemiring> out;
  for (const auto& n : standard_fixture_names()) out.push_back(fixture(n));
  return out;
}

/// Orders 2..max_order, one per isomorphism class.
inline std::vector<FiniteSemiring> corpus(std::size_t max_order) {
  std::vector<FiniteSemiring> out;
  for (std::size_t n = 2; n <= max_order; ++n)
    for (auto& s : enumerate_semirings(n)) out.push_back(std::move(s));
  return out;
}

inline std::vector<FiniteSemiring> corpus_and_fixtures(std::size_t max_order) {
  auto out = corpus(max_order);
  for (auto& s : fixtures()) out.push_back(std::move(s));
  return out;
}

/// A uniformly random relabelling fixing 0 and 1.
inline std::vector<Element> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Element>(i);
  std::shuffle(p.begin() + 2, p.end(), rng);
  return p;
}

inline Ideal ideal_of(const FiniteSemiring& s, std::initializer_list<Element> xs) { return Ideal(s, s.set_of(xs)); }

inline std::vector<Element> elems(const Ideal& a) { return a.elements().elements(); }

inline std::vector<std::vector<Element>> elems(const std::vector<Ideal>& xs) {
  std::vector<std::vector<Element>> out;
  for (const auto& x : xs) out.push_back(elems(x));
  return out;
}

// Tables confirmed by tests/oracle/brute_force.py.

/// Order 5; Id(S) contains the pentagon {0} < {0,3} < {0,2,3} < {0,2,3,4}, {0} < {0,4}.
inline FiniteSemiring pentagon() {
  return FiniteSemiring::validate({{0, 1, 2, 3, 4}, {1, 1, 1, 1, 1}, {2, 1, 2, 2, 2}, {3, 1, 2, 3, 2}, {4, 1, 2, 2, 4}},
                                  {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 0, 0, 0}, {0, 3, 0, 0, 0}, {0, 4, 0, 0, 0}});
}

/// Order 5; {0,3} is a Q-ideal with Q = {0,1,2} and quotient Z/3.
inline FiniteSemiring z3_cover() {
  return FiniteSemiring::validate({{0, 1, 2, 3, 4}, {1, 2, 3, 4, 2}, {2, 3, 4, 2, 3}, {3, 4, 2, 3, 4}, {4, 2, 3, 4, 2}},
                                  {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 4, 3, 2}, {0, 3, 3, 3, 3}, {0, 4, 2, 3, 4}});
}

/// Order 4; {0,3} is a Q-ideal with Q = {0,1}, S/{0,3} is bool2, and {0,2,3} lies above it.
inline FiniteSemiring bool2_cover() {
  return FiniteSemiring::validate({{0, 1, 2, 3}, {1, 1, 2, 2}, {2, 2, 2, 2}, {3, 2, 2, 3}},
                                  {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 2, 3}, {0, 3, 3, 0}});
}

}  // namespace support
