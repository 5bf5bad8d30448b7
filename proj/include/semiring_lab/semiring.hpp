#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace semiring_lab {

/// Row-major square operation table as it arrives from a loader.
using Table = std::vector<std::vector<int>>;

/// A finite commutative semiring with identity on the elements 0..n-1.
///
/// Element 0 is the additive identity (and multiplicatively absorbing) and
/// element 1 is the multiplicative identity. Instances only come out of
/// `FiniteSemiring::validate`, so every value satisfies the axioms and is
/// immutable afterwards.
class FiniteSemiring {
 public:
  /// Checks every axiom exhaustively (O(n^3)) and throws on the first failure.
  static FiniteSemiring validate(const Table& add, const Table& mul);

  /// Non-throwing form of the same check. Returns the first violation found,
  /// or nothing when the tables describe a semiring. ZeroEqualsOne is reported
  /// with axiom name "zero != one".
  static std::optional<AxiomViolation> check_axioms(const Table& add, const Table& mul);

  std::size_t order() const noexcept { return n_; }
  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }

  Table add_table() const { return unflatten(add_); }
  Table mul_table() const { return unflatten(mul_); }

  /// Hash of the order and both tables; identifies the owner of element sets.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  ElementSet empty_set() const { return ElementSet(n_, fingerprint_); }
  ElementSet full_set() const { return ElementSet::full(n_, fingerprint_); }
  ElementSet set_of(std::initializer_list<Element> xs) const { return ElementSet::of(n_, fingerprint_, xs); }
  ElementSet set_of(const std::vector<Element>& xs) const {
    ElementSet s = empty_set();
    for (auto x : xs) {
      if (x < 0 || static_cast<std::size_t>(x) >= n_) throw BadParams("element out of range: " + std::to_string(x));
      s.insert(x);
    }
    return s;
  }

  /// x^k with x^0 = 1.
  Element power(Element x, std::size_t k) const noexcept {
    Element r = 1;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  bool operator==(const FiniteSemiring& o) const noexcept {
    return n_ == o.n_ && add_ == o.add_ && mul_ == o.mul_;
  }

 private:
  FiniteSemiring(std::size_t n, std::vector<Element> add, std::vector<Element> mul);

  Table unflatten(const std::vector<Element>& flat) const {
    Table t(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t[i][j] = flat[i * n_ + j];
    return t;
  }

  std::size_t n_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::uint64_t fingerprint_;
};

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

inline FiniteSemiring::FiniteSemiring(std::size_t n, std::vector<Element> add, std::vector<Element> mul)
    : n_(n), add_(std::move(add)), mul_(std::move(mul)) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = detail::fnv1a(h, n_);
  for (auto v : add_) h = detail::fnv1a(h, static_cast<std::uint64_t>(v));
  for (auto v : mul_) h = detail::fnv1a(h, static_cast<std::uint64_t>(v));
  fingerprint_ = h;
}

inline std::optional<AxiomViolation> FiniteSemiring::check_axioms(const Table& add, const Table& mul) {
  const std::size_t n = add.size();
  if (mul.size() != n) throw MalformedTables("add and mul tables differ in order");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n) throw MalformedTables("tables must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (add[i][j] < 0 || static_cast<std::size_t>(add[i][j]) >= n || mul[i][j] < 0 ||
          static_cast<std::size_t>(mul[i][j]) >= n)
        throw MalformedTables("table entry out of range at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  if (n > max_order) throw MalformedTables("order exceeds " + std::to_string(max_order));
  if (n < 2) return AxiomViolation("zero != one", {0, 0, -1});

  const int m = static_cast<int>(n);
  for (int x = 0; x < m; ++x) {
    if (add[0][x] != x || add[x][0] != x) return AxiomViolation("additive identity", {0, x, -1});
  }
  for (int x = 0; x < m; ++x) {
    if (mul[1][x] != x || mul[x][1] != x) return AxiomViolation("multiplicative identity", {1, x, -1});
  }
  for (int x = 0; x < m; ++x) {
    if (mul[0][x] != 0 || mul[x][0] != 0) return AxiomViolation("zero absorbs", {0, x, -1});
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (add[x][y] != add[y][x]) return AxiomViolation("additive commutativity", {x, y, -1});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (mul[x][y] != mul[y][x]) return AxiomViolation("multiplicative commutativity", {x, y, -1});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (add[add[x][y]][z] != add[x][add[y][z]]) return AxiomViolation("additive associativity", {x, y, z});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]])
          return AxiomViolation("multiplicative associativity", {x, y, z});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]) return AxiomViolation("distributivity", {x, y, z});
  return std::nullopt;
}

inline FiniteSemiring FiniteSemiring::validate(const Table& add, const Table& mul) {
  if (auto v = check_axioms(add, mul)) {
    if (v->axiom() == "zero != one") throw ZeroEqualsOne();
    throw *v;
  }
  const std::size_t n = add.size();
  std::vector<Element> a(n * n), m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = add[i][j];
      m[i * n + j] = mul[i][j];
    }
  return FiniteSemiring(n, std::move(a), std::move(m));
}

/// The unique y with x + y = 0, if any.
inline std::optional<Element> additive_inverse(const FiniteSemiring& s, Element x) {
  std::optional<Element> found;
  for (Element y = 0; y < static_cast<Element>(s.order()); ++y) {
    if (s.add(x, y) == 0) {
      // inverses are unique in a commutative monoid
      assert(!found);
      found = y;
    }
  }
  return found;
}

/// V(S): the elements that have an additive inverse.
inline ElementSet invertible_set(const FiniteSemiring& s) {
  ElementSet v = s.empty_set();
  for (Element x = 0; x < static_cast<Element>(s.order()); ++x)
    if (additive_inverse(s, x)) v.insert(x);
  return v;
}

inline bool is_ring(const FiniteSemiring& s) { return invertible_set(s).is_full(); }

/// Applies a permutation of element labels. `perm[old] = new`; it must fix 0 and 1.
inline FiniteSemiring relabel(const FiniteSemiring& s, const std::vector<Element>& perm) {
  const std::size_t n = s.order();
  if (perm.size() != n || perm[0] != 0 || perm[1] != 1) throw BadParams("relabelling must fix 0 and 1");
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[perm[i]][perm[j]] = perm[s.add(static_cast<Element>(i), static_cast<Element>(j))];
      mul[perm[i]][perm[j]] = perm[s.mul(static_cast<Element>(i), static_cast<Element>(j))];
    }
  return FiniteSemiring::validate(add, mul);
}

/// A validated semiring homomorphism; `map[x]` is the image of x.
struct SemiringHom {
  FiniteSemiring source;
  FiniteSemiring target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }

  bool surjective() const {
    ElementSet img = target.empty_set();
    for (auto y : map) img.insert(y);
    return img.is_full();
  }
};

/// Non-throwing homomorphism check; returns the failed law and witness pair.
inline std::optional<NotAHom> check_hom(const FiniteSemiring& source, const FiniteSemiring& target,
                                        const std::vector<Element>& map) {
  const auto n = static_cast<Element>(source.order());
  if (map.size() != source.order()) throw BadParams("map length must equal the source order");
  for (auto y : map)
    if (y < 0 || static_cast<std::size_t>(y) >= target.order()) throw BadParams("map entry out of range");
  if (map[0] != 0) return NotAHom("0 must map to 0", {0, 0});
  if (map[1] != 1) return NotAHom("1 must map to 1", {1, 1});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (map[source.add(x, y)] != target.add(map[x], map[y])) return NotAHom("addition", {x, y});
      if (map[source.mul(x, y)] != target.mul(map[x], map[y])) return NotAHom("multiplication", {x, y});
    }
  return std::nullopt;
}

inline SemiringHom validate_hom(const FiniteSemiring& source, const FiniteSemiring& target,
                                std::vector<Element> map) {
  if (auto v = check_hom(source, target, map)) throw *v;
  return SemiringHom{source, target, std::move(map)};
}

inline SemiringHom identity_hom(const FiniteSemiring& s) {
  std::vector<Element> map(s.order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Element>(i);
  return SemiringHom{s, s, std::move(map)};
}

/// Every homomorphism source -> target, in ascending lexicographic map order.
inline std::vector<SemiringHom> all_homs(const FiniteSemiring& source, const FiniteSemiring& target) {
  std::vector<SemiringHom> out;
  const std::size_t n = source.order();
  std::vector<Element> map(n, 0);
  map[1] = 1;
  const auto m = static_cast<Element>(target.order());
  // odometer over the images of elements 2..n-1
  while (true) {
    if (!check_hom(source, target, map)) out.push_back(SemiringHom{source, target, map});
    bool advanced = false;
    for (std::size_t i = n; i > 2 && !advanced;) {
      --i;
      if (++map[i] < m) {
        advanced = true;
      } else {
        map[i] = 0;
      }
    }
    if (!advanced) return out;
  }
}

}  // namespace semiring_lab
