#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <vector>

#include "element_set.hpp"
#include "semiring.hpp"

namespace semiring_lab {

/// An ideal of a finite semiring: contains 0, closed under + and under
/// multiplication by arbitrary semiring elements.
class Ideal {
 public:
  /// Throws NotAnIdeal unless `x` is an ideal of `s`.
  Ideal(const FiniteSemiring& s, ElementSet x);

  /// Wraps a set the caller already knows to be an ideal.
  static Ideal unchecked(ElementSet x) { return Ideal(std::move(x)); }

  static Ideal zero(const FiniteSemiring& s) { return Ideal(s.set_of({0})); }
  static Ideal whole(const FiniteSemiring& s) { return Ideal(s.full_set()); }

  const ElementSet& elements() const noexcept { return elements_; }
  bool contains(Element x) const noexcept { return elements_.contains(x); }
  bool proper() const noexcept { return !elements_.is_full(); }
  bool subset_of(const Ideal& o) const noexcept { return elements_.subset_of(o.elements_); }
  std::size_t size() const noexcept { return elements_.size(); }

  bool operator==(const Ideal& o) const noexcept = default;
  std::strong_ordering operator<=>(const Ideal& o) const noexcept { return elements_ <=> o.elements_; }

 private:
  explicit Ideal(ElementSet x) : elements_(std::move(x)) {}
  ElementSet elements_;
};

inline bool is_ideal(const FiniteSemiring& s, const ElementSet& x) {
  if (x.owner() != s.fingerprint() || x.order() != s.order()) throw OwnerMismatch();
  if (!x.contains(0)) return false;
  bool ok = true;
  x.for_each([&](Element a) {
    x.for_each([&](Element b) { ok = ok && x.contains(s.add(a, b)); });
    for (Element r = 0; r < static_cast<Element>(s.order()); ++r) ok = ok && x.contains(s.mul(r, a));
  });
  return ok;
}

inline Ideal::Ideal(const FiniteSemiring& s, ElementSet x) : elements_(std::move(x)) {
  if (!is_ideal(s, elements_)) throw NotAnIdeal("set is not an ideal");
}

namespace detail {

/// Additive closure of a set containing 0.
inline ElementSet additive_closure(const FiniteSemiring& s, ElementSet x) {
  std::vector<Element> queue = x.elements();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element a = queue[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element c = s.add(a, queue[j]);
      if (!x.contains(c)) {
        x.insert(c);
        queue.push_back(c);
      }
    }
  }
  return x;
}

}  // namespace detail

/// Smallest ideal containing X (the zero ideal for empty X).
inline Ideal generated_ideal(const FiniteSemiring& s, const ElementSet& x) {
  if (x.owner() != s.fingerprint()) throw OwnerMismatch();
  // S-multiples first; by distributivity their additive closure stays S-closed
  ElementSet m = s.set_of({0});
  x.for_each([&](Element a) {
    for (Element r = 0; r < static_cast<Element>(s.order()); ++r) m.insert(s.mul(r, a));
  });
  return Ideal::unchecked(detail::additive_closure(s, m));
}

inline Ideal principal_ideal(const FiniteSemiring& s, Element x) { return generated_ideal(s, s.set_of({x})); }

/// All ideals by testing each subset that contains 0. Exponential in the order.
inline std::vector<Ideal> enumerate_ideals_by_subsets(const FiniteSemiring& s) {
  if (s.order() > 24) throw OrderTooLarge("subset enumeration is limited to order 24");
  std::vector<Ideal> out;
  const std::uint64_t limit = std::uint64_t{1} << s.order();
  for (std::uint64_t bits = 1; bits < limit; bits += 2) {
    ElementSet x(s.order(), s.fingerprint(), bits);
    if (is_ideal(s, x)) out.push_back(Ideal::unchecked(x));
  }
  return out;
}

/// All ideals as sums of principal ideals: every ideal is the sum of the
/// principal ideals of its members.
inline std::vector<Ideal> enumerate_ideals_by_generators(const FiniteSemiring& s) {
  std::vector<ElementSet> principals;
  for (Element x = 0; x < static_cast<Element>(s.order()); ++x) principals.push_back(principal_ideal(s, x).elements());
  std::set<ElementSet> seen{s.set_of({0})};
  std::vector<ElementSet> queue{s.set_of({0})};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& p : principals) {
      if (p.subset_of(queue[i])) continue;
      auto sum = detail::additive_closure(s, queue[i] | p);
      if (seen.insert(sum).second) queue.push_back(sum);
    }
  }
  std::vector<Ideal> out;
  for (const auto& x : seen) out.push_back(Ideal::unchecked(x));
  return out;
}

/// Every ideal exactly once, in ascending bitset order.
inline std::vector<Ideal> enumerate_ideals(const FiniteSemiring& s) {
  return s.order() <= 10 ? enumerate_ideals_by_subsets(s) : enumerate_ideals_by_generators(s);
}

inline void require_owner(const FiniteSemiring& s, const Ideal& a) {
  if (a.elements().owner() != s.fingerprint()) throw OwnerMismatch();
}

inline Ideal ideal_sum(const FiniteSemiring& s, const Ideal& a, const Ideal& b) {
  require_owner(s, a);
  require_owner(s, b);
  return Ideal::unchecked(detail::additive_closure(s, a.elements() | b.elements()));
}

inline Ideal ideal_product(const FiniteSemiring& s, const Ideal& a, const Ideal& b) {
  require_owner(s, a);
  require_owner(s, b);
  ElementSet products = s.empty_set();
  a.elements().for_each([&](Element x) { b.elements().for_each([&](Element y) { products.insert(s.mul(x, y)); }); });
  return generated_ideal(s, products);
}

/// Intersection of a family; the empty family gives S.
inline Ideal ideal_intersection(const FiniteSemiring& s, const std::vector<Ideal>& family) {
  ElementSet r = s.full_set();
  for (const auto& a : family) {
    require_owner(s, a);
    r = r & a.elements();
  }
  return Ideal::unchecked(r);
}

inline Ideal ideal_intersection(const FiniteSemiring& s, const Ideal& a, const Ideal& b) {
  return ideal_intersection(s, std::vector<Ideal>{a, b});
}

/// (a : b) = {r : rb ⊆ a}.
inline Ideal colon(const FiniteSemiring& s, const Ideal& a, const Ideal& b) {
  require_owner(s, a);
  require_owner(s, b);
  ElementSet r = s.empty_set();
  for (Element x = 0; x < static_cast<Element>(s.order()); ++x) {
    bool in = true;
    b.elements().for_each([&](Element y) { in = in && a.contains(s.mul(x, y)); });
    if (in) r.insert(x);
  }
  return Ideal::unchecked(r);
}

inline Ideal annihilator(const FiniteSemiring& s, const ElementSet& x) {
  if (x.owner() != s.fingerprint()) throw OwnerMismatch();
  if (x.empty()) throw EmptySubset();
  ElementSet r = s.empty_set();
  for (Element a = 0; a < static_cast<Element>(s.order()); ++a) {
    bool in = true;
    x.for_each([&](Element y) { in = in && s.mul(a, y) == 0; });
    if (in) r.insert(a);
  }
  return Ideal::unchecked(r);
}

/// Flags describing an ideal.
struct IdealClassification {
  bool proper = false;
  bool subtractive = false;
  bool strongly_subtractive = false;
  bool semisubtractive = false;
  bool prime = false;
  bool maximal = false;
};

/// Every x in a ∩ V(S) has -x in a.
inline bool is_semisubtractive(const FiniteSemiring& s, const Ideal& a) {
  bool ok = true;
  a.elements().for_each([&](Element x) {
    if (auto neg = additive_inverse(s, x)) ok = ok && a.contains(*neg);
  });
  return ok;
}

/// x ∈ a and x + y ∈ a imply y ∈ a.
inline bool is_subtractive(const FiniteSemiring& s, const Ideal& a) {
  const auto n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (a.contains(s.add(x, y)) && !a.contains(y)) return false;
  }
  return true;
}

/// x + y ∈ a implies x, y ∈ a.
inline bool is_strongly_subtractive(const FiniteSemiring& s, const Ideal& a) {
  const auto n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.contains(s.add(x, y)) && !(a.contains(x) && a.contains(y))) return false;
  return true;
}

/// xy ∈ p implies x ∈ p or y ∈ p. Throws NotProper for p = S.
inline bool is_prime_elementwise(const FiniteSemiring& s, const Ideal& p) {
  require_owner(s, p);
  if (!p.proper()) throw NotProper();
  const auto n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      if (p.contains(s.mul(x, y)) && !p.contains(x) && !p.contains(y)) return false;
  return true;
}

/// ab ⊆ p implies a ⊆ p or b ⊆ p, quantified over the given ideals.
inline bool is_prime(const FiniteSemiring& s, const Ideal& p, const std::vector<Ideal>& ideals) {
  require_owner(s, p);
  if (!p.proper()) throw NotProper();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].subset_of(p)) continue;
    for (std::size_t j = i; j < ideals.size(); ++j) {
      if (ideals[j].subset_of(p)) continue;
      if (ideal_product(s, ideals[i], ideals[j]).subset_of(p)) return false;
    }
  }
  return true;
}

inline bool is_prime(const FiniteSemiring& s, const Ideal& p) { return is_prime(s, p, enumerate_ideals(s)); }

inline IdealClassification classify(const FiniteSemiring& s, const Ideal& a, const std::vector<Ideal>& ideals) {
  require_owner(s, a);
  IdealClassification c;
  c.proper = a.proper();
  c.subtractive = is_subtractive(s, a);
  c.strongly_subtractive = is_strongly_subtractive(s, a);
  c.semisubtractive = is_semisubtractive(s, a);
  c.prime = c.proper && is_prime(s, a, ideals);
  c.maximal = c.proper && std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& b) {
                return b.proper() && a.elements().proper_subset_of(b.elements());
              });
  return c;
}

inline IdealClassification classify(const FiniteSemiring& s, const Ideal& a) {
  return classify(s, a, enumerate_ideals(s));
}

/// Intersection of the prime ideals containing a. With no such prime
/// (a = S) the empty intersection gives S.
inline Ideal radical(const FiniteSemiring& s, const Ideal& a, const std::vector<Ideal>& ideals) {
  require_owner(s, a);
  std::vector<Ideal> primes;
  for (const auto& p : ideals)
    if (p.proper() && a.subset_of(p) && is_prime(s, p, ideals)) primes.push_back(p);
  return ideal_intersection(s, primes);
}

inline Ideal radical(const FiniteSemiring& s, const Ideal& a) { return radical(s, a, enumerate_ideals(s)); }

/// Nilpotent elements; powers up to the order suffice since they cycle.
inline ElementSet nilradical(const FiniteSemiring& s) {
  ElementSet r = s.empty_set();
  for (Element x = 0; x < static_cast<Element>(s.order()); ++x) {
    Element p = x;
    for (std::size_t k = 1; k <= s.order(); ++k, p = s.mul(p, x)) {
      if (p == 0) {
        r.insert(x);
        break;
      }
    }
  }
  return r;
}

/// Pointwise image; an ideal of the target whenever the hom is surjective.
inline ElementSet hom_image(const SemiringHom& h, const ElementSet& a) {
  if (a.owner() != h.source.fingerprint()) throw OwnerMismatch();
  ElementSet r = h.target.empty_set();
  a.for_each([&](Element x) { r.insert(h(x)); });
  return r;
}

/// Strict form: throws NotSurjective for non-surjective homs.
inline Ideal hom_image_ideal(const SemiringHom& h, const Ideal& a) {
  if (!h.surjective()) throw NotSurjective();
  return Ideal(h.target, hom_image(h, a.elements()));
}

inline Ideal hom_preimage(const SemiringHom& h, const Ideal& b) {
  if (b.elements().owner() != h.target.fingerprint()) throw OwnerMismatch();
  ElementSet r = h.source.empty_set();
  for (Element x = 0; x < static_cast<Element>(h.source.order()); ++x)
    if (b.contains(h(x))) r.insert(x);
  return Ideal::unchecked(r);
}

inline Ideal hom_kernel(const SemiringHom& h) { return hom_preimage(h, Ideal::zero(h.target)); }

}  // namespace semiring_lab
