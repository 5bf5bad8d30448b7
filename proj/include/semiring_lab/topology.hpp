#pragma once

#include <bit>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "local.hpp"
#include "quotients.hpp"

namespace semiring_lab {

/// Subsets of the point set, bit i standing for member i of Id_s.
using PointSet = std::uint64_t;

/// Id_s(S) with the topology whose subbasic closed sets are h(𝔞).
class SemisubtractiveSpace {
 public:
  explicit SemisubtractiveSpace(const Analysis& an) : points_(an.semisubtractive()) {
    const auto k = points_.size();
    if (k > 63) throw OrderTooLarge("too many points for a point bitset");
    whole_ = (PointSet{1} << k) - 1;
    for (std::size_t i = 0; i < k; ++i) {
      PointSet h = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (points_.leq(i, j)) h |= PointSet{1} << j;
      subbasis_.push_back(h);
    }
    std::set<PointSet> closed(subbasis_.begin(), subbasis_.end());
    closed.insert(0);
    closed.insert(whole_);
    // finite unions and intersections of subbasics; the finite lattice they
    // generate is exactly the closed-set family
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<PointSet> now(closed.begin(), closed.end());
      for (std::size_t i = 0; i < now.size(); ++i)
        for (std::size_t j = i + 1; j < now.size(); ++j) {
          grew |= closed.insert(now[i] | now[j]).second;
          grew |= closed.insert(now[i] & now[j]).second;
        }
    }
    closed_.assign(closed.begin(), closed.end());
  }

  const IdealFamily& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  PointSet whole() const noexcept { return whole_; }
  const std::vector<PointSet>& subbasis() const noexcept { return subbasis_; }
  const std::vector<PointSet>& closed_sets() const noexcept { return closed_; }

  PointSet h(const Ideal& a) const { return subbasis_.at(index(a)); }
  std::size_t index(const Ideal& a) const {
    auto i = points_.index_of(a);
    if (!i) throw NotMember();
    return *i;
  }
  bool is_closed(PointSet x) const { return std::binary_search(closed_.begin(), closed_.end(), x); }

  PointSet closure(PointSet x) const {
    PointSet c = whole_;
    for (auto d : closed_)
      if ((x & ~d) == 0) c &= d;
    return c;
  }
  PointSet point_closure(std::size_t i) const { return closure(PointSet{1} << i); }

  std::vector<Ideal> members_of(PointSet x) const {
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (x >> i & 1) out.push_back(points_[i]);
    return out;
  }

 private:
  IdealFamily points_;
  PointSet whole_ = 0;
  std::vector<PointSet> subbasis_;
  std::vector<PointSet> closed_;
};

inline SemisubtractiveSpace build_space(const Analysis& an) { return SemisubtractiveSpace(an); }
inline SemisubtractiveSpace build_space(const FiniteSemiring& s) { return SemisubtractiveSpace(*analysis_for(s)); }

inline json to_json(const SemisubtractiveSpace& x) {
  json points = json::array();
  for (const auto& p : x.points().members()) points.push_back(to_json(p.elements()));
  json closed = json::array();
  for (auto c : x.closed_sets()) {
    json idx = json::array();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (c >> i & 1) idx.push_back(i);
    closed.push_back(idx);
  }
  return json{{"points", points}, {"closed_sets", closed}};
}

// Replay predicates for the space itself.

inline bool t0_fails(const SemisubtractiveSpace& x, std::size_t i, std::size_t j) {
  return i != j && x.point_closure(i) == x.point_closure(j);
}

/// The closure of {𝔞} is h(𝔞).
inline bool scir_fails(const SemisubtractiveSpace& x, std::size_t i) { return x.point_closure(i) != x.subbasis()[i]; }

inline bool is_irreducible_closed(const SemisubtractiveSpace& x, PointSet d) {
  if (d == 0 || !x.is_closed(d)) return false;
  for (auto a : x.closed_sets())
    for (auto b : x.closed_sets())
      if (a != d && b != d && (a & ~d) == 0 && (b & ~d) == 0 && (a | b) == d) return false;
  return true;
}

inline int generic_points(const SemisubtractiveSpace& x, PointSet d) {
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += (d >> i & 1) && x.point_closure(i) == d ? 1 : 0;
  return count;
}

inline bool sober_fails(const SemisubtractiveSpace& x, PointSet d) {
  return is_irreducible_closed(x, d) && generic_points(x, d) != 1;
}

inline bool connected_fails(const SemisubtractiveSpace& x, PointSet c) {
  return c != 0 && c != x.whole() && x.is_closed(c) && x.is_closed(x.whole() & ~c);
}

/// h(𝔞) ∩ h(𝔞') = h(𝔞 + 𝔞'), the identity the compactness argument rests on.
inline bool subbasis_sum_fails(const Analysis& an, const SemisubtractiveSpace& x, const Ideal& a, const Ideal& b) {
  const auto sum = ideal_sum(an.semiring(), a, b);
  if (!x.points().contains(sum)) return true;
  return (x.h(a) & x.h(b)) != x.h(sum);
}

namespace detail {

inline Witness point_witness(const SemisubtractiveSpace& x, PointSet d) { return Witness().family("D", x.members_of(d)); }

inline PointSet read_points(const SemisubtractiveSpace& x, const std::vector<Ideal>& members) {
  PointSet d = 0;
  for (const auto& m : members) d |= PointSet{1} << x.index(m);
  return d;
}

}  // namespace detail

inline Verdict check_T0(const SemisubtractiveSpace& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (t0_fails(x, i, j))
        return Verdict::fail(Witness().set("a", x.points()[i]).set("b", x.points()[j]), "two points share a closure");
  return Verdict::pass(std::to_string(x.size()) + " points");
}

inline Verdict check_scir(const SemisubtractiveSpace& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (scir_fails(x, i)) return Verdict::fail(Witness().set("a", x.points()[i]), "closure of {a} differs from h(a)");
  return Verdict::pass(std::to_string(x.size()) + " points");
}

inline Verdict check_sober(const SemisubtractiveSpace& x) {
  int irreducible = 0;
  for (auto d : x.closed_sets()) {
    if (!is_irreducible_closed(x, d)) continue;
    ++irreducible;
    if (sober_fails(x, d)) return Verdict::fail(detail::point_witness(x, d), "irreducible closed set without a unique generic point");
  }
  Verdict v = Verdict::pass(std::to_string(irreducible) + " irreducible closed sets");
  v.data["scir"] = check_scir(x).status == Status::pass;
  return v;
}

inline Verdict check_connected(const SemisubtractiveSpace& x) {
  for (auto c : x.closed_sets())
    if (connected_fails(x, c)) return Verdict::fail(detail::point_witness(x, c), "nontrivial clopen set");
  return Verdict::pass(std::to_string(x.closed_sets().size()) + " closed sets");
}

/// Quasi-compactness is automatic for a finite space; what is checked is the
/// argument's ingredients: subbasics are nonempty and meet along sums.
inline Verdict check_quasi_compact(const Analysis& an, const SemisubtractiveSpace& x) {
  const auto& m = x.points().members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x.h(m[i]) == 0) return Verdict::fail(Witness().set("a", m[i]), "empty subbasic closed set");
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (subbasis_sum_fails(an, x, m[i], m[j]))
        return Verdict::fail(Witness().set("a", m[i]).set("b", m[j]), "h(a) ∩ h(b) differs from h(a + b)");
  }
  // any family of closed sets is finite, so it is its own finite subfamily
  PointSet all = x.whole();
  for (auto c : x.closed_sets()) all &= c;
  Verdict v = Verdict::pass(std::to_string(x.closed_sets().size()) + " closed sets");
  v.data = json{{"standing_assumption", "vacuous: S lies in every h(a)"}, {"all_closed_meet_empty", all == 0}};
  return v;
}

// Induced maps.

/// φ*: Id_s(T) → Id_s(S), 𝔟 ↦ φ⁻¹(𝔟), as point indices.
struct InducedMap {
  SemiringHom hom;
  std::vector<std::size_t> image;  ///< target point -> source point
};

inline InducedMap induced_map(const SemiringHom& h) {
  if (auto e = check_hom(h.source, h.target, h.map)) throw *e;
  const auto src = analysis_for(h.source);
  const auto tgt = analysis_for(h.target);
  InducedMap out{h, {}};
  for (const auto& b : tgt->semisubtractive().members()) {
    auto pre = hom_preimage(h, b);
    auto i = src->semisubtractive().index_of(pre);
    if (!i) throw NotSemisubtractive();
    out.image.push_back(*i);
  }
  return out;
}

namespace detail {

struct InducedSpaces {
  std::shared_ptr<const Analysis> src, tgt;
  SemisubtractiveSpace sx, tx;
  InducedMap phi;

  explicit InducedSpaces(const SemiringHom& h)
      : src(analysis_for(h.source)), tgt(analysis_for(h.target)), sx(*src), tx(*tgt), phi(induced_map(h)) {}

  PointSet preimage(PointSet c) const {
    PointSet out = 0;
    for (std::size_t j = 0; j < phi.image.size(); ++j)
      if (c >> phi.image[j] & 1) out |= PointSet{1} << j;
    return out;
  }
  PointSet image(PointSet c) const {
    PointSet out = 0;
    for (std::size_t j = 0; j < phi.image.size(); ++j)
      if (c >> j & 1) out |= PointSet{1} << phi.image[j];
    return out;
  }
};

}  // namespace detail

/// Continuity: preimages of closed sets are closed.
inline bool conmap1_fails(const SemiringHom& h) {
  const detail::InducedSpaces d(h);
  for (auto c : d.sx.closed_sets())
    if (!d.tx.is_closed(d.preimage(c))) return true;
  return false;
}

/// For surjective φ: φ* is a homeomorphism of Id_s(T) onto h(Ker φ).
inline bool conmap2_fails(const SemiringHom& h) {
  if (!h.surjective()) return false;
  const detail::InducedSpaces d(h);
  const auto ker = hom_kernel(h);
  if (!d.sx.points().contains(ker)) return true;
  const PointSet hk = d.sx.h(ker);
  PointSet img = d.image(d.tx.whole());
  if (img != hk) return true;
  if (static_cast<std::size_t>(std::popcount(img)) != d.tx.size()) return true;  // not injective
  for (auto c : d.sx.closed_sets())
    if (!d.tx.is_closed(d.preimage(c))) return true;
  // closed onto the subspace: images of closed sets are traces of closed sets
  for (auto c : d.tx.closed_sets()) {
    const PointSet ic = d.image(c);
    const bool trace = std::any_of(d.sx.closed_sets().begin(), d.sx.closed_sets().end(),
                                   [&](PointSet e) { return (e & hk) == ic; });
    if (!trace) return true;
  }
  return false;
}

/// φ*(Id_s(T)) dense ⟺ Ker φ ⊆ ⋂ Id_s(S).
inline bool conmap3_fails(const SemiringHom& h) {
  const detail::InducedSpaces d(h);
  const bool dense = d.sx.closure(d.image(d.tx.whole())) == d.sx.whole();
  const bool criterion = hom_kernel(h).subset_of(ideal_intersection(h.source, d.src->semisubtractive().members()));
  return dense != criterion;
}

/// The homs each semiring is audited against: identity, maps onto the two
/// order-2 semirings, Q-quotient projections, the localization map, and
/// endomorphisms for small orders. Sorted and deduplicated.
inline std::vector<SemiringHom> hom_family(const Analysis& an, const AuditOptions& opt = {}) {
  const auto& s = an.semiring();
  std::vector<SemiringHom> out{identity_hom(s)};
  for (const auto& t : {bool2(), zmod(2)})
    for (auto& h : all_homs(s, t)) out.push_back(std::move(h));
  for (const auto& inst : q_ideal_instances(an))
    if (inst.quotient && inst.quotient->projection_is_hom)
      out.push_back(validate_hom(s, inst.quotient->semiring, inst.quotient->projection));
  out.push_back(localize(s).canonical);
  if (opt.endomorphisms && s.order() <= enumeration_soft_cap)
    for (auto& h : all_homs(s, s)) out.push_back(std::move(h));
  auto key = [](const SemiringHom& h) { return std::make_pair(canonical_encoding(h.target), h.map); };
  std::sort(out.begin(), out.end(), [&](const SemiringHom& a, const SemiringHom& b) {
    auto ka = std::make_pair(a.target.order(), key(a));
    auto kb = std::make_pair(b.target.order(), key(b));
    if (ka != kb) return ka < kb;
    return detail::flat(a.target, true) < detail::flat(b.target, true);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SemiringHom& a, const SemiringHom& b) { return a.target == b.target && a.map == b.map; }),
            out.end());
  return out;
}

template <typename Pred>
Verdict audit_over_homs(const std::vector<SemiringHom>& homs, Pred fails, const std::string& why) {
  int checked = 0;
  for (const auto& h : homs) {
    ++checked;
    if (fails(h)) return Verdict::fail(Witness().with_hom(h), why);
  }
  return Verdict::pass(std::to_string(checked) + " homs");
}

inline Verdict audit_conmap1(const std::vector<SemiringHom>& homs) {
  auto v = audit_over_homs(homs, conmap1_fails, "induced map is not continuous");
  // the subbasic preimage computed through cz(⟨φ(𝔞)⟩), which the argument writes as h(φ(𝔞))
  int image_not_ideal = 0;
  for (const auto& h : homs) {
    const detail::InducedSpaces d(h);
    for (const auto& a : d.src->semisubtractive().members()) {
      const auto img = hom_image(h, a.elements());
      if (!is_ideal(h.target, img)) ++image_not_ideal;
      const auto closed = d.tgt->closure(generated_ideal(h.target, img));
      if (d.preimage(d.sx.h(a)) != d.tx.h(closed)) {
        v.data["closure_mismatch"] = true;
      }
    }
  }
  v.data["images_not_ideals"] = image_not_ideal;
  return v;
}

inline Verdict audit_conmap2(const std::vector<SemiringHom>& homs) {
  std::vector<SemiringHom> surj;
  for (const auto& h : homs)
    if (h.surjective()) surj.push_back(h);
  if (surj.empty()) return Verdict::vacuous("no surjective hom");
  return audit_over_homs(surj, conmap2_fails, "induced map is not a homeomorphism onto h(Ker φ)");
}

inline Verdict audit_conmap3(const std::vector<SemiringHom>& homs) {
  auto v = audit_over_homs(homs, conmap3_fails, "density of the image disagrees with Ker φ ⊆ ⋂ Id_s");
  int differs = 0;
  for (const auto& h : homs) {
    const detail::InducedSpaces d(h);
    const auto ker = hom_kernel(h);
    if (!d.sx.points().contains(ker) || d.sx.closure(d.image(d.tx.whole())) != d.sx.h(ker)) ++differs;
  }
  v.data["image_closure_differs_from_h_ker"] = differs;
  return v;
}

}  // namespace semiring_lab
