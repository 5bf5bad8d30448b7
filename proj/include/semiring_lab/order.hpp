#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ideals.hpp"

namespace semiring_lab {

/// A deterministic list of distinct ideals of one semiring with its
/// containment matrix (`contains(i, j)` iff member i ⊆ member j).
class IdealFamily {
 public:
  IdealFamily(const FiniteSemiring& s, std::vector<Ideal> members) : owner_(s.fingerprint()), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw BadParams("family members must be distinct");
    for (const auto& m : members_) require_owner(s, m);
    const auto k = members_.size();
    leq_.assign(k * k, false);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) leq_[i * k + j] = members_[i].subset_of(members_[j]);
  }

  std::uint64_t owner() const noexcept { return owner_; }
  const std::vector<Ideal>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Ideal& operator[](std::size_t i) const { return members_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * members_.size() + j]; }

  std::optional<std::size_t> index_of(const Ideal& a) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it == members_.end() || !(*it == a)) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
  }
  bool contains(const Ideal& a) const { return index_of(a).has_value(); }

 private:
  std::uint64_t owner_;
  std::vector<Ideal> members_;
  std::vector<bool> leq_;
};

inline IdealFamily ideal_family(const FiniteSemiring& s) { return IdealFamily(s, enumerate_ideals(s)); }

/// Id_s(S): the semisubtractive ideals, in enumeration order.
inline IdealFamily semisubtractive_family(const FiniteSemiring& s, const std::vector<Ideal>& ideals) {
  std::vector<Ideal> ss;
  for (const auto& a : ideals)
    if (is_semisubtractive(s, a)) ss.push_back(a);
  return IdealFamily(s, std::move(ss));
}

inline IdealFamily semisubtractive_family(const FiniteSemiring& s) {
  return semisubtractive_family(s, enumerate_ideals(s));
}

/// Golan closure by iteration: adjoin -x for every x ∈ a ∩ V(S) and close
/// back up to an ideal until nothing changes.
inline Ideal golan_closure(const FiniteSemiring& s, const Ideal& a) {
  require_owner(s, a);
  Ideal cur = a;
  // strict growth in a finite lattice bounds the number of rounds by |S|
  for (std::size_t round = 0; round <= s.order(); ++round) {
    ElementSet grown = cur.elements();
    cur.elements().for_each([&](Element x) {
      if (auto neg = additive_inverse(s, x)) grown.insert(*neg);
    });
    if (grown == cur.elements()) return cur;
    cur = generated_ideal(s, grown);
  }
  throw Error("golan_closure did not stabilise");
}

/// Golan closure as the intersection of all semisubtractive ideals above a.
inline Ideal golan_closure_by_intersection(const FiniteSemiring& s, const Ideal& a, const IdealFamily& semisubtractive) {
  require_owner(s, a);
  ElementSet r = s.full_set();
  for (const auto& b : semisubtractive.members())
    if (a.subset_of(b)) r = r & b.elements();
  return Ideal::unchecked(r);
}

/// Outcome of a lattice law check; a failure carries the first violating
/// triple in lexicographic member order.
struct LatticeVerdict {
  bool holds = true;
  std::optional<std::array<Ideal, 3>> counterexample;
};

struct LatticeAudit {
  LatticeVerdict modular;
  LatticeVerdict distributive;
};

/// Does the modular law (a + c) ∩ b ⊆ a + (c ∩ b) fail for a ⊆ b?
inline bool modular_law_fails(const FiniteSemiring& s, const Ideal& a, const Ideal& b, const Ideal& c) {
  if (!a.subset_of(b)) return false;
  auto lhs = ideal_intersection(s, ideal_sum(s, a, c), b);
  auto rhs = ideal_sum(s, a, ideal_intersection(s, c, b));
  return !lhs.subset_of(rhs);
}

/// Does a ∩ (b + c) = (a ∩ b) + (a ∩ c) fail?
inline bool distributive_law_fails(const FiniteSemiring& s, const Ideal& a, const Ideal& b, const Ideal& c) {
  auto lhs = ideal_intersection(s, a, ideal_sum(s, b, c));
  auto rhs = ideal_sum(s, ideal_intersection(s, a, b), ideal_intersection(s, a, c));
  return !(lhs == rhs);
}

/// Throws NotClosed unless the family is closed under + and ∩.
inline void require_lattice_closed(const FiniteSemiring& s, const IdealFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family.contains(ideal_sum(s, family[i], family[j])))
        throw NotClosed("family is not closed under ideal sums");
      if (!family.contains(ideal_intersection(s, family[i], family[j])))
        throw NotClosed("family is not closed under intersections");
    }
}

inline LatticeVerdict modularity_audit(const FiniteSemiring& s, const IdealFamily& family) {
  require_lattice_closed(s, family);
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!family.leq(i, j)) continue;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (modular_law_fails(s, m[i], m[j], m[k])) return {false, std::array<Ideal, 3>{m[i], m[j], m[k]}};
    }
  return {};
}

inline LatticeVerdict distributivity_audit(const FiniteSemiring& s, const IdealFamily& family) {
  require_lattice_closed(s, family);
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (std::size_t k = j + 1; k < m.size(); ++k)
        if (distributive_law_fails(s, m[i], m[j], m[k])) return {false, std::array<Ideal, 3>{m[i], m[j], m[k]}};
  return {};
}

inline LatticeAudit audit_lattice(const FiniteSemiring& s, const IdealFamily& family) {
  return {modularity_audit(s, family), distributivity_audit(s, family)};
}

/// Arithmetic semiring: the lattice of all ideals is distributive.
inline LatticeVerdict is_arithmetic(const FiniteSemiring& s) { return distributivity_audit(s, ideal_family(s)); }

/// Maximal members among the proper ideals of a family.
inline std::vector<Ideal> maximal_proper(const IdealFamily& family) {
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].proper()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < family.size() && maximal; ++j)
      maximal = !(family[j].proper() && i != j && family.leq(i, j));
    if (maximal) out.push_back(family[i]);
  }
  return out;
}

inline std::vector<Ideal> maximal_semisubtractive(const FiniteSemiring& s) {
  return maximal_proper(semisubtractive_family(s));
}

inline std::string ideal_label(const Ideal& a) {
  std::string out = "{";
  bool first = true;
  a.elements().for_each([&](Element x) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

/// Covering relation of the family as a bottom-to-top DOT digraph.
inline std::string hasse_dot(const IdealFamily& family, const std::string& name = "hasse") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < family.size(); ++i) os << "  n" << i << " [label=\"" << ideal_label(family[i]) << "\"];\n";
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j || !family.leq(i, j)) continue;
      bool covers = true;
      for (std::size_t k = 0; k < family.size() && covers; ++k)
        covers = (k == i || k == j || !(family.leq(i, k) && family.leq(k, j)));
      if (covers) os << "  n" << i << " -> n" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace semiring_lab
