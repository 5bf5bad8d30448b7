#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "claims/basic.hpp"
#include "congruence.hpp"
#include "context.hpp"
#include "irreducible.hpp"
#include "local.hpp"
#include "quotients.hpp"
#include "topology.hpp"

namespace semiring_lab {

/// PROVEN claims must pass; AUDIT claims only get a verdict.
enum class Tag { proven, audit };

inline const char* to_string(Tag t) { return t == Tag::proven ? "PROVEN" : "AUDIT"; }

struct Proposition {
  std::string id;
  std::string title;
  std::string module;
  Tag tag = Tag::audit;
  std::function<Verdict(const EvalContext&)> evaluate;
  /// Does this witness exhibit a failure on this semiring?
  std::function<bool(const Analysis&, const Witness&)> refutes;
};

class PropositionRegistry {
 public:
  explicit PropositionRegistry(std::vector<Proposition> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& p : entries_)
      if (!seen.insert(p.id).second) throw BadParams("duplicate proposition id " + p.id);
  }

  const std::vector<Proposition>& entries() const noexcept { return entries_; }

  const Proposition* find(const std::string& id) const {
    for (const auto& p : entries_)
      if (p.id == id) return &p;
    return nullptr;
  }

  /// Entries whose id equals a filter or starts with "<filter>."; all when
  /// the filter list is empty. Unknown filters throw BadParams.
  std::vector<const Proposition*> select(const std::vector<std::string>& filters) const {
    std::vector<const Proposition*> out;
    for (const auto& f : filters) {
      const bool known = std::any_of(entries_.begin(), entries_.end(), [&](const Proposition& p) {
        return p.id == f || p.id.rfind(f + ".", 0) == 0 || f == "*";
      });
      if (!known) throw BadParams("unknown proposition '" + f + "'");
    }
    for (const auto& p : entries_) {
      const bool keep = filters.empty() || std::any_of(filters.begin(), filters.end(), [&](const std::string& f) {
                          return f == "*" || p.id == f || p.id.rfind(f + ".", 0) == 0;
                        });
      if (keep) out.push_back(&p);
    }
    return out;
  }

 private:
  std::vector<Proposition> entries_;
};

namespace detail {

using R = WitnessReader;

inline Proposition entry(std::string id, std::string title, std::string module, Tag tag,
                         std::function<Verdict(const EvalContext&)> eval,
                         std::function<bool(const Analysis&, const R&)> refutes) {
  return {std::move(id), std::move(title), std::move(module), tag, std::move(eval),
          [refutes = std::move(refutes)](const Analysis& an, const Witness& w) { return refutes(an, R(an, w)); }};
}

inline std::function<Verdict(const EvalContext&)> q_eval(std::string id) {
  return [id = std::move(id)](const EvalContext& c) { return c.q_verdict(id); };
}

inline std::size_t point(const SemisubtractiveSpace& x, const Ideal& a) {
  auto i = x.points().index_of(a);
  if (!i) throw MalformedCertificate("witness ideal is not semisubtractive");
  return *i;
}

inline PointSet point_family(const SemisubtractiveSpace& x, const std::vector<Ideal>& members) {
  PointSet d = 0;
  for (const auto& m : members) d |= PointSet{1} << point(x, m);
  return d;
}

}  // namespace detail

/// Every claim the auditor knows, in report order.
inline const PropositionRegistry& default_registry() {
  using namespace claims;
  using semiring_lab::detail::entry;
  using R = WitnessReader;
  constexpr Tag P = Tag::proven, A = Tag::audit;

  static const PropositionRegistry registry([] {
    std::vector<Proposition> e;

    e.push_back(entry("epvs.1", "V(S) is nonempty", "kernel", P, eval_epvs1,
                      [](const Analysis& an, const R&) { return epvs1_fails(an); }));
    e.push_back(entry("epvs.2", "V(S) is an additive submonoid", "kernel", P, eval_epvs2,
                      [](const Analysis& an, const R& r) { return epvs2_fails(an, r.element("x"), r.element("y")); }));
    e.push_back(entry("epvs.3", "s + s' in V(S) forces s, s' in V(S)", "kernel", P, eval_epvs3,
                      [](const Analysis& an, const R& r) { return epvs3_fails(an, r.element("x"), r.element("y")); }));
    e.push_back(entry("epvs.4", "S is a ring iff V(S) = S", "kernel", P, eval_epvs4,
                      [](const Analysis& an, const R&) { return epvs4_fails(an); }));

    e.push_back(entry("bpss.1", "subtractive and strongly subtractive ideals are semisubtractive", "ideals", P, eval_bpss1,
                      [](const Analysis& an, const R& r) { return bpss1_fails(an, r.ideal("a")); }));
    e.push_back(entry("bpss.2", "prime ideals are semisubtractive", "ideals", P, eval_bpss2,
                      [](const Analysis& an, const R& r) { return bpss2_fails(an, r.ideal("a")); }));
    e.push_back(entry("bpss.3", "Id_s is closed under intersections", "ideals", P, eval_bpss3,
                      [](const Analysis& an, const R& r) { return bpss3_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("bpss.4", "Id_s is closed under sums", "ideals", P, eval_bpss4,
                      [](const Analysis& an, const R& r) { return bpss4_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("bpss.5", "Id_s is closed under products", "ideals", P, eval_bpss5,
                      [](const Analysis& an, const R& r) { return bpss5_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("bpss.6", "(a : b) is semisubtractive for semisubtractive a", "ideals", P, eval_bpss6,
                      [](const Analysis& an, const R& r) { return bpss6_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("bpss.7", "colon and intersection combinations stay semisubtractive", "ideals", P, eval_bpss7,
                      [](const Analysis& an, const R& r) { return bpss7_fails(an, r.ideal("a"), r.ideal("b"), r.ideal("c")); }));
    e.push_back(entry("bpss.8", "annihilators are semisubtractive", "ideals", P, eval_bpss8,
                      [](const Analysis& an, const R& r) { return bpss8_fails(an, r.set("X")); }));
    e.push_back(entry("bpss.9", "radicals are semisubtractive", "ideals", P, eval_bpss9,
                      [](const Analysis& an, const R& r) { return bpss9_fails(an, r.ideal("a")); }));
    e.push_back(entry("bpss.10", "a ∩ N(S) is semisubtractive; N(S) is the radical of 0", "ideals", P, eval_bpss10,
                      [](const Analysis& an, const R& r) {
                        if (nilradical_is_radical_of_zero_fails(an)) return true;
                        return bpss10_fails(an, r.ideal("a"));
                      }));

    e.push_back(entry("cep.1", "contractions of semisubtractive ideals are semisubtractive", "ideals", P, eval_cep1,
                      [](const Analysis&, const R& r) { return cep1_fails(r.hom(), r.target_ideal("b")); }));
    e.push_back(entry("cep.2", "kernels are semisubtractive", "ideals", P, eval_cep2,
                      [](const Analysis&, const R& r) { return cep2_fails(r.hom()); }));
    e.push_back(entry("cep.3", "contraction versus intersection, product and colon", "ideals", P, eval_cep3,
                      [](const Analysis&, const R& r) { return cep3_fails(r.hom(), r.target_ideal("b1"), r.target_ideal("b2")); }));
    e.push_back(entry("cep.4", "surjective images of semisubtractive ideals are semisubtractive", "ideals", P, eval_cep4,
                      [](const Analysis&, const R& r) { return cep4_fails(r.hom(), r.ideal("a")); }));

    e.push_back(entry("modular", "Id_s is a modular lattice", "order", A, eval_modular,
                      [](const Analysis& an, const R& r) { return modular_fails(an, r.ideal("a"), r.ideal("b"), r.ideal("c")); }));
    e.push_back(entry("mxc", "proper semisubtractive ideals lie below a maximal one", "order", P, eval_mxc,
                      [](const Analysis& an, const R& r) { return mxc_fails(an, r.ideal("a")); }));
    e.push_back(entry("lclk.1", "cz(a) is the least semisubtractive ideal above a", "order", P, eval_lclk1,
                      [](const Analysis& an, const R& r) { return lclk1_fails(an, r.ideal("a")); }));
    e.push_back(entry("lclk.2", "cz(0) = 0", "order", P, eval_lclk2, [](const Analysis& an, const R&) { return lclk2_fails(an); }));
    e.push_back(entry("lclk.3", "cz(S) = S", "order", P, eval_lclk3, [](const Analysis& an, const R&) { return lclk3_fails(an); }));
    e.push_back(entry("lclk.4", "cz is idempotent", "order", P, eval_lclk4,
                      [](const Analysis& an, const R& r) { return lclk4_fails(an, r.ideal("a")); }));
    e.push_back(entry("lclk.5", "cz is monotone", "order", P, eval_lclk5,
                      [](const Analysis& an, const R& r) { return lclk5_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("lclk.6", "cz(<a ∪ b>) contains cz(a) ∪ cz(b)", "order", P, eval_lclk6,
                      [](const Analysis& an, const R& r) { return lclk6_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("lclk.7", "cz commutes with intersections", "order", A, eval_lclk7,
                      [](const Analysis& an, const R& r) { return lclk7_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("lclk.8", "a is semisubtractive iff a = cz(a)", "order", P, eval_lclk8,
                      [](const Analysis& an, const R& r) { return lclk8_fails(an, r.ideal("a")); }));
    e.push_back(entry("lclk.9", "cz(a + b) = cz(cz(a) + cz(b))", "order", P, eval_lclk9,
                      [](const Analysis& an, const R& r) { return lclk9_fails(an, r.ideal("a"), r.ideal("b")); }));
    e.push_back(entry("lclk.10", "cz(a) lies inside the radical of a", "order", P, eval_lclk10,
                      [](const Analysis& an, const R& r) { return lclk10_fails(an, r.ideal("a")); }));

    auto q = [](const Analysis& an, const R& r) { return semiring_lab::detail::read_q_instance(an, r); };
    e.push_back(entry("qlemma", "unique coset above x + i", "quotients", A, semiring_lab::detail::q_eval("qlemma"),
                      [q](const Analysis& an, const R& r) { return qlemma_fails(an.semiring(), q(an, r), r.element("x")); }));
    e.push_back(entry("qsemiring", "S/i is a semiring with a hom projection", "quotients", A, semiring_lab::detail::q_eval("qsemiring"),
                      [q](const Analysis& an, const R& r) { return qsemiring_fails(q(an, r)); }));
    e.push_back(entry("qsub", "Q-ideals are subtractive", "quotients", A, semiring_lab::detail::q_eval("qsub"),
                      [q](const Analysis& an, const R& r) { return qsub_fails(an.semiring(), q(an, r)); }));
    e.push_back(entry("qai", "a/i is a semisubtractive ideal of S/i", "quotients", A, semiring_lab::detail::q_eval("qai"),
                      [q](const Analysis& an, const R& r) { return qai_fails(an, q(an, r), r.ideal("a")); }));
    e.push_back(entry("iqs", "semisubtractive ideals of S/i are of the form j/i", "quotients", A, semiring_lab::detail::q_eval("iqs"),
                      [q](const Analysis& an, const R& r) { return iqs_fails(an, q(an, r), r.set("c")); }));
    e.push_back(entry("iqss", "a semifield quotient comes from a maximal semisubtractive ideal", "quotients", A,
                      semiring_lab::detail::q_eval("iqss"), [q](const Analysis& an, const R& r) { return iqss_fails(an, q(an, r)); }));
    e.push_back(entry("qiji", "(i + j)/i is a semisubtractive ideal of S/i", "quotients", A, semiring_lab::detail::q_eval("qiji"),
                      [q](const Analysis& an, const R& r) { return qiji_fails(an, q(an, r), r.ideal("j")); }));
    e.push_back(entry("pqss", "p is prime iff p/i is prime", "quotients", A, semiring_lab::detail::q_eval("pqss"),
                      [q](const Analysis& an, const R& r) { return pqss_fails(an, q(an, r), r.ideal("p")); }));

    e.push_back(entry("sus", "a semisubtractive ideal holding a semi-unit is S", "local", A,
                      [](const EvalContext& c) { return audit_sus(c.analysis()); },
                      [](const Analysis& an, const R& r) { return sus_fails(an, r.element("x"), r.ideal("a")); }));
    e.push_back(entry("sums", "semi-units are the elements outside every maximal semisubtractive ideal", "local", A,
                      [](const EvalContext& c) { return audit_sums(c.analysis()); },
                      [](const Analysis& an, const R& r) { return sums_fails(an, r.element("x")); }));
    e.push_back(entry("nsu", "s-local iff the non-semi-units form a semisubtractive ideal", "local", A,
                      [](const EvalContext& c) { return audit_nsu(c.analysis()); },
                      [](const Analysis& an, const R&) { return nsu_fails(an); }));
    e.push_back(entry("psl", "extensions to S_X of semisubtractive ideals are semisubtractive", "local", P,
                      [](const EvalContext& c) { return audit_psl(c.analysis()); },
                      [](const Analysis& an, const R& r) { return psl_fails(an, r.ideal("a")); }));
    e.push_back(entry("slocal.loc", "localizing an s-local semiring keeps it s-local", "local", A,
                      [](const EvalContext& c) { return audit_slocal_loc(c.analysis()); },
                      [](const Analysis& an, const R&) { return slocal_loc_fails(an); }));

    e.push_back(entry("eqsi", "s-(strongly) irreducible iff (strongly) irreducible and semisubtractive", "irreducible", A,
                      [](const EvalContext& c) { return audit_eqsi(c.analysis()); },
                      [](const Analysis& an, const R& r) {
                        const auto c = r.ideal("c");
                        return eqsi_fails(an, c, false) || eqsi_fails(an, c, true);
                      }));
    e.push_back(entry("abi", "elementwise criterion for s-strong irreducibility", "irreducible", A,
                      [](const EvalContext& c) { return audit_abi(c.analysis()); },
                      [](const Analysis& an, const R& r) { return abi_fails(an, r.ideal("c")); }));
    e.push_back(entry("lir", "an s-irreducible ideal above c avoids x", "irreducible", A,
                      [](const EvalContext& c) { return audit_lir(c.analysis()); },
                      [](const Analysis& an, const R& r) { return lir_fails(an, r.element("x"), r.ideal("c")); }));
    e.push_back(entry("decomp", "c is the intersection of the s-irreducible ideals above it", "irreducible", A,
                      [](const EvalContext& c) { return audit_decomp(c.analysis()); },
                      [](const Analysis& an, const R& r) { return decomp_fails(an, r.ideal("c")); }));
    e.push_back(entry("decomp.finite", "c is a finite intersection of s-irreducible ideals", "irreducible", A,
                      [](const EvalContext& c) { return audit_decomp_finite(c.analysis()); },
                      [](const Analysis& an, const R& r) { return decomp_finite_fails(an, r.ideal("c")); }));
    e.push_back(entry("minssi", "a minimal s-strongly irreducible ideal lies above a", "irreducible", A,
                      [](const EvalContext& c) { return audit_minssi(c.analysis()); },
                      [](const Analysis& an, const R& r) { return minssi_fails(an, r.ideal("c")); }));
    e.push_back(entry("arith", "arithmetic iff s-irreducible and s-strongly irreducible coincide", "irreducible", A,
                      [](const EvalContext& c) { return audit_arith(c.analysis()); },
                      [](const Analysis& an, const R& r) {
                        const auto& w = r;
                        try {
                          return arith_converse_fails(an, w.ideal("a"), w.ideal("b"), w.ideal("c"));
                        } catch (const MalformedCertificate&) {
                          return arith_forward_fails(an, w.ideal("c"));
                        }
                      }));
    e.push_back(entry("arith.cor", "in an arithmetic semiring c is cut out by s-strongly irreducible ideals", "irreducible", A,
                      [](const EvalContext& c) { return audit_arith_cor(c.analysis()); },
                      [](const Analysis& an, const R& r) { return arith_cor_fails(an, r.ideal("c")); }));

    e.push_back(entry("t0", "the semisubtractive space is T0", "topology", P,
                      [](const EvalContext& c) { return check_T0(c.space()); },
                      [](const Analysis& an, const R& r) {
                        const SemisubtractiveSpace x(an);
                        return t0_fails(x, semiring_lab::detail::point(x, r.ideal("a")), semiring_lab::detail::point(x, r.ideal("b")));
                      }));
    e.push_back(entry("scir", "the closure of a point a is h(a)", "topology", P,
                      [](const EvalContext& c) { return check_scir(c.space()); },
                      [](const Analysis& an, const R& r) {
                        const SemisubtractiveSpace x(an);
                        return scir_fails(x, semiring_lab::detail::point(x, r.ideal("a")));
                      }));
    e.push_back(entry("sober", "the semisubtractive space is sober", "topology", A,
                      [](const EvalContext& c) { return check_sober(c.space()); },
                      [](const Analysis& an, const R& r) {
                        const SemisubtractiveSpace x(an);
                        return sober_fails(x, semiring_lab::detail::point_family(x, r.ideal_family("D")));
                      }));
    e.push_back(entry("connected", "the semisubtractive space is connected", "topology", A,
                      [](const EvalContext& c) { return check_connected(c.space()); },
                      [](const Analysis& an, const R& r) {
                        const SemisubtractiveSpace x(an);
                        return connected_fails(x, semiring_lab::detail::point_family(x, r.ideal_family("D")));
                      }));
    e.push_back(entry("comp", "the semisubtractive space is quasi-compact", "topology", A,
                      [](const EvalContext& c) { return check_quasi_compact(c.analysis(), c.space()); },
                      [](const Analysis& an, const R& r) {
                        const SemisubtractiveSpace x(an);
                        const auto a = r.ideal("a");
                        try {
                          return subbasis_sum_fails(an, x, a, r.ideal("b"));
                        } catch (const MalformedCertificate&) {
                          return x.h(a) == 0;
                        }
                      }));
    e.push_back(entry("conmap.1", "induced maps are continuous", "topology", A,
                      [](const EvalContext& c) { return audit_conmap1(c.homs()); },
                      [](const Analysis&, const R& r) { return conmap1_fails(r.hom()); }));
    e.push_back(entry("conmap.2", "a surjection induces a homeomorphism onto h(Ker φ)", "topology", A,
                      [](const EvalContext& c) { return audit_conmap2(c.homs()); },
                      [](const Analysis&, const R& r) { return conmap2_fails(r.hom()); }));
    e.push_back(entry("conmap.3", "the image is dense iff Ker φ lies in every semisubtractive ideal", "topology", A,
                      [](const EvalContext& c) { return audit_conmap3(c.homs()); },
                      [](const Analysis&, const R& r) { return conmap3_fails(r.hom()); }));

    e.push_back(entry("cong", "~a is a congruence", "congruence", P,
                      [](const EvalContext& c) { return audit_cong(c.analysis()); },
                      [](const Analysis& an, const R& r) { return cong_fails(an, r.ideal("a")); }));
    e.push_back(entry("bijection", "semisubtractive ideals correspond to s-congruences", "congruence", A,
                      [](const EvalContext& c) { return audit_bijection(c.analysis()); },
                      [](const Analysis& an, const R& r) { return bijection_fails(an, r.ideal("a")); }));
    e.push_back(entry("bijection.restricted", "the correspondence on ideals inside V(S); Ψ(Φ(a)) = a ∩ V(S)", "congruence", A,
                      [](const EvalContext& c) { return audit_bijection_restricted(c.analysis()); },
                      [](const Analysis& an, const R& r) { return bijection_restricted_fails(an, r.ideal("a")); }));
    return e;
  }());
  return registry;
}

}  // namespace semiring_lab
