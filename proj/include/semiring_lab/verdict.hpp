#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "json_io.hpp"

namespace semiring_lab {

enum class Status { pass, fail, vacuous };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::vacuous:
      return "VACUOUS";
  }
  return "?";
}

inline Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::pass;
  if (s == "FAIL") return Status::fail;
  if (s == "VACUOUS") return Status::vacuous;
  throw MalformedCertificate("unknown verdict '" + s + "'");
}

/// The concrete objects that exhibit a failure. Sets and elements refer to
/// the audited semiring; `target_sets` refer to the hom target when a hom is
/// part of the witness. Families are lists of subsets of the audited semiring.
struct Witness {
  std::map<std::string, std::vector<Element>> sets;
  std::map<std::string, Element> elements;
  std::map<std::string, std::vector<std::vector<Element>>> families;
  std::optional<SemiringHom> hom;
  std::map<std::string, std::vector<Element>> target_sets;

  Witness& set(const std::string& k, const ElementSet& x) {
    sets[k] = x.elements();
    return *this;
  }
  Witness& set(const std::string& k, const Ideal& x) { return set(k, x.elements()); }
  Witness& element(const std::string& k, Element x) {
    elements[k] = x;
    return *this;
  }
  Witness& family(const std::string& k, const std::vector<Ideal>& xs) {
    auto& f = families[k];
    f.clear();
    for (const auto& x : xs) f.push_back(x.elements().elements());
    return *this;
  }
  Witness& with_hom(const SemiringHom& h) {
    hom = h;
    return *this;
  }
  Witness& target_set(const std::string& k, const ElementSet& x) {
    target_sets[k] = x.elements();
    return *this;
  }
  Witness& target_set(const std::string& k, const Ideal& x) { return target_set(k, x.elements()); }
};

/// Knobs shared by every evaluator.
struct AuditOptions {
  bool all_q_witnesses = false;  ///< audit every Q witness, not just the least
  bool endomorphisms = true;     ///< include End(S) in hom families (order <= 6)
};

/// One proposition evaluated on one semiring.
struct Verdict {
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string detail;
  json data = json::object();

  static Verdict pass(std::string detail = {}) { return {Status::pass, std::nullopt, std::move(detail), json::object()}; }
  static Verdict vacuous(std::string detail) { return {Status::vacuous, std::nullopt, std::move(detail), json::object()}; }
  static Verdict fail(Witness w, std::string detail) { return {Status::fail, std::move(w), std::move(detail), json::object()}; }
};

inline json to_json(const Witness& w) {
  json j = json::object();
  if (!w.sets.empty()) j["sets"] = w.sets;
  if (!w.elements.empty()) j["elements"] = w.elements;
  if (!w.families.empty()) j["families"] = w.families;
  if (w.hom) j["hom"] = json{{"target", to_json(w.hom->target)}, {"map", w.hom->map}};
  if (!w.target_sets.empty()) j["target_sets"] = w.target_sets;
  return j;
}

/// Parses a witness against the semiring it refers to.
inline Witness witness_from_json(const FiniteSemiring& s, const json& j) {
  if (!j.is_object()) throw MalformedCertificate("witness must be an object");
  Witness w;
  try {
    if (j.contains("sets")) w.sets = j.at("sets").get<std::map<std::string, std::vector<Element>>>();
    if (j.contains("elements")) w.elements = j.at("elements").get<std::map<std::string, Element>>();
    if (j.contains("families"))
      w.families = j.at("families").get<std::map<std::string, std::vector<std::vector<Element>>>>();
    if (j.contains("target_sets")) w.target_sets = j.at("target_sets").get<std::map<std::string, std::vector<Element>>>();
    if (j.contains("hom")) {
      auto target = semiring_from_json(j.at("hom").at("target"));
      w.hom = validate_hom(s, target, j.at("hom").at("map").get<std::vector<Element>>());
    }
  } catch (const json::exception& e) {
    throw MalformedCertificate(std::string("witness: ") + e.what());
  } catch (const MalformedCertificate&) {
    throw;
  } catch (const Error& e) {
    throw MalformedCertificate(std::string("witness: ") + e.what());
  }
  return w;
}

/// Typed access to witness fields during replay; anything missing or out of
/// range is a malformed certificate.
class WitnessReader {
 public:
  WitnessReader(const Analysis& a, const Witness& w) : a_(a), w_(w) {}

  ElementSet set(const std::string& k) const { return to_set(a_.semiring(), lookup(w_.sets, k), k); }

  Ideal ideal(const std::string& k) const {
    auto x = set(k);
    if (!is_ideal(a_.semiring(), x)) throw MalformedCertificate("witness '" + k + "' is not an ideal");
    return Ideal::unchecked(x);
  }

  Ideal semisubtractive_ideal(const std::string& k) const {
    auto i = ideal(k);
    if (!a_.is_semisubtractive(i)) throw MalformedCertificate("witness '" + k + "' is not semisubtractive");
    return i;
  }

  Element element(const std::string& k) const {
    auto x = lookup(w_.elements, k);
    if (x < 0 || static_cast<std::size_t>(x) >= a_.order()) throw MalformedCertificate("witness '" + k + "' out of range");
    return x;
  }

  std::vector<Ideal> ideal_family(const std::string& k) const {
    std::vector<Ideal> out;
    for (const auto& xs : lookup(w_.families, k)) {
      auto x = to_set(a_.semiring(), xs, k);
      if (!is_ideal(a_.semiring(), x)) throw MalformedCertificate("family '" + k + "' holds a non-ideal");
      out.push_back(Ideal::unchecked(x));
    }
    return out;
  }

  const SemiringHom& hom() const {
    if (!w_.hom) throw MalformedCertificate("witness has no hom");
    return *w_.hom;
  }

  Ideal target_ideal(const std::string& k) const {
    const auto& t = hom().target;
    auto x = to_set(t, lookup(w_.target_sets, k), k);
    if (!is_ideal(t, x)) throw MalformedCertificate("target witness '" + k + "' is not an ideal");
    return Ideal::unchecked(x);
  }

 private:
  template <typename M>
  static const typename M::mapped_type& lookup(const M& m, const std::string& k) {
    auto it = m.find(k);
    if (it == m.end()) throw MalformedCertificate("witness lacks '" + k + "'");
    return it->second;
  }

  static ElementSet to_set(const FiniteSemiring& s, const std::vector<Element>& xs, const std::string& k) {
    ElementSet out = s.empty_set();
    for (auto x : xs) {
      if (x < 0 || static_cast<std::size_t>(x) >= s.order()) throw MalformedCertificate("witness '" + k + "' out of range");
      out.insert(x);
    }
    return out;
  }

  const Analysis& a_;
  const Witness& w_;
};

}  // namespace semiring_lab
