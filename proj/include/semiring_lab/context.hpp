#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topology.hpp"

namespace semiring_lab {

/// Per-semiring state shared by the evaluators of one audit pass: the hom
/// family, the semisubtractive space and the Q-proposition verdicts are
/// built on first use.
class EvalContext {
 public:
  EvalContext(const Analysis& an, const AuditOptions& opt) : an_(an), opt_(opt) {}

  const Analysis& analysis() const noexcept { return an_; }
  const AuditOptions& options() const noexcept { return opt_; }

  const std::vector<SemiringHom>& homs() const {
    if (!homs_) homs_ = hom_family(an_, opt_);
    return *homs_;
  }
  const SemisubtractiveSpace& space() const {
    if (!space_) space_.emplace(an_);
    return *space_;
  }
  const Verdict& q_verdict(const std::string& id) const {
    if (!q_) q_ = audit_q_propositions(an_, opt_.all_q_witnesses);
    return q_->at(id);
  }

 private:
  const Analysis& an_;
  const AuditOptions& opt_;
  mutable std::optional<std::vector<SemiringHom>> homs_;
  mutable std::optional<SemisubtractiveSpace> space_;
  mutable std::optional<std::map<std::string, Verdict>> q_;
};

}  // namespace semiring_lab
