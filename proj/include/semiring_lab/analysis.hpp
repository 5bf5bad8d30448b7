#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "order.hpp"

namespace semiring_lab {

/// Everything about one semiring that the audits keep asking for: V(S),
/// Id(S), Id_s(S), primes, closures and radicals. Built once, then read-only,
/// so one instance can be shared between worker threads.
class Analysis {
 public:
  explicit Analysis(FiniteSemiring s)
      : s_(std::move(s)),
        v_(invertible_set(s_)),
        ideals_(ideal_family(s_)),
        semisubtractive_(semisubtractive_family(s_, ideals_.members())),
        nilradical_(nilradical(s_)) {
    for (Element x = 0; x < static_cast<Element>(s_.order()); ++x) neg_.push_back(additive_inverse(s_, x));
    for (const auto& a : ideals_.members()) {
      closure_.push_back(golan_closure(s_, a));
      if (a.proper() && semiring_lab::is_prime(s_, a, ideals_.members())) primes_.push_back(a);
    }
    for (const auto& a : ideals_.members()) {
      std::vector<Ideal> above;
      for (const auto& p : primes_)
        if (a.subset_of(p)) above.push_back(p);
      radical_.push_back(ideal_intersection(s_, above));
    }
    maximal_ss_ = maximal_proper(semisubtractive_);
  }

  const FiniteSemiring& semiring() const noexcept { return s_; }
  std::size_t order() const noexcept { return s_.order(); }
  const ElementSet& invertible() const noexcept { return v_; }
  std::optional<Element> neg(Element x) const { return neg_[x]; }

  const IdealFamily& ideals() const noexcept { return ideals_; }
  const IdealFamily& semisubtractive() const noexcept { return semisubtractive_; }
  const std::vector<Ideal>& primes() const noexcept { return primes_; }
  const std::vector<Ideal>& maximal_semisubtractive() const noexcept { return maximal_ss_; }
  const ElementSet& nilradical_set() const noexcept { return nilradical_; }

  bool is_semisubtractive(const Ideal& a) const { return semisubtractive_.contains(a); }

  Ideal closure(const Ideal& a) const {
    if (auto i = ideals_.index_of(a)) return closure_[*i];
    return golan_closure(s_, a);
  }
  Ideal radical_of(const Ideal& a) const {
    if (auto i = ideals_.index_of(a)) return radical_[*i];
    return radical(s_, a, ideals_.members());
  }
  bool is_prime(const Ideal& a) const { return std::binary_search(primes_.begin(), primes_.end(), a); }

  Ideal zero() const { return Ideal::zero(s_); }
  Ideal whole() const { return Ideal::whole(s_); }

 private:
  FiniteSemiring s_;
  ElementSet v_;
  IdealFamily ideals_;
  IdealFamily semisubtractive_;
  ElementSet nilradical_;
  std::vector<std::optional<Element>> neg_;
  std::vector<Ideal> closure_;
  std::vector<Ideal> primes_;
  std::vector<Ideal> radical_;
  std::vector<Ideal> maximal_ss_;
};

/// Process-wide memo keyed by fingerprint. Concurrent first requests may
/// both build; the first insert wins and everyone gets the same instance.
inline std::shared_ptr<const Analysis> analysis_for(const FiniteSemiring& s) {
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, std::shared_ptr<const Analysis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(s.fingerprint()); it != cache.end() && it->second->semiring() == s) return it->second;
  }
  auto built = std::make_shared<const Analysis>(s);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(s.fingerprint(), built);
  if (!inserted && !(it->second->semiring() == s)) return built;  // fingerprint collision
  return it->second;
}

}  // namespace semiring_lab
