#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiring_lab {

/// Base for every error the library throws. Mathematical refutations are
/// never errors; they come back as verdicts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table failed one of the semiring axioms. `witness` holds the offending
/// element triple (unused trailing slots are -1).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<int, 3> witness)
      : Error("axiom violated: " + axiom + " at (" + std::to_string(witness[0]) + ", " +
              std::to_string(witness[1]) + ", " + std::to_string(witness[2]) + ")"),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<int, 3> witness_;
};

class ZeroEqualsOne : public Error {
 public:
  ZeroEqualsOne() : Error("semiring must have 0 != 1 (order >= 2)") {}
};

class MalformedTables : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class NotAHom : public Error {
 public:
  NotAHom(std::string what, std::array<int, 2> witness)
      : Error("not a homomorphism: " + what + " at (" + std::to_string(witness[0]) + ", " +
              std::to_string(witness[1]) + ")"),
        witness_(witness) {}
  const std::array<int, 2>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 2> witness_;
};

class OwnerMismatch : public Error {
 public:
  OwnerMismatch() : Error("element sets belong to different semirings") {}
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class EmptySubset : public Error {
 public:
  EmptySubset() : Error("subset must be nonempty") {}
};

class NotProper : public Error {
 public:
  NotProper() : Error("ideal must be proper") {}
};

class NotSurjective : public Error {
 public:
  NotSurjective() : Error("homomorphism is not surjective") {}
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotMember : public Error {
 public:
  NotMember() : Error("ideal is not a member of the family") {}
};

class NotSemisubtractive : public Error {
 public:
  NotSemisubtractive() : Error("ideal is not semisubtractive") {}
};

class NotAQPartition : public Error {
 public:
  using Error::Error;
};

/// coset_rep found zero or several representatives: the partition invariant
/// is broken, which is a bug upstream.
class NoRep : public Error {
 public:
  explicit NoRep(int x) : Error("no unique coset representative for element " + std::to_string(x)) {}
};

class QuotientInvalid : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

class CorpusEmpty : public Error {
 public:
  CorpusEmpty() : Error("audit corpus is empty") {}
};

}  // namespace semiring_lab
