#pragma once

#include <stdexcept>
#include <string>

namespace ambig {

// Root of every exception raised by the library. Axiom failures found by a
// checker are reported through AxiomReport instead; these are raised only when
// an operation cannot produce a valid result.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define AMBIG_DEFINE_ERROR(Name, Base)   \
  class Name : public Base {             \
   public:                               \
    using Base::Base;                    \
  }

AMBIG_DEFINE_ERROR(InvalidUniverse, Error);
AMBIG_DEFINE_ERROR(UnknownElement, Error);
AMBIG_DEFINE_ERROR(DuplicateElement, Error);
AMBIG_DEFINE_ERROR(MaskOutOfRange, Error);
AMBIG_DEFINE_ERROR(FrameMismatch, Error);
AMBIG_DEFINE_ERROR(SpaceMismatch, Error);

// Raised when an input violates the axioms its type requires.
AMBIG_DEFINE_ERROR(ValidationError, Error);
AMBIG_DEFINE_ERROR(UpperAxiomViolation, ValidationError);
AMBIG_DEFINE_ERROR(DualityViolation, ValidationError);
AMBIG_DEFINE_ERROR(AssignmentAxiomViolation, ValidationError);
AMBIG_DEFINE_ERROR(AmbiguityAxiomViolation, ValidationError);
AMBIG_DEFINE_ERROR(IncidenceAxiomViolation, ValidationError);
AMBIG_DEFINE_ERROR(IncompatiblePair, ValidationError);
AMBIG_DEFINE_ERROR(SelectorDomainError, ValidationError);
AMBIG_DEFINE_ERROR(EmptyMass, ValidationError);

// A post-condition guaranteed by construction did not hold: an engine bug.
AMBIG_DEFINE_ERROR(InternalInvariantFailure, Error);

#undef AMBIG_DEFINE_ERROR

}  // namespace ambig
