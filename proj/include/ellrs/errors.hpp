#pragma once

#include <stdexcept>
#include <string>

namespace ellrs {

// Every computational failure carries the name of the condition that
// triggered it; the CLI reports name() on stderr and exits with status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define ELLRS_DEFINE_ERROR(Type)                                    \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(#Type, what) {}  \
  }

ELLRS_DEFINE_ERROR(InvalidArgument);
ELLRS_DEFINE_ERROR(NonConvergent);
ELLRS_DEFINE_ERROR(SingularDenominator);
ELLRS_DEFINE_ERROR(NotAStrip);
ELLRS_DEFINE_ERROR(GenericityViolation);
ELLRS_DEFINE_ERROR(NonTerminating);
ELLRS_DEFINE_ERROR(TrackingAmbiguity);
ELLRS_DEFINE_ERROR(DegenerateCombination);
ELLRS_DEFINE_ERROR(NonIntegral);
ELLRS_DEFINE_ERROR(ImaginaryResidue);

#undef ELLRS_DEFINE_ERROR

}  // namespace ellrs
