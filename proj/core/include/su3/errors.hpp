#pragma once

#include <stdexcept>
#include <string>

namespace su3 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SU3_DEFINE_ERROR(Name)             \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

SU3_DEFINE_ERROR(DivisionByZero);
SU3_DEFINE_ERROR(ParseError);
SU3_DEFINE_ERROR(DegreeOverflow);
SU3_DEFINE_ERROR(DegreeUnderflow);
SU3_DEFINE_ERROR(UnknownName);
SU3_DEFINE_ERROR(ParamOutOfRange);
SU3_DEFINE_ERROR(JacobiViolation);
SU3_DEFINE_ERROR(InexactScalars);
SU3_DEFINE_ERROR(SingularMetric);
SU3_DEFINE_ERROR(NotStable);
SU3_DEFINE_ERROR(WrongOrientation);
SU3_DEFINE_ERROR(NotSymmetric);
SU3_DEFINE_ERROR(Degenerate2Form);
SU3_DEFINE_ERROR(InconsistentTorsion);
SU3_DEFINE_ERROR(ModeUnsupported);
SU3_DEFINE_ERROR(VariableMismatch);

#undef SU3_DEFINE_ERROR

/// Raised when a Groebner computation exceeds its time or memory cap.
class ResourceBudgetExceeded : public Error {
 public:
  enum class Resource { Time, Memory };
  ResourceBudgetExceeded(Resource which, const std::string& what)
      : Error(what), which_(which) {}
  Resource resource() const { return which_; }

 private:
  Resource which_;
};

}  // namespace su3
