#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable identifier of the failure kind, e.g. "UnboundedDomain".
  [[nodiscard]] virtual const char* kind() const noexcept = 0;
};

#define BERGMAN_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(what) {}           \
    [[nodiscard]] const char* kind() const noexcept override {        \
      return #Name;                                                   \
    }                                                                 \
  }

BERGMAN_DEFINE_ERROR(SingularMatrix);
BERGMAN_DEFINE_ERROR(UnboundedDomain);
BERGMAN_DEFINE_ERROR(PreconditionViolated);
BERGMAN_DEFINE_ERROR(DivisionByZero);
BERGMAN_DEFINE_ERROR(SingularEvaluation);
BERGMAN_DEFINE_ERROR(NotSquareIntegrable);
BERGMAN_DEFINE_ERROR(NoConvergence);
BERGMAN_DEFINE_ERROR(SamplingExhausted);
BERGMAN_DEFINE_ERROR(ParseError);

#undef BERGMAN_DEFINE_ERROR

}  // namespace bergman
