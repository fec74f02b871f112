#pragma once

#include <stdexcept>
#include <string>

namespace logsmooth {

// Base class so callers (the CLI in particular) can catch every validation
// failure in one place and map it to an exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LOGSMOOTH_ERROR(Name)                      \
  struct Name : Error {                            \
    explicit Name(const std::string& what_arg)     \
        : Error(std::string(#Name ": ") + what_arg) {} \
  }

LOGSMOOTH_ERROR(AliasError);
LOGSMOOTH_ERROR(BadExponent);
LOGSMOOTH_ERROR(StepTooSmall);
LOGSMOOTH_ERROR(OrderTooLow);
LOGSMOOTH_ERROR(SupportOverflow);
LOGSMOOTH_ERROR(TrivialSpace);
LOGSMOOTH_ERROR(BadOrder);
LOGSMOOTH_ERROR(ZeroModeError);
LOGSMOOTH_ERROR(ZeroValue);
LOGSMOOTH_ERROR(UnknownClaim);
LOGSMOOTH_ERROR(DomainError);
LOGSMOOTH_ERROR(NoWitness);
LOGSMOOTH_ERROR(BadParams);
LOGSMOOTH_ERROR(BadGrid);

#undef LOGSMOOTH_ERROR

}  // namespace logsmooth
