#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SYMCONE_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}      \
  }

SYMCONE_DEFINE_ERROR(InvalidPart);
SYMCONE_DEFINE_ERROR(ShapeMismatch);
SYMCONE_DEFINE_ERROR(CapExceeded);
SYMCONE_DEFINE_ERROR(DivByZero);
SYMCONE_DEFINE_ERROR(DegeneratePole);
SYMCONE_DEFINE_ERROR(NonLinearPole);
SYMCONE_DEFINE_ERROR(SpecializationFailed);
SYMCONE_DEFINE_ERROR(BadExponent);
SYMCONE_DEFINE_ERROR(Incomplete);
SYMCONE_DEFINE_ERROR(BadEdge);
SYMCONE_DEFINE_ERROR(NotCombinable);
SYMCONE_DEFINE_ERROR(Invalid);

#undef SYMCONE_DEFINE_ERROR

} // namespace symcone
