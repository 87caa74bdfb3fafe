#pragma once

#include <stdexcept>
#include <string>

namespace lattika {

// Root of every error the library throws. Programming errors (overflow of
// the wide intermediates, broken internal invariants) use assert instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LATTIKA_DEFINE_ERROR(Name)         \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

LATTIKA_DEFINE_ERROR(InvalidParameter);
LATTIKA_DEFINE_ERROR(NotInvertible);
LATTIKA_DEFINE_ERROR(NotPrime);
LATTIKA_DEFINE_ERROR(Unsupported);
LATTIKA_DEFINE_ERROR(ParamMismatch);
LATTIKA_DEFINE_ERROR(NttUnavailable);
LATTIKA_DEFINE_ERROR(DimMismatch);
LATTIKA_DEFINE_ERROR(Singular);
LATTIKA_DEFINE_ERROR(NotBinary);
LATTIKA_DEFINE_ERROR(PlaintextOutOfRange);
LATTIKA_DEFINE_ERROR(KeyMismatch);
LATTIKA_DEFINE_ERROR(BadModuli);
LATTIKA_DEFINE_ERROR(ParseError);
LATTIKA_DEFINE_ERROR(RoleMismatch);
LATTIKA_DEFINE_ERROR(IoError);

#undef LATTIKA_DEFINE_ERROR

}  // namespace lattika
