#pragma once

#include <stdexcept>
#include <string>

namespace bverify {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define BVERIFY_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

BVERIFY_DEFINE_ERROR(DomainMismatch);
BVERIFY_DEFINE_ERROR(DivisionByZero);
BVERIFY_DEFINE_ERROR(ParseError);
BVERIFY_DEFINE_ERROR(DimensionMismatch);
BVERIFY_DEFINE_ERROR(TruncationExceeded);
BVERIFY_DEFINE_ERROR(InhomogeneousRule);
BVERIFY_DEFINE_ERROR(OutOfBasis);
BVERIFY_DEFINE_ERROR(ZeroScalingFunction);
BVERIFY_DEFINE_ERROR(SearchSpaceTooLarge);
BVERIFY_DEFINE_ERROR(SchemaError);
BVERIFY_DEFINE_ERROR(ValidationError);

#undef BVERIFY_DEFINE_ERROR

} // namespace bverify
