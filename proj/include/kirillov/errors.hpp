#pragma once

#include <stdexcept>
#include <string>

namespace kirillov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KIRILLOV_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

KIRILLOV_DEFINE_ERROR(NotPrime);
KIRILLOV_DEFINE_ERROR(NotNilpotent);
KIRILLOV_DEFINE_ERROR(InvalidPartition);
KIRILLOV_DEFINE_ERROR(InvalidRankSequence);
KIRILLOV_DEFINE_ERROR(IndexOutOfRange);
KIRILLOV_DEFINE_ERROR(DuplicateAbscissa);
KIRILLOV_DEFINE_ERROR(NonIntegerCoefficients);
KIRILLOV_DEFINE_ERROR(InsufficientPoints);
KIRILLOV_DEFINE_ERROR(ZeroPolynomial);
KIRILLOV_DEFINE_ERROR(BadPrime);
KIRILLOV_DEFINE_ERROR(InexactDivision);
KIRILLOV_DEFINE_ERROR(BadCharacteristic);
KIRILLOV_DEFINE_ERROR(TooLarge);
KIRILLOV_DEFINE_ERROR(ParseError);
KIRILLOV_DEFINE_ERROR(PredicateMismatch);
KIRILLOV_DEFINE_ERROR(DimensionMismatch);

#undef KIRILLOV_DEFINE_ERROR

}  // namespace kirillov
