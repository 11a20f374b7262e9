#pragma once

#include <stdexcept>
#include <string>

namespace ybhecke {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define YBHECKE_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

YBHECKE_DEFINE_ERROR(DivisionByZero)
YBHECKE_DEFINE_ERROR(SubstitutionSingular)
YBHECKE_DEFINE_ERROR(ZeroPolynomial)
YBHECKE_DEFINE_ERROR(InvalidPolynomial)
YBHECKE_DEFINE_ERROR(ParseError)
YBHECKE_DEFINE_ERROR(InvalidPermutation)
YBHECKE_DEFINE_ERROR(RankMismatch)
YBHECKE_DEFINE_ERROR(RankOutOfRange)
YBHECKE_DEFINE_ERROR(IndexOutOfRange)
YBHECKE_DEFINE_ERROR(AlgebraMismatch)
YBHECKE_DEFINE_ERROR(ZeroSpectral)
YBHECKE_DEFINE_ERROR(DegenerateSpectrum)
YBHECKE_DEFINE_ERROR(ShapeInvalid)

#undef YBHECKE_DEFINE_ERROR

}  // namespace ybhecke
