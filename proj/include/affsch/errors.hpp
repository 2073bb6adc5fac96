#pragma once

#include <stdexcept>
#include <string>

namespace affsch {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define AFFSCH_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

AFFSCH_DEFINE_ERROR(InvalidRank);
AFFSCH_DEFINE_ERROR(InvalidElement);
AFFSCH_DEFINE_ERROR(RankMismatch);
AFFSCH_DEFINE_ERROR(IndexOutOfRange);
AFFSCH_DEFINE_ERROR(SizeMismatch);
AFFSCH_DEFINE_ERROR(ZeroLeadingTerm);
AFFSCH_DEFINE_ERROR(InsufficientPrecision);
AFFSCH_DEFINE_ERROR(SingularMatrix);
AFFSCH_DEFINE_ERROR(InvalidParams);
AFFSCH_DEFINE_ERROR(PreconditionViolated);
AFFSCH_DEFINE_ERROR(DegenerateInput);
AFFSCH_DEFINE_ERROR(NotConstant);
AFFSCH_DEFINE_ERROR(NotUnimodular);
AFFSCH_DEFINE_ERROR(ParseError);

#undef AFFSCH_DEFINE_ERROR

}  // namespace affsch
