#pragma once

#include <stdexcept>
#include <string>

namespace specchart {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SPECCHART_DEFINE_ERROR(Name)                       \
    class Name : public Error {                            \
      public:                                              \
        explicit Name(const std::string& what)             \
            : Error(std::string(#Name) + ": " + what) {}   \
    }

SPECCHART_DEFINE_ERROR(DivisionByZero);
SPECCHART_DEFINE_ERROR(NotHermitian);
SPECCHART_DEFINE_ERROR(ZeroPolynomial);
SPECCHART_DEFINE_ERROR(NotMonic);
SPECCHART_DEFINE_ERROR(InvalidRing);
SPECCHART_DEFINE_ERROR(OutOfRange);
SPECCHART_DEFINE_ERROR(NotAntiHermitian);
SPECCHART_DEFINE_ERROR(DegreeBoundViolated);
SPECCHART_DEFINE_ERROR(DegreeProfileViolated);
SPECCHART_DEFINE_ERROR(NotRegularEverywhere);
SPECCHART_DEFINE_ERROR(ContentNotRemovable);
SPECCHART_DEFINE_ERROR(CurveNotReal);
SPECCHART_DEFINE_ERROR(NotUniquelyIntertwined);
SPECCHART_DEFINE_ERROR(HermitianizationObstructed);
SPECCHART_DEFINE_ERROR(DegenerateForm);
SPECCHART_DEFINE_ERROR(NotAssociative);
SPECCHART_DEFINE_ERROR(InvalidModule);
SPECCHART_DEFINE_ERROR(BudgetExhausted);
SPECCHART_DEFINE_ERROR(ParseError);
SPECCHART_DEFINE_ERROR(InternalError);

#undef SPECCHART_DEFINE_ERROR

}  // namespace specchart
