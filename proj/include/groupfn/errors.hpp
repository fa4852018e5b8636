#pragma once

#include <stdexcept>
#include <string>

namespace groupfn {

// Base class for all precondition and input errors. Property failures that
// are part of a test's contract (minimality, extremality) are returned as
// verdicts instead of thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GROUPFN_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what = #Name) : Error(what) {}  \
    }

GROUPFN_DEFINE_ERROR(ParseError);
GROUPFN_DEFINE_ERROR(LengthMismatch);
GROUPFN_DEFINE_ERROR(NotIncreasing);
GROUPFN_DEFINE_ERROR(NotPeriodic);
GROUPFN_DEFINE_ERROR(FOutOfRange);
GROUPFN_DEFINE_ERROR(AtBreakpoint);
GROUPFN_DEFINE_ERROR(DegenerateFunction);
GROUPFN_DEFINE_ERROR(BreakpointsNotOnGrid);
GROUPFN_DEFINE_ERROR(AllSlacksZero);
GROUPFN_DEFINE_ERROR(FNotInGroup);
GROUPFN_DEFINE_ERROR(NotMinimal);
GROUPFN_DEFINE_ERROR(NotADivisor);
GROUPFN_DEFINE_ERROR(FInKernel);
GROUPFN_DEFINE_ERROR(BadM);
GROUPFN_DEFINE_ERROR(VerificationFailed);
GROUPFN_DEFINE_ERROR(NotSubadditive);
GROUPFN_DEFINE_ERROR(ParamOutOfRange);
GROUPFN_DEFINE_ERROR(StrictPositivityRequired);

#undef GROUPFN_DEFINE_ERROR

}  // namespace groupfn
