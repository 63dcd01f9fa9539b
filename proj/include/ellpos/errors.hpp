#pragma once

#include <stdexcept>
#include <string>

namespace ellpos {

// Validation failures: the input is outside the domain of an operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant violations. Seeing one of these means a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define ELLPOS_DEFINE_ERROR(Name)                          \
    class Name : public Error {                            \
    public:                                                \
        explicit Name(const std::string& what)             \
            : Error(#Name ": " + what) {}                  \
    }

ELLPOS_DEFINE_ERROR(MismatchedConfig);
ELLPOS_DEFINE_ERROR(NotNegativeDefinite);
ELLPOS_DEFINE_ERROR(NegativeCoefficient);
ELLPOS_DEFINE_ERROR(NonIntegralEuler);
ELLPOS_DEFINE_ERROR(Unsupported);
ELLPOS_DEFINE_ERROR(InvalidFiber);
ELLPOS_DEFINE_ERROR(Inconsistent);
ELLPOS_DEFINE_ERROR(InvalidGenus);
ELLPOS_DEFINE_ERROR(NotInvariant);
ELLPOS_DEFINE_ERROR(DeskScaleExceeded);
ELLPOS_DEFINE_ERROR(PreconditionFailed);

#undef ELLPOS_DEFINE_ERROR

} // namespace ellpos
