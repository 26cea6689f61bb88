#pragma once

#include <stdexcept>
#include <string>

namespace idp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define IDP_DEFINE_ERROR(Name)                 \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    };

IDP_DEFINE_ERROR(ParameterOutOfRange)
IDP_DEFINE_ERROR(IndexOutOfRange)
IDP_DEFINE_ERROR(BudgetExceeded)
IDP_DEFINE_ERROR(PointOutsideSimplex)
IDP_DEFINE_ERROR(DimensionMismatch)
IDP_DEFINE_ERROR(InvalidPair)
IDP_DEFINE_ERROR(InternalConsistency)
IDP_DEFINE_ERROR(NonPureComplex)
IDP_DEFINE_ERROR(SingularFacet)
IDP_DEFINE_ERROR(CertificateFailure)
IDP_DEFINE_ERROR(DegenerateLift)
IDP_DEFINE_ERROR(OverflowError)

#undef IDP_DEFINE_ERROR

}  // namespace idp
