#pragma once

#include <stdexcept>
#include <string>

namespace srbm {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SRBM_DEFINE_ERROR(Name)                                     \
    struct Name : Error {                                           \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

SRBM_DEFINE_ERROR(InvalidArgument);
SRBM_DEFINE_ERROR(SingularMatrix);
SRBM_DEFINE_ERROR(DimensionTooLarge);
SRBM_DEFINE_ERROR(NotSymmetric);
SRBM_DEFINE_ERROR(InvalidSigma);
SRBM_DEFINE_ERROR(IndexOutOfRange);
SRBM_DEFINE_ERROR(SingularR);
SRBM_DEFINE_ERROR(DegeneratePair);
SRBM_DEFINE_ERROR(EmptySlice);
SRBM_DEFINE_ERROR(ZeroDiagonalR);
SRBM_DEFINE_ERROR(NotPMatrix);
SRBM_DEFINE_ERROR(InvalidSpec);
SRBM_DEFINE_ERROR(NotProductForm);
SRBM_DEFINE_ERROR(InfeasiblePath);
SRBM_DEFINE_ERROR(LcpRayTermination);
SRBM_DEFINE_ERROR(DomainError);

#undef SRBM_DEFINE_ERROR

}  // namespace srbm
