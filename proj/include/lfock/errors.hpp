#pragma once

#include <stdexcept>
#include <string>

namespace lfock {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LFOCK_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                          \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

LFOCK_DEFINE_ERROR(DivisionByZero);
LFOCK_DEFINE_ERROR(PoleAtPoint);
LFOCK_DEFINE_ERROR(IndexOutOfRange);
LFOCK_DEFINE_ERROR(DegreeOutOfRange);
LFOCK_DEFINE_ERROR(PatternMismatch);
LFOCK_DEFINE_ERROR(OddR);
LFOCK_DEFINE_ERROR(ZeroResidue);
LFOCK_DEFINE_ERROR(DivergentSeries);
LFOCK_DEFINE_ERROR(InvalidParameters);
LFOCK_DEFINE_ERROR(InvalidConfig);
LFOCK_DEFINE_ERROR(IOError);

#undef LFOCK_DEFINE_ERROR

} // namespace lfock
