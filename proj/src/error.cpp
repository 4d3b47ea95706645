#include "sdlab/error.hpp"

#include <numeric>

namespace sdlab {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::DuplicateGap: return "DuplicateGap";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void require_coprime(long a, long b) {
    if (a <= 0 || b <= 0)
        throw Error(ErrorKind::InvalidArgument,
                    "expected positive integers, got " + std::to_string(a) + ", " + std::to_string(b));
    if (std::gcd(a, b) != 1)
        throw Error(ErrorKind::GcdNotOne,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
}

} // namespace sdlab
