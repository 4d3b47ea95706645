#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

enum class ErrorKind {
    GcdNotOne,
    EmptyGenerators,
    InvalidArgument,
    NotAMember,
    IndexOutOfRange,
    InexactDivision,
    DuplicateGap,
    TooLarge,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Throws GcdNotOne unless gcd(a, b) == 1.
void require_coprime(long a, long b);

} // namespace sdlab
