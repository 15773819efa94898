#pragma once

#include <stdexcept>
#include <string>

namespace sumsq {

enum class ErrorKind {
    NonUnit,
    Grid,
    Bridge,
    Domain,
    Length,
    Degenerate,
    Registry,
    Divisor,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, long index = -1)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    ErrorKind kind() const { return kind_; }
    // Offending index where one exists (Hankel size, exponent, ...), else -1.
    long index() const { return index_; }

private:
    ErrorKind kind_;
    long index_;
};

}  // namespace sumsq
