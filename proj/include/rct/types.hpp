#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace rct {

using Vertex = int;
using Color = int;
using EdgeId = int;
using Cost = std::uint64_t;

inline constexpr Cost kMaxCost = std::numeric_limits<Cost>::max();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotACactusError : public Error {
public:
    using Error::Error;
};

class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind { Format, AsymmetricCosts };

class ParseError : public Error {
public:
    ParseError(int line, ParseErrorKind kind, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line), kind_(kind) {}
    int line() const { return line_; }
    ParseErrorKind kind() const { return kind_; }

private:
    int line_;
    ParseErrorKind kind_;
};

inline Cost checked_add(Cost a, Cost b) {
    if (a > kMaxCost - b) throw OverflowError("cost addition overflows");
    return a + b;
}

inline Cost checked_mul(Cost a, Cost b) {
    if (a != 0 && b > kMaxCost / a) throw OverflowError("cost multiplication overflows");
    return a * b;
}

} // namespace rct
