#pragma once

#include <stdexcept>
#include <string>

namespace noonsi {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or parameter set (CLI maps this to exit code 2).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

/// A caller violated an operation's contract, e.g. passed an unnormalized
/// JSA where a normalized one is required (CLI exit code 3).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error("contract: " + msg) {}
};

/// Numerical failure: singular denominator, undersampled fringe, grid too
/// coarse, degenerate density (CLI exit code 3).
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error("numeric: " + msg) {}
};

/// File system / serialization failure (CLI exit code 4).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("io: " + msg) {}
};

} // namespace noonsi
