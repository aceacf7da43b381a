#ifndef QLV_ERRORS_HPP
#define QLV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlv {

// Base class for all errors raised by the toolkit. The CLI maps these to
// exit code 2 (usage/validation); resource exhaustion is not an error but a
// first-class UNKNOWN verdict.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched KConfig, partial activation table, missing activation, ...
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A constant or weight lies outside the active K range, or a parse-time
// rewrite would leave K.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

// Lexical or syntax error; carries the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Malformed input files, dimension mismatches, unknown activations.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Exact-integer arithmetic left the host word range. Reported, never wrapped.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

}  // namespace qlv

#endif  // QLV_ERRORS_HPP
