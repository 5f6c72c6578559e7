#ifndef SGON_ERRORS_HH
#define SGON_ERRORS_HH

#include <stdexcept>
#include <string>

namespace sgon {

/// Malformed text input. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string & message) :
        std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        _line(line)
    {
    }

    auto line() const noexcept -> int { return _line; }

private:
    int _line;
};

/// Well-formed input that violates a precondition (disconnected graph, bad tuple, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sgon

#endif
