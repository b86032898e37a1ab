#ifndef MONREG_ERRORS_HPP
#define MONREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monreg {

/// Input violates a mathematical precondition (zero/unit ideal where a
/// proper one is required, mismatched variable counts, bad parameters).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap was exceeded.  The message names the cap and its
/// value so the caller can report the skip or raise the limit.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& cap_name, long long cap_value, const std::string& detail)
        : std::runtime_error(detail + " (cap " + cap_name + "=" + std::to_string(cap_value) + ")"),
          cap_name_(cap_name),
          cap_value_(cap_value) {}

    const std::string& cap_name() const { return cap_name_; }
    long long cap_value() const { return cap_value_; }

private:
    std::string cap_name_;
    long long cap_value_;
};

/// Malformed textual input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Integer arithmetic would wrap around.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

} // namespace monreg

#endif
