#pragma once

#include <stdexcept>
#include <string>

namespace crn {

// Base error for analysis-level failures (bad hypotheses, invariant breaks).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input-level failure: malformed network/scheme text. Carries a 1-based line
// number when one is known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace crn
