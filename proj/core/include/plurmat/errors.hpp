#pragma once

#include <stdexcept>
#include <string>

namespace plurmat {

// Invalid argument or violated precondition.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Refused because the computation would enumerate too much.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A required matrix slice or aggregate vector is missing.
class DependencyError : public std::runtime_error {
public:
    explicit DependencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pairwise proportion hit {0,1} where a formula divides by it.
class PositivityError : public DomainError {
public:
    explicit PositivityError(const std::string& msg) : DomainError(msg) {}
};

// Pair with zero rank gap, or zero variance, where a ratio is requested.
class DegenerateError : public DomainError {
public:
    explicit DegenerateError(const std::string& msg) : DomainError(msg) {}
};

// No elicitation protocol satisfies the requested constraints.
class FeasibilityError : public DomainError {
public:
    explicit FeasibilityError(const std::string& msg) : DomainError(msg) {}
};

// The requested analytic form does not exist for this generator.
class UnsupportedError : public DomainError {
public:
    explicit UnsupportedError(const std::string& msg) : DomainError(msg) {}
};

// Malformed input file; carries the 1-based offending line.
class FileParseError : public std::runtime_error {
public:
    FileParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace plurmat
