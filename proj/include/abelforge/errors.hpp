#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownFunction, UnknownIdentifier };

    ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected,
               const std::string& what)
        : Error(what), kind_(kind), offset_(offset), expected_(std::move(expected)) {}

    Kind kind() const noexcept { return kind_; }
    /// Byte offset into the parsed text.
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    Kind kind_;
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Division by zero, sqrt of a negative, ln of a non-positive, overflow, or an
/// argument outside a special function's admissible range.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what, std::string subexpression = {})
        : Error(what), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

class NotRenderable : public Error {
public:
    using Error::Error;
};

class AllPointsSingular : public Error {
public:
    using Error::Error;
};

class NoRealRoot : public Error {
public:
    using Error::Error;
};

class EmptyDomain : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

class InteriorZero : public Error {
public:
    using Error::Error;
};

class BracketFailure : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

}  // namespace abelforge
