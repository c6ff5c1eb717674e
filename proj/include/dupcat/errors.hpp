#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dupcat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InvalidQuiver : public Error {
public:
    using Error::Error;
};

class LoopError : public InvalidQuiver {
public:
    using InvalidQuiver::InvalidQuiver;
};

class CyclicQuiver : public InvalidQuiver {
public:
    using InvalidQuiver::InvalidQuiver;
};

class NotDynkin : public Error {
public:
    using Error::Error;
};

/// Knitting produced more indecomposables (or larger ones) than allowed.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t cap, const std::string& what) : Error(what), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// Knitting met a module it had already produced, or a non-brick.
class KnittingError : public Error {
public:
    using Error::Error;
};

class NotInDomain : public Error {
public:
    using Error::Error;
};

}  // namespace dupcat
