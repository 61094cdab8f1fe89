#ifndef RAMICALC_ERROR_HPP
#define RAMICALC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ramicalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (negative abscissa, e = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

// Input data violating a named structural invariant. The invariant name is
// kept separately so that front ends can report it verbatim.
class ValidationError : public Error {
public:
    ValidationError(std::string invariant, const std::string& detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant))
    {
    }

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

// Data that is well formed but contradicts a theorem relating two inputs,
// e.g. two structure functions that should agree at a distance but don't.
class InconsistentDataError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ramicalc

#endif
