#pragma once

#include <stdexcept>
#include <string>

namespace machzero {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pressure left the admissible domain (vacuum side, p <= p_min).
class DomainError : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class NotAShock : public Error {
public:
    using Error::Error;
};

class NotARarefaction : public Error {
public:
    using Error::Error;
};

class ZeroSizeWave : public Error {
public:
    using Error::Error;
};

class NoBracket : public Error {
public:
    using Error::Error;
};

class InadmissibleScenario : public Error {
public:
    using Error::Error;
};

class EventCapExceeded : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class MissingTrace : public Error {
public:
    using Error::Error;
};

class CFLViolation : public Error {
public:
    using Error::Error;
};

class InfeasibleConstants : public Error {
public:
    using Error::Error;
};

/// Configuration problems; `path` names the offending field.
class ValidationError : public Error {
public:
    ValidationError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace machzero
