#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cactusnet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Mobius step or rational function was evaluated at a pole.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what, std::optional<std::size_t> step = std::nullopt)
        : Error(what), step_(step) {}

    /// Index of the failing step when raised from a chain evaluation.
    std::optional<std::size_t> step() const { return step_; }

private:
    std::optional<std::size_t> step_;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SelfLoop : public Error {
public:
    using Error::Error;
};

class NonPositiveConductivity : public Error {
public:
    using Error::Error;
};

class UnknownEndpoint : public Error {
public:
    using Error::Error;
};

class NoBoundary : public Error {
public:
    using Error::Error;
};

class SingularInterior : public Error {
public:
    using Error::Error;
};

class NonPositiveParameter : public Error {
public:
    using Error::Error;
};

/// Networks that should share a response provably do not.
class InfeasibleFiber : public Error {
public:
    using Error::Error;
};

class NonPositiveSlack : public Error {
public:
    using Error::Error;
};

/// Inputs that do not share the structure an operation requires.
class TopologyMismatch : public Error {
public:
    using Error::Error;
};

/// An internal cross-check (oracle, root count, matrix invariant) failed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace cactusnet
