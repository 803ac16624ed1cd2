#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vcfb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A population or field value became NaN/Inf. `step` is -1 when the
/// failing call was a single update outside a driver loop.
class NonFiniteError : public Error {
public:
    NonFiniteError(std::size_t node, double t, std::int64_t step = -1);

    std::size_t node() const noexcept { return node_; }
    double time() const noexcept { return t_; }
    std::int64_t step() const noexcept { return step_; }

private:
    std::size_t node_;
    double t_;
    std::int64_t step_;
};

/// tau <= 1/2: the requested diffusion sign cannot be represented.
class TauOutOfRange : public Error {
public:
    explicit TauOutOfRange(double tau);
    double tau() const noexcept { return tau_; }

private:
    double tau_;
};

class SingularDenominator : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class UnknownExample : public Error {
public:
    explicit UnknownExample(int k);
};

class CflViolation : public Error {
public:
    CflViolation(double number, double limit);
    double number() const noexcept { return number_; }

private:
    double number_;
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs);
};

class ZeroReferenceNorm : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

}  // namespace vcfb
