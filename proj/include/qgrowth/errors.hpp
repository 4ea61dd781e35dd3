#ifndef QGROWTH_ERRORS_HPP
#define QGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgrowth {

/// Base for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates a precondition.
class invalid_argument : public error {
public:
    using error::error;
};

/// A coefficient beyond the known precision was requested, or an operation
/// needs more precision than its input carries.
class precision_error : public error {
public:
    using error::error;
};

/// Operands live over different coefficient rings.
class ring_mismatch : public error {
public:
    using error::error;
};

/// Non-unit leading coefficient, inexact division, non-invertible scalar.
class arithmetic_error : public error {
public:
    using error::error;
};

/// An enumeration oracle was asked for more than its hard budget.
class budget_exceeded : public error {
public:
    using error::error;
};

} // namespace qgrowth

#endif
