#pragma once

#include <stdexcept>
#include <string>

namespace qdunkl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inversion of the zero quaternion.
class ZeroQuaternion : public Error {
public:
    ZeroQuaternion() : Error("cannot invert the zero quaternion") {}
};

// axis_complex_pow applied to the zero element of the axis subalgebra.
class ZeroBase : public Error {
public:
    ZeroBase() : Error("axis_complex_pow: base (s, t) = (0, 0)") {}
};

// A numeric argument outside its documented range.
class InvalidParam : public Error {
public:
    explicit InvalidParam(const std::string& msg) : Error("invalid parameter: " + msg) {}
};

// theta too close to pi*Z for the kernel normalization (use the special cases).
class ThetaSingular : public Error {
public:
    explicit ThetaSingular(double theta)
        : Error("theta = " + std::to_string(theta) +
                " is within sin_floor of a multiple of pi; use the identity/reflection special case") {}
};

// Two fields (or a field and a rule) defined on incompatible grids.
class GridMismatch : public Error {
public:
    explicit GridMismatch(const std::string& msg) : Error("grid mismatch: " + msg) {}
};

// The difference term of the Dunkl operator requires a grid avoiding 0.
class GridContainsZero : public Error {
public:
    GridContainsZero() : Error("dunkl_operator_apply: grid must exclude 0 and be symmetric") {}
};

// Requested spectral truncation too high for the grid resolution.
class TruncationTooHigh : public Error {
public:
    explicit TruncationTooHigh(const std::string& msg) : Error("truncation too high: " + msg) {}
};

// The argmin of a diagonal-coefficient table fell on the truncation boundary.
class TruncationSuspect : public Error {
public:
    explicit TruncationSuspect(const std::string& msg) : Error("truncation suspect: " + msg) {}
};

// An operation that needs a nonzero function received the zero field.
class ZeroFunction : public Error {
public:
    ZeroFunction() : Error("operation undefined for the zero function") {}
};

// Bochner harmonics are limited to bidegrees 0 and 1 in the rank-one setting.
class UnsupportedDegree : public Error {
public:
    explicit UnsupportedDegree(int r)
        : Error("unsupported harmonic degree " + std::to_string(r) + " (only 0 and 1)") {}
};

// An internal consistency check failed (e.g. large imaginary residue of <f,f>).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error("numerical error: " + msg) {}
};

} // namespace qdunkl
