#pragma once

#include <stdexcept>
#include <string>

namespace terj {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion or division by an exact zero.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error(what) {}
};

/// Matrix/vector dimensions incompatible with the requested operation.
class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// An index or structural parameter outside its documented range.
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

/// A module whose classification parameters are not rational.
class NonRationalParameter : public Error {
public:
    explicit NonRationalParameter(const std::string& what) : Error(what) {}
};

/// Input module data violates a precondition of a constructive map.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

/// An anchor set that is not a subset of the ground set, or has wrong size.
class InvalidAnchor : public Error {
public:
    explicit InvalidAnchor(const std::string& what) : Error(what) {}
};

/// A computation whose instance size exceeds the configured cap.
class SizeCapExceeded : public Error {
public:
    explicit SizeCapExceeded(const std::string& what) : Error(what) {}
};

} // namespace terj
