#pragma once

#include <stdexcept>
#include <string>

namespace pellcode {

/// A PELLE/PELLK file (or inline matrix text) failed structural validation.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally valid package carries values that cannot be decoded
/// (inexact division, value out of range, unrecoverable block).
class CorruptPackageError : public std::runtime_error {
public:
    explicit CorruptPackageError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested operation is outside the supported parameter range (e.g.
/// correction for p != 1).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pellcode
