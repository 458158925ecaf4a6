#pragma once

#include <stdexcept>
#include <string>

namespace smw {

/// Domain error for the whole workbench (bad inputs, inexact division,
/// generator-set mismatches, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the d=2 derived-class convention search finds no passing
/// convention or several inequivalent ones. Mapped to exit code 3 by the CLI.
class ConventionError : public Error {
public:
    explicit ConventionError(const std::string& what) : Error(what) {}
};

}  // namespace smw
