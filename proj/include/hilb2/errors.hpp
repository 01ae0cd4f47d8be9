#pragma once

#include <stdexcept>
#include <string>

namespace hilb2 {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input files or JSON schema violations (CLI exit code 2).
struct parse_error : error {
    using error::error;
};

/// An operation that needs a finite staircase was given an ideal with
/// infinite colength.
struct infinite_colength : error {
    using error::error;
};

/// The arrow passed to an edge-ideal construction is not positive
/// significant for the given ideal.
struct not_positive_significant : error {
    using error::error;
};

/// Two ideals compared under the staircase order have different
/// Hilbert functions.
struct hilbert_mismatch : error {
    using error::error;
};

/// No monomial ideal realizes the requested Hilbert function.
struct not_a_hilbert_function : error {
    using error::error;
};

/// An operation's stated precondition does not hold for the inputs.
struct precondition_violated : error {
    using error::error;
};

/// The degree-zero submonoid is not monogenic, so the principal-factor
/// classification does not apply.
struct unsupported_grading : error {
    using error::error;
};

/// A division that must be exact left a remainder; indicates a bug.
struct inexact_division : error {
    using error::error;
};

} // namespace hilb2
