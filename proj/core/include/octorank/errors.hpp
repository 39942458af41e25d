#pragma once

#include <stdexcept>
#include <string>

namespace octorank {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar and field errors.
struct InvalidFieldSpec : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroHasNoSquareClass : Error { using Error::Error; };

// Algebra construction and element errors.
struct AlgebraConstructionError : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct ZeroOctonion : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };

// Form and census errors.
struct BadHyperplane : Error { using Error::Error; };
struct CensusInfeasible : Error { using Error::Error; };

// Exterior-square errors.
struct AmbientMismatch : Error { using Error::Error; };
struct DegenerateFamily : Error { using Error::Error; };
struct RequiresDivisionAlgebra : Error { using Error::Error; };

// Symmetry errors.
struct RequiresSplitZorn : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct NotAutomorphism : Error { using Error::Error; };
struct NotDerivation : Error { using Error::Error; };

}  // namespace octorank
