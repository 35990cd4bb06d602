#ifndef SPECTRA_ERRORS_HPP
#define SPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spectra {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field construction
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct ReducedPolynomial : Error { using Error::Error; };   // override polynomial not irreducible
struct NotPrimitive : Error { using Error::Error; };        // override psi has wrong order

// Arithmetic
struct LogOfZero : Error { using Error::Error; };
struct ZeroExponent : Error { using Error::Error; };

// Spectral engine
struct ZeroDerivativeDirection : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct PairBudgetExceeded : Error { using Error::Error; };

// Closed forms
struct NotApplicable : Error { using Error::Error; };
struct NonIntegerFrequency : Error { using Error::Error; };

// Curve counting
struct HypothesisViolated : Error { using Error::Error; };
struct UncoveredCase : Error { using Error::Error; };

// Coset partition
struct OutsideSharpSet : Error { using Error::Error; };

} // namespace spectra

#endif
