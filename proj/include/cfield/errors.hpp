#pragma once
#include <stdexcept>

namespace cfield {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };        // input outside an operation's domain
struct InvalidSoftening : Error { using Error::Error; };   // |h| eps^alpha >= 1, radial bound lost
struct FlavorError : Error { using Error::Error; };        // operation undefined for this smoothing flavor
struct SingularityError : Error { using Error::Error; };   // field evaluated at the collision singularity
struct RootBracketFailure : Error { using Error::Error; }; // no sign change where one is guaranteed
struct TangencyAmbiguous : Error { using Error::Error; };  // near-tangent roots below resolution
struct StepFailure : Error { using Error::Error; };        // integrator tolerance unreachable
struct EnergyViolation : Error { using Error::Error; };    // initial state off the declared energy surface
struct QuadratureError : Error { using Error::Error; };    // time quadrature under-resolved
struct Inconclusive : Error { using Error::Error; };       // integration budget exhausted without a verdict

} // namespace cfield
