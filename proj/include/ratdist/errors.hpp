#pragma once

#include <stdexcept>
#include <string>

namespace ratdist {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct RadicandMismatch : Error { using Error::Error; };
struct NonExactDivision : Error { using Error::Error; };
struct VariableMismatch : Error { using Error::Error; };
struct EvaluationAtPole : Error { using Error::Error; };
struct OffCurve : Error { using Error::Error; };
struct SingularCurve : Error { using Error::Error; };
struct SingularQuartic : Error { using Error::Error; };
struct DegenerateTetrahedron : Error { using Error::Error; };
// A construction step hit an excluded case (tangent direction, branch point, ...).
struct ConstructionFailure : Error { using Error::Error; };

} // namespace ratdist
