#ifndef VKPLATE_ERRORS_HPP
#define VKPLATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vkplate {

/// A polynomial fed to an operator that requires vanishing low-degree
/// coefficients (division by y or y^2) carried nonzero low-degree mass.
struct MinDegreeViolation : std::domain_error {
    explicit MinDegreeViolation(const std::string& what) : std::domain_error(what) {}
};

/// Poisson ratio outside (0, 1/2).
struct InvalidPoisson : std::invalid_argument {
    explicit InvalidPoisson(const std::string& what) : std::invalid_argument(what) {}
};

/// 2*lambda + 1 == 0 would make the initial slope guess undefined.
struct DegenerateLambda : std::invalid_argument {
    explicit DegenerateLambda(const std::string& what) : std::invalid_argument(what) {}
};

/// The 2x2 system coupling the edge condition and the deflection
/// restriction has zero determinant. Not reachable for the four
/// supported edge types; signals a misconfigured boundary.
struct SingularBoundarySystem : std::runtime_error {
    explicit SingularBoundarySystem(const std::string& what) : std::runtime_error(what) {}
};

/// A float-mode computation overflowed to inf/nan. `where` identifies the
/// approximation order or iteration that produced it.
struct NonFiniteCoefficient : std::runtime_error {
    NonFiniteCoefficient(const std::string& what, int where)
        : std::runtime_error(what), where_index(where) {}
    int where_index;
};

/// Every probe of a parameter search produced a non-finite residual.
struct AllEvaluationsDiverged : std::runtime_error {
    explicit AllEvaluationsDiverged(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vkplate

#endif
