// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace utdirac {

/// Base class for physics-domain failures (as opposed to usage errors).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Conventional (vector-coupled) Coulomb problem has no real solution.
struct SingularRegime : DomainError {
    using DomainError::DomainError;
};

/// Eigenvalue bisection exhausted its bracket without converging.
struct NoConvergence : DomainError {
    using DomainError::DomainError;
};

/// Matching defect stagnates above tolerance on the given grid.
struct GridTooCoarse : DomainError {
    using DomainError::DomainError;
};

/// Cross section requested below the forward-angle guard.
struct ForwardDivergence : DomainError {
    using DomainError::DomainError;
};

/// Gauge-family evaluation hit a site where the scalar density vanishes.
struct ZeroDensity : DomainError {
    using DomainError::DomainError;
};

} // namespace utdirac
