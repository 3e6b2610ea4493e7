// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

/// Thrown when an exact operation would divide by zero.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a value that must be rational carries a nonzero sqrt(3) part.
/// On valid inputs this never fires; it flags a formula-evaluation bug.
struct IrrationalityError : std::domain_error {
    explicit IrrationalityError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when three pairwise resistances violate the triangle inequality
/// and therefore admit no equivalent star network.
struct NonRealizableStar : std::domain_error {
    explicit NonRealizableStar(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an exact linear solve meets a singular matrix.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ladder
