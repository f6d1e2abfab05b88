#pragma once

#include <stdexcept>

namespace genlap {

// Thrown when an algorithm fails to reach its accuracy target (quadrature
// non-convergence, evaluation too close to an MGF domain endpoint, hazard at
// zero survival). Parameter/domain violations use std::domain_error instead.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace genlap
