#pragma once

#include <limits>

#include "mldeg/system.hpp"

namespace mldeg {

struct NewtonResult {
    bool converged = false;
    // Linear instead of quadratic step contraction, or a Jacobian at the
    // limit too ill conditioned to trust: the root is likely multiple.
    bool multiple_root = false;
    Vec point;
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
};

// Plain Newton iteration from `start`. Stops when the update norm drops
// below tol * (1 + |x|), when the Jacobian becomes numerically singular
// (reciprocal condition below 1e-12), or after max_iters steps.
NewtonResult newton_refine(const SystemEvaluator& system, const Vec& start, double tol, int max_iters);
NewtonResult newton_refine(const SquareSystem& system, const Vec& start, double tol, int max_iters);

}  // namespace mldeg
