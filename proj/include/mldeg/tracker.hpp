#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mldeg/newton.hpp"
#include "mldeg/system.hpp"

namespace mldeg {

struct TrackerConfig {
    double step_min = 1e-7;
    double step_max = 0.1;
    double corrector_tol = 1e-10;
    int corrector_max_iters = 3;
    double endpoint_tol = 1e-12;
    double infinity_threshold = 1e10;
    double cluster_radius = 1e-6;
    std::uint64_t seed = 42;

    void validate() const;
};

enum class PathStatus { finite, diverged, failed };

struct PathResult {
    PathStatus status = PathStatus::failed;
    Vec endpoint;
    double final_residual = 0.0;
    int steps_taken = 0;
    // Largest accepted residual along the path, relative to 1 + |x|. Stays
    // tiny when the corrector is doing its job; blows up if correction is
    // effectively disabled.
    double max_step_residual = 0.0;
};

// Convex homotopy H(x, t) = gamma * t * S(x) + (1 - t) * F(x) from a start
// system S at t = 1 to the target F at t = 0.
struct Homotopy {
    const SystemEvaluator* start = nullptr;
    const SystemEvaluator* target = nullptr;
    Complex gamma{1.0, 0.0};

    int size() const { return target->size(); }
    void evaluate(const Vec& x, double t, Vec& h) const;
    // Also produces dH/dx and dH/dt = gamma * S(x) - F(x).
    void evaluate_full(const Vec& x, double t, Vec& h, Mat& jac, Vec& dt) const;
    // Largest summed term magnitude of H at (x, t); kEvaluationNoise times
    // this is the smallest residual double precision can resolve there.
    double evaluation_magnitude(const Vec& x, double t) const;
};

// Start system {x_i^{d_i} - 1} with d_i the target total degrees, plus all
// Bezout-many root-of-unity start points in mixed-radix order.
std::pair<SquareSystem, std::vector<Vec>> total_degree_start(const SquareSystem& target, Complex gamma);

// Track one path from t = 1 to t = 0 with an RK4 predictor and a Newton
// corrector. Divergence is declared inside the endgame window t <= 0.01 when
// the iterate magnitude passes infinity_threshold.
PathResult track_path(const Vec& start_point, const Homotopy& homotopy, const TrackerConfig& config);

}  // namespace mldeg
