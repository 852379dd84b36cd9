#pragma once

#include <vector>

#include "mldeg/tracker.hpp"

namespace mldeg {

enum class MultiplicityFlag { simple, clustered };

struct Solution {
    Vec point;
    MultiplicityFlag flag = MultiplicityFlag::simple;
    int paths_merged = 1;
    double residual = 0.0;
};

struct PathAccounting {
    long long finite = 0;
    long long diverged = 0;
    long long failed = 0;

    long long total() const { return finite + diverged + failed; }
};

struct SolutionSet {
    std::vector<Solution> solutions;
    long long bezout_count = 0;
    PathAccounting paths;
    // Largest relative residual the corrector ever accepted on any path; a
    // healthy run keeps this near corrector_tol, and a corrupted tolerance
    // shows up here as drift the endpoints alone would hide.
    double max_step_residual = 0.0;

    bool fully_tracked() const { return paths.failed == 0 && paths.total() == bezout_count; }
};

// Single-linkage clustering of points at the given radius; returns the
// cluster means. Distances are Euclidean over all real/imaginary parts.
std::vector<Vec> cluster_solutions(const std::vector<Vec>& points, double radius);

// Solve a square system by a total-degree homotopy. gamma is sampled on the
// unit circle from config.seed, every Bezout path is tracked, finite
// endpoints are clustered at config.cluster_radius and re-refined, and the
// result is sorted canonically (lexicographic by real then imaginary parts).
SolutionSet solve_square(const SquareSystem& system, const TrackerConfig& config);

}  // namespace mldeg
