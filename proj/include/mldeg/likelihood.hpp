#pragma once

#include <string>
#include <vector>

#include "mldeg/assemble.hpp"

namespace mldeg {

struct DrawRecord {
    std::uint64_t data_seed = 0;
    bool valid = false;
    int count = -1;            // critical points counted; -1 when the draw never validated
    std::string note;          // reason the final attempt was rejected, empty when valid
    int attempts = 0;          // data draws consumed by this slot
    int gamma_retries = 0;
    PathAccounting paths;
};

struct MLReport {
    int count = 0;           // agreed count across draws (mode of the valid draws)
    bool certified = false;  // every draw valid and all counts identical
    int draws = 0;
    long long bezout = 0;
    int total_redraws = 0;
    std::vector<DrawRecord> draw_records;
    // Critical points of the last valid draw: torus coordinates and the
    // underlying unknown-space points, in canonical solver order.
    std::vector<std::vector<Complex>> solutions;
    std::vector<Vec> solution_unknowns;
};

// Count critical points of sum_i lambda_i log p_i on the model for `draws`
// independent generic data vectors. A draw is rejected and redrawn when any
// path fails after gamma retries, when a surviving critical point is flagged
// as clustered, or when one lands within 1e-6 of an excluded point; spurious
// solutions (vanishing cleared denominator, coordinates outside the modulus
// band (1e-10, 1e10)) are filtered out rather than rejected.
MLReport ml_degree(const TorusModel& model, const TrackerConfig& config, int draws);

struct EulerReport {
    int dimension = 0;
    int chi = 0;
    MLReport ml;
};

// Signed Euler characteristic via the critical point count:
// chi(X) = (-1)^dim MLdeg(X) for a smooth very affine X. The smoothness of
// the model is the caller's responsibility.
EulerReport euler_char_smooth(const TorusModel& model, const TrackerConfig& config, int draws);

}  // namespace mldeg
