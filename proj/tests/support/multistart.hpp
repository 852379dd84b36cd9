#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "mldeg/data.hpp"
#include "mldeg/newton.hpp"
#include "mldeg/solve.hpp"

namespace mldeg::testing {

inline bool lex_point_before(const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

// Independent root finder used to validate the homotopy solver: plain Newton
// from many random starts in a polydisk, deduplicated. Shares nothing with
// the continuation logic beyond polynomial evaluation.
inline std::vector<Vec> multistart_roots(const SquareSystem& system, int attempts, double radius,
                                         std::uint64_t seed) {
    SystemEvaluator eval(system);
    double scale = 1.0 + eval.coefficient_scale();
    std::mt19937_64 rng(seed);
    std::vector<Vec> found;
    for (int a = 0; a < attempts; ++a) {
        Vec x0(system.size);
        for (int i = 0; i < system.size; ++i) {
            double r = radius * std::sqrt(canonical_double(rng));
            double angle = 6.283185307179586 * canonical_double(rng);
            x0[i] = std::polar(r, angle);
        }
        NewtonResult nr = newton_refine(eval, x0, 1e-13, 80);
        if (!nr.point.allFinite()) continue;
        double mag = nr.point.lpNorm<Eigen::Infinity>();
        if (mag > 1e8) continue;
        if (nr.residual > 1e-10 * scale * (1.0 + mag)) continue;
        bool known = false;
        for (const Vec& p : found) {
            if ((p - nr.point).norm() < 1e-6) {
                known = true;
                break;
            }
        }
        if (!known) found.push_back(nr.point);
    }
    std::sort(found.begin(), found.end(), lex_point_before);
    return found;
}

// True when every point of a has a match in b within tol and vice versa.
inline bool same_point_sets(const std::vector<Vec>& a, const std::vector<Vec>& b, double tol) {
    auto covered = [tol](const std::vector<Vec>& from, const std::vector<Vec>& in) {
        for (const Vec& p : from) {
            bool hit = false;
            for (const Vec& q : in) {
                if ((p - q).norm() < tol) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

}  // namespace mldeg::testing
