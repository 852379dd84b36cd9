#include "mldeg/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mldeg/newton.hpp"

namespace mldeg {

namespace {

constexpr int kMaxAttemptsPerDraw = 10;
constexpr int kGammaRetries = 3;
constexpr double kModulusBandLow = 1e-10;
constexpr double kModulusBandHigh = 1e10;
constexpr double kExcludedRadius = 1e-6;

struct DrawOutcome {
    bool valid = false;
    std::string note;
    int count = 0;
    PathAccounting paths;
    long long bezout = 0;
    int gamma_retries = 0;
    std::vector<std::vector<Complex>> torus_points;
    std::vector<Vec> unknowns;
};

bool modulus_in_band(const std::vector<Complex>& torus) {
    for (const Complex& z : torus) {
        double m = std::abs(z);
        if (!(m > kModulusBandLow) || !(m < kModulusBandHigh)) return false;
    }
    return true;
}

double excluded_distance(const Vec& solution, int parameter_block, const std::vector<Complex>& point) {
    double acc = 0.0;
    for (int i = 0; i < parameter_block; ++i) {
        Complex d = solution[i] - point[static_cast<size_t>(i)];
        acc += std::norm(d);
    }
    return std::sqrt(acc);
}

DrawOutcome run_draw(const TorusModel& model, const TrackerConfig& config, std::uint64_t data_seed) {
    DrawOutcome out;
    DataVector data = sample_generic_data(model.ambient_dim, data_seed);
    CriticalSystem crit = assemble_critical_system(model, data);

    // A nonzero constant equation is unsatisfiable: the critical locus is
    // empty for this data and the count is 0 (happens when the likelihood
    // form is degenerate on the model, e.g. coordinates with dependent logs).
    for (const CxPoly& eq : crit.system.equations) {
        if (eq.total_degree() == 0) {
            out.valid = true;
            out.count = 0;
            return out;
        }
    }

    SystemEvaluator crit_eval(crit.system);

    SolutionSet set;
    for (int attempt = 0; attempt <= kGammaRetries; ++attempt) {
        TrackerConfig tc = config;
        tc.seed = mix_seed(data_seed, 0xC0FFEEULL + static_cast<std::uint64_t>(attempt));
        set = solve_square(crit.system, tc);
        out.gamma_retries = attempt;
        if (set.paths.failed == 0) break;
    }
    out.paths = set.paths;
    out.bezout = set.bezout_count;
    if (set.paths.failed != 0) {
        out.note = "paths failed to track after gamma retries";
        return out;
    }

    for (const Solution& sol : set.solutions) {
        // Off-variety artifacts: a cleared denominator vanishes at the point.
        bool spurious = false;
        for (const CxPoly& f : crit.spurious_factors) {
            std::vector<Complex> xs(sol.point.data(), sol.point.data() + sol.point.size());
            if (std::abs(f.evaluate(std::span<const Complex>(xs))) < config.cluster_radius) {
                spurious = true;
                break;
            }
        }
        if (spurious) continue;

        Vec point = sol.point;
        std::vector<Complex> torus;
        try {
            torus = crit.torus_point(point);
        } catch (const std::domain_error&) {
            continue;  // exact pole: spurious by definition
        }
        if (!modulus_in_band(torus)) {
            // Suspect: re-verify by refinement before discarding.
            NewtonResult nr = newton_refine(crit_eval, point, config.endpoint_tol, 50);
            if (!nr.point.allFinite()) continue;
            point = nr.point;
            try {
                torus = crit.torus_point(point);
            } catch (const std::domain_error&) {
                continue;
            }
            if (!modulus_in_band(torus)) continue;
        }

        // A multiplicity flag on a genuine critical point means the data
        // vector failed to separate the critical locus: not usable.
        if (sol.flag == MultiplicityFlag::clustered) {
            out.note = "clustered critical point";
            return out;
        }
        for (const auto& excluded : model.excluded_points) {
            if (excluded_distance(point, crit.parameter_block, excluded) < kExcludedRadius) {
                out.note = "critical point at an excluded parameter point";
                return out;
            }
        }
        out.torus_points.push_back(std::move(torus));
        out.unknowns.push_back(std::move(point));
    }

    out.count = static_cast<int>(out.torus_points.size());
    out.valid = true;
    return out;
}

}  // namespace

MLReport ml_degree(const TorusModel& model, const TrackerConfig& config, int draws) {
    model.validate();
    config.validate();
    if (draws < 1) throw std::invalid_argument("draws must be >= 1");

    MLReport report;
    report.draws = draws;
    for (int slot = 0; slot < draws; ++slot) {
        DrawRecord rec;
        DrawOutcome outcome;
        for (int attempt = 0; attempt < kMaxAttemptsPerDraw; ++attempt) {
            std::uint64_t dseed =
                mix_seed(config.seed, static_cast<std::uint64_t>(slot + 1) * 1000003ULL +
                                          static_cast<std::uint64_t>(attempt));
            outcome = run_draw(model, config, dseed);
            rec.data_seed = dseed;
            rec.attempts = attempt + 1;
            rec.gamma_retries = outcome.gamma_retries;
            rec.paths = outcome.paths;
            rec.note = outcome.note;
            if (outcome.valid) {
                rec.valid = true;
                rec.count = outcome.count;
                break;
            }
        }
        report.total_redraws += rec.attempts - 1;
        report.bezout = outcome.bezout;
        if (rec.valid) {
            report.solutions = std::move(outcome.torus_points);
            report.solution_unknowns = std::move(outcome.unknowns);
        }
        report.draw_records.push_back(std::move(rec));
    }

    std::map<int, int> histogram;
    bool all_valid = true;
    for (const DrawRecord& rec : report.draw_records) {
        if (rec.valid)
            ++histogram[rec.count];
        else
            all_valid = false;
    }
    if (!histogram.empty()) {
        auto best = histogram.begin();
        for (auto it = histogram.begin(); it != histogram.end(); ++it)
            if (it->second > best->second) best = it;  // ties keep the smaller count
        report.count = best->first;
    }
    report.certified = all_valid && histogram.size() == 1;
    return report;
}

EulerReport euler_char_smooth(const TorusModel& model, const TrackerConfig& config, int draws) {
    EulerReport report;
    report.dimension = model.dimension();
    report.ml = ml_degree(model, config, draws);
    int sign = report.dimension % 2 == 0 ? 1 : -1;
    report.chi = sign * report.ml.count;
    return report;
}

}  // namespace mldeg
