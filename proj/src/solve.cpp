#include "mldeg/solve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mldeg/data.hpp"

namespace mldeg {

namespace {

double point_distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

// Union-find single linkage.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

std::vector<std::vector<int>> cluster_indices(const std::vector<Vec>& points, double radius) {
    DisjointSets ds(points.size());
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (point_distance(points[i], points[j]) < radius) ds.unite(static_cast<int>(i), static_cast<int>(j));
    std::vector<std::vector<int>> groups;
    std::vector<int> root_to_group(points.size(), -1);
    for (size_t i = 0; i < points.size(); ++i) {
        int r = ds.find(static_cast<int>(i));
        if (root_to_group[static_cast<size_t>(r)] < 0) {
            root_to_group[static_cast<size_t>(r)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<size_t>(root_to_group[static_cast<size_t>(r)])].push_back(static_cast<int>(i));
    }
    return groups;
}

Vec group_mean(const std::vector<Vec>& points, const std::vector<int>& group) {
    Vec mean = Vec::Zero(points[static_cast<size_t>(group.front())].size());
    for (int idx : group) mean += points[static_cast<size_t>(idx)];
    return mean / static_cast<double>(group.size());
}

bool lex_before(const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

}  // namespace

std::vector<Vec> cluster_solutions(const std::vector<Vec>& points, double radius) {
    std::vector<Vec> means;
    for (const auto& group : cluster_indices(points, radius)) means.push_back(group_mean(points, group));
    return means;
}

SolutionSet solve_square(const SquareSystem& system, const TrackerConfig& config) {
    config.validate();
    SolutionSet result;
    result.bezout_count = system.bezout_count();

    std::mt19937_64 rng(config.seed);
    Complex gamma = std::polar(1.0, 2.0 * std::numbers::pi * canonical_double(rng));

    auto [start_system, start_points] = total_degree_start(system, gamma);
    SystemEvaluator start_eval(start_system);
    SystemEvaluator target_eval(system);
    Homotopy homotopy{&start_eval, &target_eval, gamma};

    std::vector<Vec> finite_points;
    for (const Vec& p : start_points) {
        PathResult path = track_path(p, homotopy, config);
        result.max_step_residual = std::max(result.max_step_residual, path.max_step_residual);
        switch (path.status) {
            case PathStatus::finite:
                ++result.paths.finite;
                finite_points.push_back(path.endpoint);
                break;
            case PathStatus::diverged:
                ++result.paths.diverged;
                break;
            case PathStatus::failed:
                ++result.paths.failed;
                break;
        }
    }

    // Cluster, refine each representative, then cluster the refined points
    // once more in case refinement pulled two groups together.
    auto groups = cluster_indices(finite_points, config.cluster_radius);
    std::vector<Vec> reps;
    std::vector<int> merged;
    std::vector<double> residuals;
    std::vector<bool> multiple;
    for (const auto& group : groups) {
        Vec mean = group_mean(finite_points, group);
        NewtonResult nr = newton_refine(target_eval, mean, config.endpoint_tol, 50);
        double scale = 1.0 + target_eval.coefficient_scale();
        bool usable = nr.point.allFinite();
        if (usable) {
            Vec f_at;
            Eigen::VectorXd fmag;
            target_eval.evaluate_with_magnitude(nr.point, f_at, fmag);
            double floor = kEvaluationNoise * (fmag.size() > 0 ? fmag.maxCoeff() : 0.0);
            usable = nr.residual <= config.endpoint_tol * scale + floor;
        }
        reps.push_back(usable ? nr.point : mean);
        merged.push_back(static_cast<int>(group.size()));
        residuals.push_back(usable ? nr.residual : 0.0);
        multiple.push_back(nr.multiple_root);
        if (!usable) {
            Vec f;
            target_eval.evaluate(mean, f);
            residuals.back() = f.lpNorm<Eigen::Infinity>();
        }
    }
    auto regroups = cluster_indices(reps, config.cluster_radius);
    for (const auto& group : regroups) {
        Solution s;
        s.point = reps[static_cast<size_t>(group.front())];
        s.paths_merged = 0;
        s.residual = 0.0;
        bool flagged = group.size() > 1;
        for (int idx : group) {
            s.paths_merged += merged[static_cast<size_t>(idx)];
            s.residual = std::max(s.residual, residuals[static_cast<size_t>(idx)]);
            if (merged[static_cast<size_t>(idx)] > 1 || multiple[static_cast<size_t>(idx)]) flagged = true;
        }
        s.flag = flagged ? MultiplicityFlag::clustered : MultiplicityFlag::simple;
        result.solutions.push_back(std::move(s));
    }

    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const Solution& a, const Solution& b) { return lex_before(a.point, b.point); });
    return result;
}

}  // namespace mldeg
