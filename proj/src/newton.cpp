#include "mldeg/newton.hpp"

#include <cmath>

namespace mldeg {

namespace {

double inf_norm(const Vec& v) { return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>(); }

constexpr double kSingularRcond = 1e-12;

}  // namespace

NewtonResult newton_refine(const SystemEvaluator& system, const Vec& start, double tol, int max_iters) {
    NewtonResult result;
    result.point = start;
    Vec f;
    Mat jac;
    double prev_step = -1.0;
    int linear_streak = 0;
    bool singular_stop = false;

    for (int it = 0; it < max_iters; ++it) {
        system.evaluate_with_jacobian(result.point, f, jac);
        double res = inf_norm(f);
        if (!std::isfinite(res)) {
            result.residual = res;
            return result;
        }
        Eigen::PartialPivLU<Mat> lu(jac);
        double rc = lu.rcond();
        if (!(rc > kSingularRcond)) {
            singular_stop = true;
            break;
        }
        Vec dx = lu.solve(-f);
        double step = inf_norm(dx);
        if (!std::isfinite(step)) break;
        result.point += dx;
        result.iterations = it + 1;
        if (prev_step > 0.0 && step > 0.0) {
            double ratio = step / prev_step;
            if (ratio > 0.1 && ratio < 0.95)
                ++linear_streak;
            else
                linear_streak = 0;
            if (linear_streak >= 3) result.multiple_root = true;
        }
        prev_step = step;
        if (step <= tol * (1.0 + inf_norm(result.point))) {
            result.converged = true;
            break;
        }
    }

    system.evaluate(result.point, f);
    result.residual = inf_norm(f);
    if (singular_stop) result.multiple_root = true;
    return result;
}

NewtonResult newton_refine(const SquareSystem& system, const Vec& start, double tol, int max_iters) {
    return newton_refine(SystemEvaluator(system), start, tol, max_iters);
}

}  // namespace mldeg
