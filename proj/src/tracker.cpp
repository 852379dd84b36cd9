#include "mldeg/tracker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mldeg {

namespace {

double inf_norm(const Vec& v) { return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>(); }

constexpr double kEndgameWindow = 0.01;   // t below this is endgame territory
constexpr double kEndgameJump = 1e-6;     // first direct endpoint attempt
constexpr double kEndgameFloor = 1e-80;   // give up shrinking t here
constexpr int kMaxSteps = 200000;
constexpr int kMaxEndgameFails = 60;
constexpr int kEndpointIters = 50;
constexpr double kSingularRcond = 1e-13;
constexpr double kJumpTrustRadius = 1e-2;
constexpr double kGrowthPerHalving = 1.02;  // minimum magnitude ratio that counts as growth
constexpr int kGrowthStreakLimit = 8;       // halvings of sustained growth read as divergence
constexpr double kGrowthMagFloor = 10.0;

}  // namespace

void TrackerConfig::validate() const {
    if (!(step_min > 0.0) || !(step_max > step_min) || !(step_max <= 1.0))
        throw std::invalid_argument("tracker steps must satisfy 0 < step_min < step_max <= 1");
    if (!(corrector_tol > 0.0) || !(endpoint_tol > 0.0))
        throw std::invalid_argument("tracker tolerances must be positive");
    if (corrector_max_iters < 1) throw std::invalid_argument("corrector_max_iters must be >= 1");
    if (!(infinity_threshold > 1.0)) throw std::invalid_argument("infinity_threshold must exceed 1");
    if (!(cluster_radius > 0.0)) throw std::invalid_argument("cluster_radius must be positive");
}

void Homotopy::evaluate(const Vec& x, double t, Vec& h) const {
    Vec fs, ft;
    start->evaluate(x, fs);
    target->evaluate(x, ft);
    h = gamma * t * fs + (1.0 - t) * ft;
}

void Homotopy::evaluate_full(const Vec& x, double t, Vec& h, Mat& jac, Vec& dt) const {
    Vec fs, ft;
    Mat js, jt;
    start->evaluate_with_jacobian(x, fs, js);
    target->evaluate_with_jacobian(x, ft, jt);
    Complex ct(gamma * t);
    h = ct * fs + (1.0 - t) * ft;
    jac = ct * js + (1.0 - t) * jt;
    dt = gamma * fs - ft;
}

double Homotopy::evaluation_magnitude(const Vec& x, double t) const {
    Vec fs, ft;
    Eigen::VectorXd ms, mt;
    start->evaluate_with_magnitude(x, fs, ms);
    target->evaluate_with_magnitude(x, ft, mt);
    double m = 0.0;
    for (Eigen::Index i = 0; i < ms.size(); ++i)
        m = std::max(m, std::abs(gamma) * t * ms[i] + (1.0 - t) * mt[i]);
    return m;
}

std::pair<SquareSystem, std::vector<Vec>> total_degree_start(const SquareSystem& target, Complex gamma) {
    if (gamma == Complex(0.0, 0.0)) throw std::invalid_argument("gamma must be nonzero");
    int n = target.size;
    std::vector<int> degrees(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        degrees[static_cast<size_t>(i)] = target.equations[static_cast<size_t>(i)].total_degree();
        if (degrees[static_cast<size_t>(i)] < 1)
            throw std::invalid_argument("total-degree start requires every equation to have degree >= 1");
    }

    std::vector<CxPoly> eqs;
    eqs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        CxPoly p(n);
        p.add_term(Monomial::variable(i, degrees[static_cast<size_t>(i)]), Complex(1.0, 0.0));
        p.add_term(Monomial::one(), Complex(-1.0, 0.0));
        eqs.push_back(std::move(p));
    }

    std::vector<Vec> points;
    points.reserve(static_cast<size_t>(target.bezout_count()));
    std::vector<int> index(static_cast<size_t>(n), 0);
    for (;;) {
        Vec p(n);
        for (int i = 0; i < n; ++i) {
            double angle = 2.0 * std::numbers::pi * index[static_cast<size_t>(i)] / degrees[static_cast<size_t>(i)];
            p[i] = Complex(std::cos(angle), std::sin(angle));
        }
        points.push_back(std::move(p));
        int carry = n - 1;
        while (carry >= 0) {
            if (++index[static_cast<size_t>(carry)] < degrees[static_cast<size_t>(carry)]) break;
            index[static_cast<size_t>(carry)] = 0;
            --carry;
        }
        if (carry < 0) break;
    }
    return {SquareSystem(std::move(eqs)), std::move(points)};
}

namespace {

// One RK4 step of x' = -(dH/dx)^{-1} dH/dt from t to t - dt. Fails when a
// stage Jacobian is numerically singular or a value is nonfinite.
bool rk4_predict(const Homotopy& hom, const Vec& x, double t, double dt, Vec& out) {
    Vec h, dtv;
    Mat jac;
    auto velocity = [&](const Vec& xi, double ti, Vec& v) -> bool {
        if (!xi.allFinite()) return false;
        hom.evaluate_full(xi, ti, h, jac, dtv);
        Eigen::PartialPivLU<Mat> lu(jac);
        if (!(lu.rcond() > kSingularRcond)) return false;
        v = lu.solve(-dtv);
        return v.allFinite();
    };
    Vec k1, k2, k3, k4;
    if (!velocity(x, t, k1)) return false;
    if (!velocity(x - (dt / 2.0) * k1, t - dt / 2.0, k2)) return false;
    if (!velocity(x - (dt / 2.0) * k2, t - dt / 2.0, k3)) return false;
    if (!velocity(x - dt * k3, t - dt, k4)) return false;
    out = x - (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    return out.allFinite();
}

// Newton correction on H(., t), accepted once the residual falls below
// corrector_tol * (1 + |x|) or below the roundoff floor of the evaluation,
// whichever is larger; far from the origin the floor is what decides, since
// no double-precision evaluation can do better there. An absurdly loose
// tolerance accepts immediately and predictor drift goes uncorrected, which
// max_step_residual bookkeeping exposes.
bool correct(const Homotopy& hom, double t, const TrackerConfig& cfg, Vec& x, double& accepted_rel_residual) {
    Vec h, dtv;
    Mat jac;
    double noise = kEvaluationNoise * hom.evaluation_magnitude(x, t);
    for (int it = 0; it <= cfg.corrector_max_iters; ++it) {
        hom.evaluate_full(x, t, h, jac, dtv);
        double res = inf_norm(h);
        if (!std::isfinite(res)) return false;
        double rel = res / (1.0 + inf_norm(x));
        if (rel <= cfg.corrector_tol || res <= noise) {
            accepted_rel_residual = rel;
            return true;
        }
        if (it == cfg.corrector_max_iters) return false;
        Eigen::PartialPivLU<Mat> lu(jac);
        if (!(lu.rcond() > kSingularRcond)) return false;
        Vec dx = lu.solve(-h);
        if (!dx.allFinite()) return false;
        x += dx;
    }
    return false;
}

struct PathState {
    Vec x;
    double t = 1.0;
    double step = 0.0;
    int steps = 0;
    int streak = 0;
    double max_step_residual = 0.0;
    double growth_ref_t = 1.0;
    double growth_ref_mag = -1.0;
    int growth_streak = 0;
};

// Magnitude bookkeeping across halvings of t. A path heading to infinity
// gains magnitude at a steady per-halving rate (a power law |x| ~ t^-w),
// while a path with a finite limit flattens out and resets the streak. The
// per-halving ratio is small enough to catch slowly escaping branches and
// the streak long enough that no regular approach to a finite endpoint can
// sustain it.
void note_growth(PathState& st) {
    double mag = inf_norm(st.x);
    if (!std::isfinite(mag)) return;
    if (st.growth_ref_mag < 0.0) {
        st.growth_ref_t = st.t;
        st.growth_ref_mag = mag;
        return;
    }
    if (!(st.t <= 0.5 * st.growth_ref_t)) return;
    double halvings = std::log2(st.growth_ref_t / std::max(st.t, 1e-300));
    if (mag >= st.growth_ref_mag * std::pow(kGrowthPerHalving, halvings))
        st.growth_streak += static_cast<int>(halvings);
    else
        st.growth_streak = 0;
    st.growth_ref_t = st.t;
    st.growth_ref_mag = mag;
}

// Divergence call for paths whose tracking dies far out: the Jacobian turns
// numerically singular along an escaping branch well before the magnitude
// itself crosses the infinity threshold, so the sustained-growth record is
// what separates those from recoverable stalls.
bool diverging_by_growth(const PathState& st) {
    return st.growth_streak >= kGrowthStreakLimit && inf_norm(st.x) >= kGrowthMagFloor;
}

PathResult make_result(PathStatus status, const Vec& x, double residual, const PathState& st) {
    PathResult r;
    r.status = status;
    r.endpoint = x;
    r.final_residual = residual;
    r.steps_taken = st.steps;
    r.max_step_residual = st.max_step_residual;
    return r;
}

// Endpoint resolution against the target system. Divergence is recognized
// before refinement, since Newton from a blown-up point can wander back into
// moderate range and erase the evidence.
PathResult finish_at_target(const Homotopy& hom, const TrackerConfig& cfg, const PathState& st,
                            double endgame_entry_mag, bool* accepted) {
    double pre = inf_norm(st.x);
    if (accepted) *accepted = true;
    if (!std::isfinite(pre) || pre > cfg.infinity_threshold)
        return make_result(PathStatus::diverged, st.x, 0.0, st);
    if (pre > 1e4 && pre >= 100.0 * (1.0 + endgame_entry_mag))
        return make_result(PathStatus::diverged, st.x, 0.0, st);

    NewtonResult nr = newton_refine(*hom.target, st.x, cfg.endpoint_tol, kEndpointIters);
    double mag = inf_norm(nr.point);
    double scale = 1.0 + hom.target->coefficient_scale();
    // The refinement must stay near the tracked point. A path still far from
    // its limit can otherwise be pulled into the basin of an unrelated root
    // and certified there with a perfect residual; rejecting the long jump
    // keeps the endgame shrinking t until the path either settles or blows up.
    double moved = inf_norm(nr.point - st.x);
    // Certify against an absolute tolerance plus the evaluation roundoff
    // floor at the refined point. Scaling the tolerance with the point's
    // magnitude instead would pass near-solutions that sit on an asymptotic
    // branch far out, where a genuine zero would have a far smaller residual.
    double floor = 0.0;
    if (nr.point.allFinite()) {
        Vec ft;
        Eigen::VectorXd fmag;
        hom.target->evaluate_with_magnitude(nr.point, ft, fmag);
        floor = kEvaluationNoise * (fmag.size() > 0 ? fmag.maxCoeff() : 0.0);
    }
    if (std::isfinite(mag) && mag <= cfg.infinity_threshold &&
        moved <= kJumpTrustRadius * (1.0 + pre) &&
        nr.residual <= cfg.endpoint_tol * scale + floor)
        return make_result(PathStatus::finite, nr.point, nr.residual, st);
    if (!std::isfinite(mag) || mag > cfg.infinity_threshold)
        return make_result(PathStatus::diverged, st.x, nr.residual, st);
    if (accepted) *accepted = false;
    return make_result(PathStatus::failed, st.x, nr.residual, st);
}

}  // namespace

PathResult track_path(const Vec& start_point, const Homotopy& homotopy, const TrackerConfig& config) {
    config.validate();
    PathState st;
    st.x = start_point;
    st.t = 1.0;
    st.step = config.step_max;

    // Main phase: adaptive stepping down to the endgame window.
    while (st.t > kEndgameWindow + config.step_min) {
        if (st.steps >= kMaxSteps) return make_result(PathStatus::failed, st.x, 0.0, st);
        double dt = std::min(st.step, st.t - kEndgameWindow);
        Vec predicted;
        double accepted_rel = 0.0;
        bool ok = rk4_predict(homotopy, st.x, st.t, dt, predicted) &&
                  correct(homotopy, st.t - dt, config, predicted, accepted_rel);
        if (!ok) {
            st.step = dt / 2.0;
            st.streak = 0;
            if (st.step < config.step_min) return make_result(PathStatus::failed, st.x, 0.0, st);
            continue;
        }
        st.x = predicted;
        st.t -= dt;
        ++st.steps;
        st.max_step_residual = std::max(st.max_step_residual, accepted_rel);
        note_growth(st);
        if (++st.streak >= 4) {
            st.step = std::min(st.step * 1.5, config.step_max);
            st.streak = 0;
        }
        double mag = inf_norm(st.x);
        if (!std::isfinite(mag) || mag > 100.0 * config.infinity_threshold)
            return make_result(PathStatus::diverged, st.x, 0.0, st);
    }

    // Endgame: halve t geometrically, watching for blowup past the infinity
    // threshold, and periodically attempt a direct jump to the target once
    // t is small enough for the endpoint to sit in its Newton basin.
    double entry_mag = inf_norm(st.x);
    int fails = 0;
    double next_jump = kEndgameJump;
    while (true) {
        double mag = inf_norm(st.x);
        if (!std::isfinite(mag) || mag > config.infinity_threshold)
            return make_result(PathStatus::diverged, st.x, 0.0, st);
        if (st.t <= kEndgameFloor || fails >= kMaxEndgameFails || st.steps >= kMaxSteps) {
            if (diverging_by_growth(st)) return make_result(PathStatus::diverged, st.x, 0.0, st);
            return finish_at_target(homotopy, config, st, entry_mag, nullptr);
        }
        if (st.t <= next_jump) {
            // A path on a sustained growth streak is not jumped: Newton from
            // a point on an escaping branch sits on a near-singular Jacobian
            // and can wander anywhere, so let it keep shrinking t instead.
            if (!diverging_by_growth(st)) {
                bool accepted = false;
                PathResult r = finish_at_target(homotopy, config, st, entry_mag, &accepted);
                if (accepted) return r;
            }
            next_jump = std::max(st.t * 1e-6, kEndgameFloor);  // retry a few decades later
        }
        double dt = std::min(st.step, st.t / 2.0);
        Vec predicted;
        double accepted_rel = 0.0;
        bool ok = rk4_predict(homotopy, st.x, st.t, dt, predicted) &&
                  correct(homotopy, st.t - dt, config, predicted, accepted_rel);
        if (!ok) {
            st.step = dt / 2.0;
            st.streak = 0;
            ++fails;
            continue;
        }
        st.x = predicted;
        st.t -= dt;
        ++st.steps;
        st.max_step_residual = std::max(st.max_step_residual, accepted_rel);
        note_growth(st);
        if (++st.streak >= 4) {
            st.step = std::min(st.step * 1.5, config.step_max);
            st.streak = 0;
        }
    }
}

}  // namespace mldeg
