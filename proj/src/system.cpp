#include "mldeg/system.hpp"

#include <stdexcept>

namespace mldeg {

SquareSystem::SquareSystem(std::vector<CxPoly> eqs) : equations(std::move(eqs)) {
    if (equations.empty()) throw std::invalid_argument("empty system");
    size = static_cast<int>(equations.size());
    for (const auto& eq : equations) {
        if (eq.variable_count() != size)
            throw std::invalid_argument("system is not square: equation/unknown count mismatch");
        if (eq.is_zero()) throw std::invalid_argument("system contains an identically zero equation");
    }
}

long long SquareSystem::bezout_count() const {
    long long b = 1;
    for (const auto& eq : equations) {
        int d = eq.total_degree();
        if (d < 1) throw std::invalid_argument("bezout count requires every equation to have degree >= 1");
        b *= d;
    }
    return b;
}

double SquareSystem::coefficient_scale() const {
    double s = 0.0;
    for (const auto& eq : equations)
        for (const auto& [mono, c] : eq.terms()) s = std::max(s, std::abs(c));
    return s;
}

SystemEvaluator::SystemEvaluator(const SquareSystem& system) : n_(system.size) {
    scale_ = system.coefficient_scale();
    max_exp_.assign(n_, 0);
    std::vector<CxPoly> jac_polys;
    jac_polys.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& eq : system.equations) {
        for (int v = 0; v < n_; ++v) {
            max_exp_[v] = std::max(max_exp_[v], eq.max_exponent(v));
            jac_polys.push_back(eq.differentiate(v));
        }
    }
    pow_offset_.assign(n_, 0);
    table_size_ = 0;
    for (int v = 0; v < n_; ++v) {
        pow_offset_[v] = table_size_;
        table_size_ += max_exp_[v] + 1;
    }
    funcs_.reserve(system.equations.size());
    for (const auto& eq : system.equations) funcs_.push_back(compile(eq));
    jac_.reserve(jac_polys.size());
    for (const auto& d : jac_polys) jac_.push_back(compile(d));
}

SystemEvaluator::CompiledPoly SystemEvaluator::compile(const CxPoly& p) const {
    CompiledPoly cp;
    cp.coeffs.reserve(p.terms().size());
    cp.exps.reserve(p.terms().size() * static_cast<size_t>(n_));
    for (const auto& [mono, c] : p.terms()) {
        cp.coeffs.push_back(c);
        for (int v = 0; v < n_; ++v) cp.exps.push_back(mono.exponent(static_cast<size_t>(v)));
    }
    return cp;
}

void SystemEvaluator::fill_powers(const Vec& x, std::vector<Complex>& pw) const {
    pw.resize(static_cast<size_t>(table_size_));
    for (int v = 0; v < n_; ++v) {
        Complex* base = pw.data() + pow_offset_[v];
        base[0] = Complex(1.0, 0.0);
        for (int e = 1; e <= max_exp_[v]; ++e) base[e] = base[e - 1] * x[v];
    }
}

Complex SystemEvaluator::eval_compiled(const CompiledPoly& cp, const std::vector<Complex>& pw) const {
    Complex acc(0.0, 0.0);
    const int* exps = cp.exps.data();
    for (size_t t = 0; t < cp.coeffs.size(); ++t, exps += n_) {
        Complex term = cp.coeffs[t];
        for (int v = 0; v < n_; ++v) {
            int e = exps[v];
            if (e != 0) term *= pw[static_cast<size_t>(pow_offset_[v] + e)];
        }
        acc += term;
    }
    return acc;
}

void SystemEvaluator::evaluate(const Vec& x, Vec& f) const {
    std::vector<Complex> pw;
    fill_powers(x, pw);
    f.resize(n_);
    for (int i = 0; i < n_; ++i) f[i] = eval_compiled(funcs_[static_cast<size_t>(i)], pw);
}

void SystemEvaluator::evaluate_with_magnitude(const Vec& x, Vec& f, Eigen::VectorXd& magnitude) const {
    std::vector<Complex> pw;
    fill_powers(x, pw);
    std::vector<double> apw(pw.size());
    for (size_t i = 0; i < pw.size(); ++i) apw[i] = std::abs(pw[i]);
    f.resize(n_);
    magnitude.resize(n_);
    for (int i = 0; i < n_; ++i) {
        const CompiledPoly& cp = funcs_[static_cast<size_t>(i)];
        Complex acc(0.0, 0.0);
        double mag = 0.0;
        const int* exps = cp.exps.data();
        for (size_t t = 0; t < cp.coeffs.size(); ++t, exps += n_) {
            Complex term = cp.coeffs[t];
            double aterm = std::abs(cp.coeffs[t]);
            for (int v = 0; v < n_; ++v) {
                int e = exps[v];
                if (e != 0) {
                    term *= pw[static_cast<size_t>(pow_offset_[v] + e)];
                    aterm *= apw[static_cast<size_t>(pow_offset_[v] + e)];
                }
            }
            acc += term;
            mag += aterm;
        }
        f[i] = acc;
        magnitude[i] = mag;
    }
}

void SystemEvaluator::evaluate_with_jacobian(const Vec& x, Vec& f, Mat& jac) const {
    std::vector<Complex> pw;
    fill_powers(x, pw);
    f.resize(n_);
    jac.resize(n_, n_);
    for (int i = 0; i < n_; ++i) {
        f[i] = eval_compiled(funcs_[static_cast<size_t>(i)], pw);
        for (int v = 0; v < n_; ++v)
            jac(i, v) = eval_compiled(jac_[static_cast<size_t>(i * n_ + v)], pw);
    }
}

}  // namespace mldeg
