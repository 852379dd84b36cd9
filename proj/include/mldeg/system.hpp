#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "mldeg/polynomial.hpp"

namespace mldeg {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Multiplier on summed term magnitudes giving the roundoff floor below which
// an evaluated residual is indistinguishable from an exact zero in doubles.
inline constexpr double kEvaluationNoise = 1e-13;

// Square polynomial system: n equations in n unknowns, none identically zero.
struct SquareSystem {
    std::vector<CxPoly> equations;
    int size = 0;

    SquareSystem() = default;
    explicit SquareSystem(std::vector<CxPoly> eqs);

    // Product of total degrees; every equation has degree >= 1.
    long long bezout_count() const;

    // Largest coefficient magnitude, used to scale residual tolerances.
    double coefficient_scale() const;
};

// Fast repeated evaluation of a system and its Jacobian via flattened term
// lists and shared power tables. Stateless per call, safe to share.
class SystemEvaluator {
  public:
    explicit SystemEvaluator(const SquareSystem& system);

    int size() const { return n_; }
    double coefficient_scale() const { return scale_; }

    void evaluate(const Vec& x, Vec& f) const;
    void evaluate_with_jacobian(const Vec& x, Vec& f, Mat& jac) const;

    // f plus, per equation, the sum of absolute term values at x, which
    // scales the roundoff attainable in the computed f.
    void evaluate_with_magnitude(const Vec& x, Vec& f, Eigen::VectorXd& magnitude) const;

  private:
    struct CompiledPoly {
        std::vector<Complex> coeffs;
        std::vector<int> exps;  // nvars entries per term
    };

    CompiledPoly compile(const CxPoly& p) const;
    void fill_powers(const Vec& x, std::vector<Complex>& pw) const;
    Complex eval_compiled(const CompiledPoly& cp, const std::vector<Complex>& pw) const;

    int n_ = 0;
    double scale_ = 1.0;
    std::vector<int> pow_offset_;  // per-variable offset into the power table
    int table_size_ = 0;
    std::vector<int> max_exp_;
    std::vector<CompiledPoly> funcs_;
    std::vector<CompiledPoly> jac_;  // row-major n*n
};

}  // namespace mldeg
