#pragma once

#include <string>
#include <vector>

#include "mldeg/data.hpp"
#include "mldeg/model.hpp"
#include "mldeg/solve.hpp"

namespace mldeg {

// Square polynomial system whose torus-valid solutions are the critical
// points of sum_i lambda_i * log p_i on the model. Denominators cleared
// during assembly are kept as spurious factors: a solution where one of them
// vanishes lies off the torus (or off the chart) and must be discarded.
struct CriticalSystem {
    SquareSystem system;
    std::vector<std::string> unknown_names;
    std::vector<CxPoly> spurious_factors;
    DataVector data;

    // How the leading block of unknowns maps to torus coordinates.
    int ambient_dim = 0;
    int parameter_block = 0;  // unknowns [0, parameter_block) feed the coordinates
    std::vector<CxFun> coordinate_funs;  // n functions of the parameter block

    // Torus coordinates of a solution of `system`. Throws on a pole, which
    // only happens when a spurious factor vanishes at the point.
    std::vector<Complex> torus_point(const Vec& solution) const;
};

// Lagrange conditions for an implicit model: unknowns (p, mu), equations
//   lambda_i - sum_j mu_j * p_i * df_j/dp_i = 0   (i = 1..n)
//   f_j = 0                                       (j = 1..k)
CriticalSystem assemble_implicit(const TorusModel& model, const DataVector& data);

// Pullback conditions for a parametrized model: unknowns (t, mu), equations
// per parameter t_a: clear_denominators(sum_i lambda_i dlog q_i/dt_a)
//   minus the cleared multiplier times sum_j mu_j dg_j/dt_a, plus g_j = 0.
CriticalSystem assemble_parametrized(const TorusModel& model, const DataVector& data);

CriticalSystem assemble_critical_system(const TorusModel& model, const DataVector& data);

}  // namespace mldeg
