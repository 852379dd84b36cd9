#include "mldeg/assemble.hpp"

#include <stdexcept>

namespace mldeg {

namespace {

std::vector<std::string> mu_names(int count) {
    std::vector<std::string> names;
    for (int j = 1; j <= count; ++j) names.push_back("mu" + std::to_string(j));
    return names;
}

void append_unique_factor(std::vector<CxPoly>& factors, const CxPoly& f) {
    for (const auto& g : factors)
        if (g == f) return;
    factors.push_back(f);
}

}  // namespace

std::vector<Complex> CriticalSystem::torus_point(const Vec& solution) const {
    if (solution.size() != system.size) throw std::invalid_argument("solution dimension mismatch");
    std::vector<Complex> params(static_cast<size_t>(parameter_block));
    for (int i = 0; i < parameter_block; ++i) params[static_cast<size_t>(i)] = solution[i];
    std::vector<Complex> out;
    out.reserve(coordinate_funs.size());
    for (const auto& q : coordinate_funs) out.push_back(q.evaluate(std::span<const Complex>(params)));
    return out;
}

CriticalSystem assemble_implicit(const TorusModel& model, const DataVector& data) {
    model.validate();
    if (model.form != ModelForm::implicit) throw std::invalid_argument("assemble_implicit needs an implicit model");
    int n = model.ambient_dim;
    int k = static_cast<int>(model.equations.size());
    if (static_cast<int>(data.lambda.size()) != n)
        throw std::invalid_argument("data dimension does not match ambient dimension");
    int total = n + k;

    std::vector<CxPoly> constraints_cx;
    std::vector<std::vector<CxPoly>> gradients;  // gradients[j][i] = df_j/dp_i
    for (const auto& f : model.equations) {
        CxPoly cf = to_complex_poly(f);
        std::vector<CxPoly> grad;
        for (int i = 0; i < n; ++i) grad.push_back(cf.differentiate(i).embed(total));
        gradients.push_back(std::move(grad));
        constraints_cx.push_back(cf.embed(total));
    }

    std::vector<CxPoly> equations;
    for (int i = 0; i < n; ++i) {
        CxPoly eq = CxPoly::constant(total, data.lambda[static_cast<size_t>(i)]);
        CxPoly pi = CxPoly::variable(total, i);
        for (int j = 0; j < k; ++j) {
            CxPoly mu = CxPoly::variable(total, n + j);
            eq -= mu * pi * gradients[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        equations.push_back(std::move(eq));
    }
    for (auto& f : constraints_cx) equations.push_back(std::move(f));

    CriticalSystem crit;
    crit.system = SquareSystem(std::move(equations));
    crit.data = data;
    crit.ambient_dim = n;
    crit.parameter_block = n;
    std::vector<std::string> names = model.coordinate_names();
    for (const auto& mu : mu_names(k)) names.push_back(mu);
    crit.unknown_names = std::move(names);
    for (int i = 0; i < n; ++i) {
        crit.spurious_factors.push_back(CxPoly::variable(total, i));
        crit.coordinate_funs.push_back(CxFun::variable(n, i));
    }
    return crit;
}

CriticalSystem assemble_parametrized(const TorusModel& model, const DataVector& data) {
    model.validate();
    if (model.form != ModelForm::parametrized)
        throw std::invalid_argument("assemble_parametrized needs a parametrized model");
    int n = model.ambient_dim;
    int s = model.parameter_count();
    int c = static_cast<int>(model.constraints.size());
    if (static_cast<int>(data.lambda.size()) != n)
        throw std::invalid_argument("data dimension does not match ambient dimension");
    int total = s + c;

    std::vector<CxFun> coords;
    coords.reserve(static_cast<size_t>(n));
    for (const auto& q : model.coordinates) coords.push_back(to_complex_fun(q));

    std::vector<CxPoly> constraints_cx;
    for (const auto& g : model.constraints) constraints_cx.push_back(to_complex_poly(g));

    std::vector<CxPoly> equations;
    std::vector<CxPoly> factors;  // in s variables, deduplicated
    for (int a = 0; a < s; ++a) {
        std::vector<CxFun> summands;
        for (int i = 0; i < n; ++i) {
            for (const auto& piece : log_derivative_summands(coords[static_cast<size_t>(i)], a)) {
                CxPoly scaled_num = piece.numerator().scaled(data.lambda[static_cast<size_t>(i)]);
                if (scaled_num.is_zero()) continue;
                summands.emplace_back(std::move(scaled_num), piece.denominator());
            }
        }
        if (summands.empty())
            throw std::invalid_argument("parameter " + model.parameter_names[static_cast<size_t>(a)] +
                                        " does not appear in any coordinate");
        ClearedSum<Complex> cleared = clear_denominators(std::span<const CxFun>(summands));
        for (const auto& f : cleared.spurious_factors) append_unique_factor(factors, f);

        CxPoly eq = cleared.numerator.embed(total);
        if (c > 0) {
            CxPoly multiplier = cleared.multiplier.embed(total);
            for (int j = 0; j < c; ++j) {
                CxPoly dg = constraints_cx[static_cast<size_t>(j)].differentiate(a).embed(total);
                if (dg.is_zero()) continue;
                eq -= multiplier * CxPoly::variable(total, s + j) * dg;
            }
        }
        if (eq.is_zero())
            throw std::invalid_argument("critical equation for parameter " +
                                        model.parameter_names[static_cast<size_t>(a)] + " vanished identically");
        equations.push_back(std::move(eq));
    }
    for (const auto& g : constraints_cx) equations.push_back(g.embed(total));

    CriticalSystem crit;
    crit.system = SquareSystem(std::move(equations));
    crit.data = data;
    crit.ambient_dim = n;
    crit.parameter_block = s;
    crit.unknown_names = model.parameter_names;
    for (const auto& mu : mu_names(c)) crit.unknown_names.push_back(mu);
    for (auto& f : factors) crit.spurious_factors.push_back(f.embed(total));
    crit.coordinate_funs = std::move(coords);
    return crit;
}

CriticalSystem assemble_critical_system(const TorusModel& model, const DataVector& data) {
    return model.form == ModelForm::implicit ? assemble_implicit(model, data)
                                             : assemble_parametrized(model, data);
}

}  // namespace mldeg
