#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mldeg/rational_function.hpp"

namespace mldeg {

enum class ModelForm { implicit, parametrized };

// A very affine variety inside the torus (C*)^n, given either implicitly by
// polynomial equations in the coordinates p1..pn, or as the image of a
// rational map q = (q1..qn) on parameters restricted to a constraint locus.
struct TorusModel {
    int ambient_dim = 0;  // n
    ModelForm form = ModelForm::implicit;

    // Implicit form: equations in p1..pn cutting out the variety.
    std::vector<RatPoly> equations;

    // Parametrized form: coordinate functions of the parameters, constraints
    // among the parameters, and parameter points whose images must be
    // avoided when counting critical points (typically preimages of singular
    // image points).
    std::vector<std::string> parameter_names;
    std::vector<RatFun> coordinates;
    std::vector<RatPoly> constraints;
    std::vector<std::vector<Complex>> excluded_points;

    static TorusModel implicit_model(int n, std::vector<RatPoly> equations);
    static TorusModel parametrized_model(int n, std::vector<std::string> parameter_names,
                                         std::vector<RatFun> coordinates, std::vector<RatPoly> constraints,
                                         std::vector<std::vector<Complex>> excluded_points = {});

    int parameter_count() const { return static_cast<int>(parameter_names.size()); }
    int constraint_count() const {
        return static_cast<int>(form == ModelForm::implicit ? equations.size() : constraints.size());
    }

    // Expected dimension of the variety.
    int dimension() const;

    // Throws std::invalid_argument when the shape contracts are violated.
    void validate() const;

    std::vector<std::string> coordinate_names() const;

    static TorusModel from_json(const nlohmann::json& spec);
    nlohmann::json to_json() const;
};

TorusModel load_model_file(const std::string& path);

}  // namespace mldeg
