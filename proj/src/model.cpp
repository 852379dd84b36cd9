#include "mldeg/model.hpp"

#include <fstream>
#include <stdexcept>

#include "mldeg/parser.hpp"

namespace mldeg {

namespace {

std::vector<std::string> numbered_names(const std::string& stem, int count) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(count));
    for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex values must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

nlohmann::json complex_to_json(const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

TorusModel TorusModel::implicit_model(int n, std::vector<RatPoly> equations) {
    TorusModel m;
    m.ambient_dim = n;
    m.form = ModelForm::implicit;
    m.equations = std::move(equations);
    m.validate();
    return m;
}

TorusModel TorusModel::parametrized_model(int n, std::vector<std::string> parameter_names,
                                          std::vector<RatFun> coordinates, std::vector<RatPoly> constraints,
                                          std::vector<std::vector<Complex>> excluded_points) {
    TorusModel m;
    m.ambient_dim = n;
    m.form = ModelForm::parametrized;
    m.parameter_names = std::move(parameter_names);
    m.coordinates = std::move(coordinates);
    m.constraints = std::move(constraints);
    m.excluded_points = std::move(excluded_points);
    m.validate();
    return m;
}

int TorusModel::dimension() const {
    if (form == ModelForm::implicit) return ambient_dim - static_cast<int>(equations.size());
    return parameter_count() - static_cast<int>(constraints.size());
}

void TorusModel::validate() const {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (form == ModelForm::implicit) {
        if (equations.empty()) throw std::invalid_argument("implicit model needs at least one equation");
        if (static_cast<int>(equations.size()) > ambient_dim)
            throw std::invalid_argument("implicit model has more equations than coordinates");
        for (const auto& eq : equations) {
            if (eq.variable_count() != ambient_dim)
                throw std::invalid_argument("equation variable count does not match ambient dimension");
            if (eq.is_zero()) throw std::invalid_argument("identically zero equation");
        }
        if (!parameter_names.empty() || !coordinates.empty() || !constraints.empty() || !excluded_points.empty())
            throw std::invalid_argument("implicit model carries parametrized fields");
        return;
    }
    int s = parameter_count();
    if (s < 1) throw std::invalid_argument("parametrized model needs at least one parameter");
    if (static_cast<int>(coordinates.size()) != ambient_dim)
        throw std::invalid_argument("coordinate count does not match ambient dimension");
    for (const auto& q : coordinates) {
        if (q.variable_count() != s)
            throw std::invalid_argument("coordinate variable count does not match parameter count");
        if (q.is_zero()) throw std::invalid_argument("identically zero coordinate function");
    }
    if (static_cast<int>(constraints.size()) > s)
        throw std::invalid_argument("more constraints than parameters");
    for (const auto& g : constraints) {
        if (g.variable_count() != s)
            throw std::invalid_argument("constraint variable count does not match parameter count");
        if (g.is_zero()) throw std::invalid_argument("identically zero constraint");
    }
    for (const auto& pt : excluded_points)
        if (static_cast<int>(pt.size()) != s)
            throw std::invalid_argument("excluded point dimension does not match parameter count");
    if (!equations.empty()) throw std::invalid_argument("parametrized model carries implicit equations");
}

std::vector<std::string> TorusModel::coordinate_names() const { return numbered_names("p", ambient_dim); }

TorusModel TorusModel::from_json(const nlohmann::json& spec) {
    if (!spec.is_object()) throw std::invalid_argument("model description must be a JSON object");
    if (!spec.contains("n") || !spec["n"].is_number_integer())
        throw std::invalid_argument("model needs an integer field 'n'");
    int n = spec["n"].get<int>();
    std::string form = spec.value("form", std::string());
    TorusModel m;
    m.ambient_dim = n;
    if (form == "implicit") {
        m.form = ModelForm::implicit;
        if (!spec.contains("equations") || !spec["equations"].is_array() || spec["equations"].empty())
            throw std::invalid_argument("implicit model needs a nonempty 'equations' array");
        std::vector<std::string> names = numbered_names("p", n);
        for (const auto& text : spec["equations"]) {
            if (!text.is_string()) throw std::invalid_argument("'equations' entries must be strings");
            m.equations.push_back(parse_polynomial(text.get<std::string>(), names));
        }
    } else if (form == "parametrized") {
        m.form = ModelForm::parametrized;
        if (!spec.contains("params") || !spec["params"].is_array() || spec["params"].empty())
            throw std::invalid_argument("parametrized model needs a nonempty 'params' array");
        for (const auto& name : spec["params"]) {
            if (!name.is_string()) throw std::invalid_argument("'params' entries must be strings");
            m.parameter_names.push_back(name.get<std::string>());
        }
        if (!spec.contains("coords") || !spec["coords"].is_array())
            throw std::invalid_argument("parametrized model needs a 'coords' array");
        for (const auto& text : spec["coords"]) {
            if (!text.is_string()) throw std::invalid_argument("'coords' entries must be strings");
            m.coordinates.push_back(parse_rational_function(text.get<std::string>(), m.parameter_names));
        }
        if (spec.contains("constraints")) {
            for (const auto& text : spec["constraints"]) {
                if (!text.is_string()) throw std::invalid_argument("'constraints' entries must be strings");
                m.constraints.push_back(parse_polynomial(text.get<std::string>(), m.parameter_names));
            }
        }
        if (spec.contains("excluded_points")) {
            for (const auto& pt : spec["excluded_points"]) {
                if (!pt.is_array()) throw std::invalid_argument("'excluded_points' entries must be arrays");
                std::vector<Complex> point;
                for (const auto& z : pt) point.push_back(complex_from_json(z));
                m.excluded_points.push_back(std::move(point));
            }
        }
    } else {
        throw std::invalid_argument("model field 'form' must be \"implicit\" or \"parametrized\"");
    }
    m.validate();
    return m;
}

nlohmann::json TorusModel::to_json() const {
    nlohmann::json j;
    j["n"] = ambient_dim;
    if (form == ModelForm::implicit) {
        j["form"] = "implicit";
        std::vector<std::string> names = coordinate_names();
        auto eqs = nlohmann::json::array();
        for (const auto& eq : equations) eqs.push_back(eq.to_string(names));
        j["equations"] = eqs;
        return j;
    }
    j["form"] = "parametrized";
    j["params"] = parameter_names;
    auto coords = nlohmann::json::array();
    for (const auto& q : coordinates) coords.push_back(q.to_string(parameter_names));
    j["coords"] = coords;
    auto cons = nlohmann::json::array();
    for (const auto& g : constraints) cons.push_back(g.to_string(parameter_names));
    j["constraints"] = cons;
    auto excluded = nlohmann::json::array();
    for (const auto& pt : excluded_points) {
        auto point = nlohmann::json::array();
        for (const auto& z : pt) point.push_back(complex_to_json(z));
        excluded.push_back(point);
    }
    j["excluded_points"] = excluded;
    return j;
}

TorusModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file: " + path);
    nlohmann::json spec;
    try {
        spec = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("model file is not valid JSON: " + std::string(e.what()));
    }
    return TorusModel::from_json(spec);
}

}  // namespace mldeg
