#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace mldeg {

// Exponent vector. Trailing zero exponents are insignificant: monomials are
// compared after implicit zero-padding, so x*y in 2 variables equals x*y
// embedded in 5 variables.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    static Monomial one() { return Monomial(); }

    static Monomial variable(int index, int exponent = 1) {
        std::vector<int> e(static_cast<size_t>(index) + 1, 0);
        e[static_cast<size_t>(index)] = exponent;
        return Monomial(std::move(e));
    }

    int exponent(size_t v) const { return v < exps.size() ? exps[v] : 0; }

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
        for (size_t v = 0; v < r.exps.size(); ++v) r.exps[v] = exponent(v) + o.exponent(v);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        size_t n = std::max(a.exps.size(), b.exps.size());
        for (size_t v = 0; v < n; ++v)
            if (a.exponent(v) != b.exponent(v)) return false;
        return true;
    }
};

// Graded lexicographic order with earlier variables ranked higher, so within
// degree 2 over (x, y): y^2 < x*y < x^2.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        size_t n = std::max(a.exps.size(), b.exps.size());
        for (size_t v = 0; v < n; ++v) {
            int ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea < eb;
        }
        return false;
    }
};

}  // namespace mldeg
