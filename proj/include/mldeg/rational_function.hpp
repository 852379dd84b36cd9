#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mldeg/polynomial.hpp"

namespace mldeg {

// Quotient of two polynomials. Stored lightly normalized: a zero numerator
// forces denominator 1, and any monomial factor common to numerator and
// denominator is cancelled. No full gcd reduction is attempted.
template <typename C>
class RationalFunction {
  public:
    explicit RationalFunction(int nvars = 0)
        : num_(nvars), den_(Polynomial<C>::constant(nvars, coeff_one(static_cast<const C*>(nullptr)))) {}

    RationalFunction(Polynomial<C> num, Polynomial<C> den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.variable_count() != den_.variable_count())
            throw std::invalid_argument("numerator/denominator variable count mismatch");
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
        normalize();
    }

    explicit RationalFunction(Polynomial<C> num)
        : num_(std::move(num)),
          den_(Polynomial<C>::constant(num_.variable_count(), coeff_one(static_cast<const C*>(nullptr)))) {}

    static RationalFunction constant(int nvars, const C& value) {
        return RationalFunction(Polynomial<C>::constant(nvars, value));
    }

    static RationalFunction variable(int nvars, int index) {
        return RationalFunction(Polynomial<C>::variable(nvars, index));
    }

    const Polynomial<C>& numerator() const { return num_; }
    const Polynomial<C>& denominator() const { return den_; }
    int variable_count() const { return num_.variable_count(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const { return make(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        a.require_same_vars(b);
        if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
        return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        a.require_same_vars(b);
        if (a.den_ == b.den_) return make(a.num_ - b.num_, a.den_);
        return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        a.require_same_vars(b);
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        a.require_same_vars(b);
        if (b.num_.is_zero()) throw std::invalid_argument("division by zero rational function");
        return make(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(int k) const {
        if (k < 0) {
            if (num_.is_zero()) throw std::invalid_argument("negative power of zero");
            return RationalFunction(den_, num_).pow(-k);
        }
        RationalFunction r = constant(variable_count(), coeff_one(static_cast<const C*>(nullptr)));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Quotient rule; result shares this function's variable set.
    RationalFunction derivative(int var) const {
        return make(num_.differentiate(var) * den_ - num_ * den_.differentiate(var), den_ * den_);
    }

    Complex evaluate(std::span<const Complex> point) const {
        Complex d = den_.evaluate(point);
        if (d == Complex(0.0, 0.0)) throw std::domain_error("rational function pole at evaluation point");
        return num_.evaluate(point) / d;
    }

    template <typename V>
    V evaluate_as(std::span<const V> point) const {
        V d = den_.template evaluate_as<V>(point);
        if (coeff_is_zero_generic(d)) throw std::domain_error("rational function pole at evaluation point");
        return num_.template evaluate_as<V>(point) / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string(std::span<const std::string> names) const {
        std::string n = num_.to_string(names);
        if (den_.is_constant() && !coeff_is_zero(C(den_.constant_term() - coeff_one(static_cast<const C*>(nullptr)))))
            return "(" + n + ")/(" + den_.to_string(names) + ")";
        if (den_.is_constant()) return n;
        return "(" + n + ")/(" + den_.to_string(names) + ")";
    }

  private:
    static RationalFunction make(Polynomial<C> num, Polynomial<C> den) {
        return RationalFunction(std::move(num), std::move(den));
    }

    void require_same_vars(const RationalFunction& o) const {
        if (variable_count() != o.variable_count())
            throw std::invalid_argument("variable count mismatch");
    }

    static bool coeff_is_zero_generic(const Rational& r) { return coeff_is_zero(r); }
    static bool coeff_is_zero_generic(const Complex& c) { return coeff_is_zero(c); }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial<C>::constant(num_.variable_count(), coeff_one(static_cast<const C*>(nullptr)));
            return;
        }
        Monomial cn = num_.monomial_content();
        Monomial cd = den_.monomial_content();
        Monomial common;
        size_t n = std::min(cn.exps.size(), cd.exps.size());
        common.exps.assign(n, 0);
        bool nontrivial = false;
        for (size_t v = 0; v < n; ++v) {
            common.exps[v] = std::min(cn.exponent(v), cd.exponent(v));
            if (common.exps[v] > 0) nontrivial = true;
        }
        if (nontrivial) {
            num_ = num_.divide_monomial(common);
            den_ = den_.divide_monomial(common);
        }
    }

    Polynomial<C> num_, den_;
};

using RatFun = RationalFunction<Rational>;
using CxFun = RationalFunction<Complex>;

inline CxFun to_complex_fun(const RatFun& f) {
    return CxFun(to_complex_poly(f.numerator()), to_complex_poly(f.denominator()));
}

// Summands of d(log f)/d(var) = f'/f with monomial content split off, so a
// factorization f = x^e * p / q contributes e/x + p'/p - q'/q instead of one
// fully expanded quotient. Keeps cleared critical equations at low degree.
template <typename C>
std::vector<RationalFunction<C>> log_derivative_summands(const RationalFunction<C>& f, int var) {
    if (f.is_zero()) throw std::invalid_argument("log derivative of zero function");
    if (var < 0 || var >= f.variable_count()) throw std::invalid_argument("log derivative variable out of range");
    int nv = f.variable_count();
    std::vector<RationalFunction<C>> out;

    auto split = [&](const Polynomial<C>& p, bool negate) {
        Monomial content = p.monomial_content();
        int e = content.exponent(static_cast<size_t>(var));
        if (e != 0)
            out.emplace_back(Polynomial<C>::constant(nv, C(negate ? -e : e)), Polynomial<C>::variable(nv, var));
        Polynomial<C> primitive = p.divide_monomial(content);
        if (primitive.is_constant()) return;
        Polynomial<C> d = primitive.differentiate(var);
        if (d.is_zero()) return;
        out.emplace_back(negate ? -d : d, primitive);
    };

    split(f.numerator(), false);
    split(f.denominator(), true);
    return out;
}

// A sum of rational functions brought over the product of its distinct
// denominators: sum_i n_i/d_i = numerator / multiplier, with the distinct
// nonconstant d_i reported as spurious factors. Solutions of a cleared
// equation where some factor vanishes are artifacts, not zeros of the sum.
template <typename C>
struct ClearedSum {
    Polynomial<C> numerator;
    Polynomial<C> multiplier;
    std::vector<Polynomial<C>> spurious_factors;
};

template <typename C>
ClearedSum<C> clear_denominators(std::span<const RationalFunction<C>> summands) {
    if (summands.empty()) throw std::invalid_argument("clear_denominators: empty sum");
    int nv = summands.front().variable_count();
    C one = coeff_one(static_cast<const C*>(nullptr));

    // Group numerators by exact denominator equality; constant denominators
    // are folded into the polynomial (denominator 1) group.
    std::vector<Polynomial<C>> dens;
    std::vector<Polynomial<C>> nums;
    dens.push_back(Polynomial<C>::constant(nv, one));
    nums.push_back(Polynomial<C>(nv));
    for (const auto& s : summands) {
        if (s.variable_count() != nv) throw std::invalid_argument("clear_denominators: variable count mismatch");
        const Polynomial<C>& d = s.denominator();
        if (d.is_constant()) {
            C c = d.constant_term();
            nums[0] += s.numerator().scaled(C(one / c));
            continue;
        }
        size_t g = dens.size();
        for (size_t i = 1; i < dens.size(); ++i) {
            if (dens[i] == d) {
                g = i;
                break;
            }
        }
        if (g == dens.size()) {
            dens.push_back(d);
            nums.push_back(Polynomial<C>(nv));
        }
        nums[g] += s.numerator();
    }

    ClearedSum<C> out;
    out.multiplier = Polynomial<C>::constant(nv, one);
    for (size_t i = 1; i < dens.size(); ++i) {
        out.spurious_factors.push_back(dens[i]);
        out.multiplier *= dens[i];
    }
    out.numerator = Polynomial<C>(nv);
    for (size_t g = 0; g < dens.size(); ++g) {
        if (nums[g].is_zero()) continue;
        Polynomial<C> complement = Polynomial<C>::constant(nv, one);
        for (size_t i = 1; i < dens.size(); ++i)
            if (i != g) complement *= dens[i];
        out.numerator += nums[g] * complement;
    }
    return out;
}

}  // namespace mldeg
