#pragma once

#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mldeg/monomial.hpp"
#include "mldeg/rational.hpp"

namespace mldeg {

// Sparse multivariate polynomial over an exact (Rational) or floating
// (Complex) coefficient domain. Invariants: no stored coefficient is zero,
// and every stored exponent vector fits inside variable_count().
template <typename C>
class Polynomial {
  public:
    using TermMap = std::map<Monomial, C, GradedLexLess>;

    explicit Polynomial(int nvars = 0) : nvars_(check_nvars(nvars)) {}

    static Polynomial constant(int nvars, const C& value) {
        Polynomial p(nvars);
        p.add_term(Monomial::one(), value);
        return p;
    }

    static Polynomial variable(int nvars, int index, int exponent = 1) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
        if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial");
        Polynomial p(nvars);
        if (exponent == 0)
            p.add_term(Monomial::one(), coeff_one(static_cast<const C*>(nullptr)));
        else
            p.add_term(Monomial::variable(index, exponent), coeff_one(static_cast<const C*>(nullptr)));
        return p;
    }

    int variable_count() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // Zero polynomial reports degree -1.
    int total_degree() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
    }

    int max_exponent(int var) const {
        int m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.exponent(static_cast<size_t>(var)));
        return m;
    }

    C constant_term() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? C(0) : it->second;
    }

    C leading_coefficient() const {
        if (terms_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& mono, const C& coeff) {
        if (coeff_is_zero(coeff)) return;
        if (static_cast<int>(mono.exps.size()) > nvars_) {
            for (size_t v = static_cast<size_t>(nvars_); v < mono.exps.size(); ++v)
                if (mono.exps[v] != 0) throw std::invalid_argument("monomial exceeds variable count");
        }
        auto [it, inserted] = terms_.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    // Reinterpret over a larger variable set; indices are preserved.
    Polynomial embed(int new_nvars) const {
        if (new_nvars < nvars_) throw std::invalid_argument("embed cannot drop variables");
        Polynomial p(new_nvars);
        p.terms_ = terms_;
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_vars(o);
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_vars(o);
        for (const auto& [mono, c] : o.terms_) add_term(mono, C(-c));
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial p(nvars_);
        for (const auto& [mono, c] : terms_) p.terms_.emplace(mono, C(-c));
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial p(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, C(ca * cb));
        return p;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const C& s) const {
        Polynomial p(nvars_);
        if (coeff_is_zero(s)) return p;
        for (const auto& [mono, c] : terms_) {
            C sc = C(c * s);
            if (!coeff_is_zero(sc)) p.terms_.emplace(mono, sc);
        }
        return p;
    }

    Polynomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power of polynomial");
        Polynomial r = constant(nvars_, coeff_one(static_cast<const C*>(nullptr)));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Polynomial differentiate(int var) const {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("differentiation variable out of range");
        Polynomial p(nvars_);
        for (const auto& [mono, c] : terms_) {
            int e = mono.exponent(static_cast<size_t>(var));
            if (e == 0) continue;
            Monomial m = mono;
            m.exps[static_cast<size_t>(var)] = e - 1;
            p.add_term(m, C(c * C(e)));
        }
        return p;
    }

    // Largest monomial dividing every term; the zero polynomial has content 1.
    Monomial monomial_content() const {
        if (terms_.empty()) return Monomial::one();
        Monomial content = terms_.begin()->first;
        for (const auto& [mono, c] : terms_)
            for (size_t v = 0; v < content.exps.size(); ++v)
                content.exps[v] = std::min(content.exps[v], mono.exponent(v));
        return content;
    }

    Polynomial divide_monomial(const Monomial& mono) const {
        Polynomial p(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial q = m;
            q.exps.resize(std::max(q.exps.size(), mono.exps.size()), 0);
            for (size_t v = 0; v < q.exps.size(); ++v) {
                q.exps[v] -= mono.exponent(v);
                if (q.exps[v] < 0) throw std::invalid_argument("monomial does not divide polynomial");
            }
            p.terms_.emplace(q, c);
        }
        return p;
    }

    template <typename V>
    V evaluate_as(std::span<const V> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluation point has wrong dimension");
        V acc(0);
        for (const auto& [mono, c] : terms_) {
            V t = convert_coeff<V>(c);
            for (size_t v = 0; v < mono.exps.size(); ++v)
                for (int e = 0; e < mono.exps[v]; ++e) t *= point[v];
            acc += t;
        }
        return acc;
    }

    Complex evaluate(std::span<const Complex> point) const { return evaluate_as<Complex>(point); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (static_cast<int>(names.size()) != nvars_)
            throw std::invalid_argument("variable name list has wrong length");
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = coeff_to_string(it->second);
            bool negative = !c.empty() && c[0] == '-';
            if (first) {
                if (negative) out << "-";
            } else {
                out << (negative ? " - " : " + ");
            }
            first = false;
            std::string mag = negative ? c.substr(1) : c;
            bool has_vars = !it->first.is_one();
            if (!has_vars || mag != "1") {
                out << mag;
                if (has_vars) out << "*";
            }
            bool first_var = true;
            for (size_t v = 0; v < it->first.exps.size(); ++v) {
                int e = it->first.exps[v];
                if (e == 0) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << names[v];
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

  private:
    static int check_nvars(int nvars) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
        return nvars;
    }

    void require_same_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    }

    template <typename V>
    static V convert_coeff(const C& c) {
        if constexpr (std::is_same_v<V, C>)
            return c;
        else
            return V(to_complex(c));
    }

    static std::string coeff_to_string(const Rational& r) { return r.get_str(); }

    static std::string coeff_to_string(const Complex& z) {
        std::ostringstream out;
        if (z.imag() == 0.0) {
            out << z.real();
        } else {
            out << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
        }
        return out.str();
    }

    int nvars_;
    TermMap terms_;
};

using RatPoly = Polynomial<Rational>;
using CxPoly = Polynomial<Complex>;

inline CxPoly to_complex_poly(const RatPoly& p) {
    CxPoly out(p.variable_count());
    for (const auto& [mono, c] : p.terms()) out.add_term(mono, to_complex(c));
    return out;
}

}  // namespace mldeg
