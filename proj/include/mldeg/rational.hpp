#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>

namespace mldeg {

// Exact coefficient domain for symbolic work; complex doubles for numerics.
using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Complex to_complex(const Rational& r) { return Complex(r.get_d(), 0.0); }
inline Complex to_complex(const Complex& c) { return c; }

inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool coeff_is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }

inline Rational coeff_one(const Rational*) { return Rational(1); }
inline Complex coeff_one(const Complex*) { return Complex(1.0, 0.0); }

}  // namespace mldeg
