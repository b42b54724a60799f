#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>

namespace cantor {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Reduce a rational into [0,1).
BigRat mod1(const BigRat& x);

BigInt pow_bigint(const BigInt& base, unsigned exp);

double to_double(const BigRat& x);

// (a*b) mod m for m < 2^63.
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

// frac(x*K) for a double x and a nonnegative big integer K, computed exactly:
// x is a dyadic rational m/2^e, so x*K mod 1 = ((m*K) mod 2^e)/2^e.
// Result in [0,1). x is reduced mod 1 first.
double frac_times(double x, const BigInt& k);

// e(t) = exp(2*pi*i*t) for t in [0,1).
inline Complex unit_phase(double t) {
    const double a = 6.283185307179586476925286766559 * t;
    return {std::cos(a), std::sin(a)};
}

inline double frac01(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;  // guard against rounding at the boundary
    return f;
}

// Neumaier compensated accumulation.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct ComplexSum {
    NeumaierSum re, im;
    void add(const Complex& z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

}  // namespace cantor
