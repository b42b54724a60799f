#pragma once

#include <string>

#include "cantor/numeric.hpp"

namespace cantor {

// A frequency alpha or beta for exponential sums, reduced into [0,1).
// Rationality is an explicit tag set at construction, never inferred from a
// floating-point value; the arithmetic trichotomies below depend on it.
struct Frequency {
    enum class Kind { Rational, Real };

    Kind kind = Kind::Rational;
    BigRat rat = 0;     // valid when kind == Rational, in [0,1), reduced
    double real = 0.0;  // valid when kind == Real, in [0,1)

    static Frequency rational(const BigInt& p, const BigInt& q);
    static Frequency rational(const BigRat& x);
    static Frequency irrational(double x);
    static Frequency zero() { return rational(BigRat(0)); }

    bool is_rational() const { return kind == Kind::Rational; }
    bool is_zero() const;

    double numeric() const;  // double value in [0,1)

    Frequency scaled(const BigInt& m) const;  // m * theta mod 1
    Frequency plus(const Frequency& other) const;

    std::string str() const;
};

// Parse "p/q" as an exact rational, a decimal literal as a tagged real, or a
// named constant (sqrt2m1, sqrt2, sqrt3, sqrt5, phi).
Frequency parse_frequency(const std::string& text);

}  // namespace cantor
