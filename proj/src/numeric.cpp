#include "cantor/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace cantor {

BigRat mod1(const BigRat& x) {
    BigInt num = numerator(x);
    BigInt den = denominator(x);  // den > 0, reduced
    BigInt r = num % den;
    if (r < 0) r += den;
    return BigRat(r, den);
}

BigInt pow_bigint(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

double to_double(const BigRat& x) { return x.convert_to<double>(); }

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1u) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1u;
    }
    return r;
}

double frac_times(double x, const BigInt& k) {
    if (k == 0) return 0.0;
    x = frac01(x);
    if (x == 0.0) return 0.0;

    int e2 = 0;
    const double f = std::frexp(x, &e2);  // x = f * 2^e2, f in [0.5, 1)
    const auto m = static_cast<int64_t>(std::ldexp(f, 53));  // exact: 53-bit significand
    const int shift = 53 - e2;  // x = m / 2^shift, shift >= 53 since x < 1

    BigInt prod = m * k;
    // prod mod 2^shift
    BigInt r = prod & ((BigInt(1) << shift) - 1);
    if (r == 0) return 0.0;

    // r / 2^shift as a double; keep the top 64 bits to avoid overflow.
    const auto bits = static_cast<int>(msb(r)) + 1;
    if (bits <= 62) {
        return std::ldexp(static_cast<double>(r.convert_to<uint64_t>()), -shift);
    }
    const int drop = bits - 62;
    BigInt top = r >> drop;
    return std::ldexp(static_cast<double>(top.convert_to<uint64_t>()), drop - shift);
}

}  // namespace cantor
