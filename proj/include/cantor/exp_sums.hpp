#pragma once

#include <cstdint>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/frequency.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

// One-step Fourier factor Lhat(theta) = (1/|D|) sum_{d in D} e(d theta).
Complex lhat(const CantorSet& set, const Frequency& theta);

// Riesz product prod_{j=0}^{k-1} Lhat(b^j alpha + beta); equals the average
// of e(alpha k + beta s_b(k)) over the |D|^k members of C cap [0, b^k)
// when 0 is a digit.  b^j alpha is reduced mod 1 exactly for rational alpha,
// and in exact dyadic arithmetic for real alpha.
Complex riesz_product(const CantorSet& set, const Frequency& alpha, const Frequency& beta,
                      unsigned k);

struct WeylSumResult {
    Complex value{0.0, 0.0};
    int64_t count = 0;
    double magnitude = 0.0;
};

// Average of e(k_n alpha + s_b(k_n) beta) over M <= n < N, with compensated
// accumulation.  Rational phases go through exact residues k_n mod q; real
// phases through exact dyadic digit tables.
WeylSumResult weyl_sum_window(const CantorSet& set, const Frequency& alpha, const Frequency& beta,
                              int64_t m_from, int64_t n_to);

inline WeylSumResult weyl_sum(const CantorSet& set, const Frequency& alpha, const Frequency& beta,
                              int64_t n_to) {
    return weyl_sum_window(set, alpha, beta, 0, n_to);
}

// A monomial coeff * x^dx * y^dy of a two-variable phase polynomial
// evaluated at (k_n, s_b(k_n)).
struct PhaseMonomial {
    unsigned dx = 0;
    unsigned dy = 0;
    Frequency coeff;
};

inline constexpr unsigned kMaxPolynomialDegree = 5;

// Average of e(p(k_n, s_b(k_n))) over n < N for p given as monomials.
WeylSumResult polynomial_weyl_sum(const CantorSet& set, const std::vector<PhaseMonomial>& poly,
                                  int64_t n_to);

// Trichotomy for lim_N E_{n<N} e(k_n alpha + s_b(k_n) beta), driven by the
// step parameter s of D:
//   s = 1, or s > 1 with s | d for all d: the limit exists; it can be
//     nonzero only when s*alpha = a/(b-1) + r/b^t and s*beta = -a/(b-1)
//     (mod 1) for integers a, r, t -- witnesses are searched exactly and
//     carried in the result;
//   s > 1 with s not dividing some d: with such witnesses the limit need
//     not exist (MayNotExist); otherwise it is 0 (or 1 at (0,0)).
// Irrational input with (alpha,beta) != (0,0) classifies as Zero.
struct LimitClass {
    enum class Tag { NonzeroPossible, Zero, One, MayNotExist };
    Tag tag = Tag::Zero;
    // witnesses, valid for NonzeroPossible and MayNotExist:
    // s*alpha = a/(b-1) + r/b^t (mod 1), s*beta = -a/(b-1) (mod 1)
    BigInt a = 0;
    BigInt r = 0;
    unsigned t = 0;
};

LimitClass classify_limit(const CantorSet& set, const Frequency& alpha, const Frequency& beta);

}  // namespace cantor
