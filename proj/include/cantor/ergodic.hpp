#pragma once

#include <cstdint>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/exp_sums.hpp"
#include "cantor/frequency.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

// Finite diagonal model of a pair of commuting unitaries: each component is
// a joint eigenvector, U e = e(alpha) e and V e = e(beta) e.  Irrational
// frequencies stand in for continuous spectrum.
struct SpectralComponent {
    Frequency alpha;
    Frequency beta;
    Complex coefficient{0.0, 0.0};
};

struct SpectralVector {
    std::vector<SpectralComponent> components;
    double norm() const;
};

double spectral_distance(const SpectralVector& x, const SpectralVector& y);

// E_{n<N} U^{k_n} V^{s_b(k_n)} x: each coefficient picks up the Weyl-sum
// multiplier at its frequency pair.
SpectralVector ergodic_average(const CantorSet& set, const SpectralVector& x, int64_t n_to);

// The norm limit of the averages: components classified Zero are erased,
// the (0,0) component survives with factor 1, and NonzeroPossible components
// are scaled by the stabilized Riesz-product value.  Throws Unstable when
// the product has not settled (three consecutive steps within 1e-6) by k=40.
SpectralVector predicted_limit(const CantorSet& set, const SpectralVector& x);

// Integer-coefficient polynomial in (x, y).
struct IntPolynomial2 {
    struct Term {
        unsigned dx = 0;
        unsigned dy = 0;
        BigInt coefficient;
    };
    std::vector<Term> terms;
    BigInt eval(const BigInt& x, const BigInt& y) const;
};

// E_{n<N} (U,V)^{p(k_n, s_b(k_n))} x with p = (p1, p2): each coefficient is
// multiplied by E e(alpha p1(k_n,s_n) + beta p2(k_n,s_n)).
SpectralVector polynomial_ergodic_average(const CantorSet& set, const IntPolynomial2& p1,
                                          const IntPolynomial2& p2, const SpectralVector& x,
                                          int64_t n_to);

struct PeriodicSet {
    int64_t modulus = 1;
    std::vector<int64_t> residues;  // subset of Z_q, sorted
    double density() const;
    bool member(int64_t residue) const;
};

// E over members 1 <= k <= N of 1_A(k) 1_A(k + p(k)) for periodic A and an
// integer polynomial p with p(0) = 0 and positive leading coefficient;
// everything runs mod q.
double recurrence_density(const CantorSet& set, const PeriodicSet& a,
                          const std::vector<BigInt>& poly_coefficients, const BigInt& n_to);

}  // namespace cantor
