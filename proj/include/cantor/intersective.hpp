#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

// Forbidden positive differences H cap [1, N).
struct DifferenceFamily {
    std::vector<int64_t> forbidden;  // sorted, in [1, N)
    std::string source;
};

struct SolverOptions {
    int64_t exact_cap = 120;        // largest N solved exactly
    bool allow_lower_bound = false; // past the cap: greedy + local search, flagged
};

struct AvoidingSetResult {
    int64_t size = 0;
    std::vector<int64_t> witness;  // subset of {1..N}, sorted
    bool exact = true;
};

// Largest A inside {1..N} with (A-A) disjoint from H: an exact maximum
// independent set in the difference graph, by bitset branch and bound with
// a greedy seed and vertices ordered by decreasing degree.
AvoidingSetResult max_avoiding_set(const DifferenceFamily& h, int64_t n,
                                   const SolverOptions& opts = {});

struct RatioPoint {
    unsigned exponent = 0;  // N = b^exponent
    int64_t n = 0;
    int64_t avoiding_size = 0;
    double ratio = 0.0;     // I(H, N)
    bool exact = true;
    std::vector<int64_t> witness;
};

// I(H, b^n) with H the nonzero members of the set below b^n.
std::vector<RatioPoint> intersective_ratio_profile(const CantorSet& set,
                                                   const std::vector<unsigned>& exponents,
                                                   const SolverOptions& opts = {});

struct KernelWitness {
    std::vector<int64_t> residues;  // S as residues in [0, b), sorted
    double exponent = 0.0;          // log|S| / log b
};

// Maximum-cardinality S in Z_b with S - S contained in D (mod b), by clique
// search over the circulant compatibility graph; none when the best is a
// singleton.  Digits may be given as signed representatives.
std::optional<KernelWitness> find_difference_kernel(int64_t b, std::vector<int64_t> digit_residues);

// Antipodal shortcut: d and -d both in D gives S = {0, d}.
std::optional<KernelWitness> antipodal_kernel(int64_t b, const std::vector<int64_t>& digit_residues);

// T(x) = a_0 + sum a_n cos(2 pi n x), exact rational coefficients.
struct CosinePolynomial {
    std::map<int64_t, BigRat> coefficients;  // frequency -> a_n, frequency 0 is a_0
    int64_t degree_bound = 0;

    BigRat a0() const;
    BigRat value_at_zero() const;  // sum of all coefficients
    double eval(double x) const;
};

struct VdcPolynomial {
    CosinePolynomial poly;
    bool support_in_difference_set = true;   // nonzero frequencies inside C(b, S-S)
    std::vector<int64_t> support_violations;
};

// The correlation product prod_{j=0}^{J} |sum_{s in S} e(s b^j x)|^2 / |S|^2,
// expanded symbolically.  Each level contributes frequencies (s - s') b^j
// with s, s' in S, so the support sits inside C(b, S-S) by construction;
// T(0) = 1 and a_0 = |S|^{-(J+1)} exactly (level frequencies cannot cancel
// across levels since |s - s'| < b).  When |S| = 2 this is the same
// polynomial as prod (1 + cos(2 pi d b^j x))/2 over the nonzero difference d.
// S is normalized into [0, b).
VdcPolynomial vdc_polynomial(int64_t b, std::vector<int64_t> kernel_residues, unsigned levels,
                             size_t support_cap = 1000000);

struct VdcBound {
    int64_t degree_bound = 0;   // N = b^(J+1)
    BigRat a0;
    double exponent = 0.0;      // c = log|S| / log b
    bool bound_holds = false;   // a0 <= N^-c
};

VdcBound vdc_bound(int64_t b, const std::vector<int64_t>& kernel_residues, unsigned levels);

// (dim, power-savings exponent) for the window digit set {-2k..2k} mod b
// with kernel {-k..k}: (log(4k+1)/log b, log(2k+1)/log b).
struct DimensionSavings {
    double dim = 0.0;
    double savings = 0.0;
};
DimensionSavings dimension_power_savings(int64_t b, int64_t k);

// Is n a sum of signed digits: n = sum delta_j b^j with each delta_j lying
// (mod b) in the allowed residue classes?
bool signed_digit_representable(const BigInt& n, int64_t b,
                                const std::vector<int64_t>& residue_classes);

struct IntersectiveReport {
    bool ip = false;                        // 0 in D
    std::optional<KernelWitness> kernel;
    bool ip_differences_verified = false;   // pairwise differences of the
                                            // nested-sum witness stay in C
    std::string conclusion;
};

IntersectiveReport is_intersective_structure(const CantorSet& set);

}  // namespace cantor
