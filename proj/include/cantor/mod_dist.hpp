#pragma once

#include <cstdint>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/digit_core.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

// A probability law on Z_q: exact rational masses when predicted, counts
// over a finite scan when empirical.
struct ModDistribution {
    enum class Kind { Predicted, Empirical };

    int64_t modulus = 1;
    Kind kind = Kind::Predicted;
    std::vector<BigRat> exact;     // Predicted: size q, sums to 1 exactly
    std::vector<int64_t> counts;   // Empirical: size q
    int64_t sample_size = 0;       // Empirical

    double mass(int64_t a) const;
    std::vector<double> masses() const;
    BigRat exact_mass(int64_t a) const;  // counts/sample_size for Empirical
};

double total_variation(const ModDistribution& p, const ModDistribution& q);

// Frequencies of k_n mod q over n < N, by exact modular reduction of digit
// contributions (cycles of b^c mod q, no big-integer division per term).
ModDistribution empirical_mod_distribution(const CantorSet& set, int64_t q, int64_t n_to);

// The limiting law of k_n mod q.  Requires 0 in D; then s | d for every
// digit, k_n = s * k'_n with k' running through C(b, D/s), and the law is
// the pushforward under x -> s*x of the step-one law of C(b, D/s):
// write q = r*u with (r,b) = 1 and u | b^j minimal; the step-one law is
// (law of C(b,D/s) cap [0,b^j) mod u) x (uniform on Z_r) through the CRT.
ModDistribution predicted_mod_distribution(const CantorSet& set, int64_t q);

// Empirical density of k_n = 0 mod q over n < N (positive in the limit).
double zero_residue_density(const CantorSet& set, int64_t q, int64_t n_to);

// Empirical law of s_b(k_n) mod q; requires gcd(q, b) = 1.
ModDistribution sum_digits_mod_distribution(const CantorSet& set, int64_t q, int64_t n_to);

// How close a digit-sum law is to uniform on the subgroup <gcd(q,s)>.
struct SubgroupUniformity {
    int64_t generator = 1;          // gcd(q, s)
    int64_t subgroup_size = 1;      // q / gcd(q, s)
    bool support_inside = false;    // no empirical mass off the subgroup
    double tv_to_uniform = 0.0;     // on the subgroup
};

SubgroupUniformity subgroup_uniformity(const CantorSet& set, const ModDistribution& dist);

// Joint law of (k_n mod a, s_b(k_n) mod a2) over n < N.  Requires s = 1 or
// s | d for all d (the convergence hypothesis).
struct JointDistribution {
    int64_t mod_value = 1;       // a
    int64_t mod_digit_sum = 1;   // a2
    int64_t sample_size = 0;
    std::vector<std::vector<int64_t>> counts;  // [a][a2]
    double mass(int64_t i, int64_t j) const;
    std::vector<double> value_marginal() const;
};

JointDistribution joint_mod_distribution(const CantorSet& set, int64_t a, int64_t a2,
                                         int64_t n_to);

// Sufficient condition for the joint law to be uniform on Z_a x Z_a2:
// gcd(s*b*(b-1), a) = 1 and gcd(s, a2) = 1.
bool joint_uniformity_criterion(const CantorSet& set, int64_t a, int64_t a2);

double joint_tv_to_uniform(const JointDistribution& joint);

// N(r,r2,q) = {n : k_n = r mod q and s_b(k_n) = r2 mod q}, decomposed
// greedily into certified disjoint progressions with steps |D|^i (an emitted
// progression is proven to lie inside the set for all m, via the reachable
// residues of the set mod q).  Offsets below the truncation that admit no
// certified progression are reported in `unresolved`.
struct ResidueIndexSet {
    ProgressionFamily family;
    std::vector<int64_t> unresolved;
    bool member(int64_t n) const;
};

ResidueIndexSet residue_index_set(const CantorSet& set, int64_t r, int64_t r2, int64_t q,
                                  int64_t truncation);

}  // namespace cantor
