#pragma once

#include <cstdint>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

struct EnergyReport {
    int64_t set_size = 0;
    BigInt energy = 0;        // #{(a,b,c,d) : a+b = c+d}
    double exponent = 0.0;    // log energy / log set_size (0 for singletons)
    bool sidon = false;       // energy == 2 n^2 - n
};

// Additive energy via the sum multiset: energy = sum_s r(s)^2 with
// r(s) = #{(a,b) : a+b = s}.
EnergyReport additive_energy(const std::vector<BigInt>& values);

struct TruncationEnergyReport {
    int levels = 0;
    int64_t member_count = 0;
    bool carry_free = false;          // 2*max(D) < b
    BigInt energy = 0;                // E(C cap [0, b^levels))
    bool directly_computed = false;   // energy came from enumeration
    BigInt digit_power = 0;           // E(D)^levels
    BigInt sumset_power = 0;          // |D+D|^levels
    bool product_identity_holds = false;  // energy == E(D)^levels
};

// Energy of the truncation C cap [0, b^s).  Carry-free digit sets
// (2*max(D) < b) factor digit by digit, giving E(D)^s; the enumerated value
// arbitrates when the truncation is small enough to enumerate.
TruncationEnergyReport cantor_truncation_energy(const CantorSet& set, int levels);

struct CorrelationReport {
    double s = 0.0;
    int64_t n = 0;
    double r2 = 0.0;
    double target = 0.0;  // 2s, the Poissonian value
};

// R_2(s, N) = (1/N) #{ordered pairs j != k with ||theta_j - theta_k|| < s/N},
// by a sorted sweep with the circular wrap; the inequality is strict.
CorrelationReport pair_correlation(std::vector<double> thetas, double s);

struct CantorCorrelationReport {
    CorrelationReport correlation;
    bool hypotheses_hold = false;  // b >= 5, D within [0, b/2], energy-positive epsilon
    double epsilon = 0.0;          // 3 - log E(D) / log |D|
    double exceptional_dimension_bound = 0.0;  // 1 - eps/(3 + log b / log |D|)
};

// R_2 for the dilated sequence {alpha * k_n : n < N}; phases of alpha * k_n
// are computed in exact dyadic arithmetic before rounding to double.
CantorCorrelationReport cantor_pair_correlation(const CantorSet& set, double alpha, double s,
                                                int64_t n_to);

// Deterministic draw of alpha values in [0,1) for seeded experiments:
// per-draw streams derived from (seed, index) through splitmix64.
double seeded_unit_draw(uint64_t seed, uint64_t index);

}  // namespace cantor
