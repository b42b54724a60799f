#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/numeric.hpp"

namespace cantor {

// n -> k_n.  With 0 in D, the base-|D| digits of n index into D; without 0,
// enumeration runs through digit-length blocks (bijective numeration).
// Strictly increasing in n either way.
Element index_to_element(const CantorSet& set, const BigInt& n);

// Inverse of index_to_element; throws NotAMember if some base-b digit of k
// is outside D.
BigInt element_to_index(const CantorSet& set, const BigInt& k);

bool contains(const CantorSet& set, const BigInt& k);

// Sum of base-b digits of k (any nonnegative k, not just members).
BigInt sum_digits(int64_t base, const BigInt& k);

// Checks k_{|D|^i n + j} = b^i k_n + k_j and the digit-sum analogue
// s_b(k_{|D|^i n + j}) = s_b(k_n) + s_b(k_j).  Requires 0 <= j < |D|^i.
bool self_similarity_check(const CantorSet& set, const BigInt& n, unsigned i, const BigInt& j);

struct Progression {
    int64_t offset;
    unsigned step_exponent;  // step is |D|^step_exponent
};

struct ProgressionFamily {
    std::vector<Progression> progressions;  // offsets strictly increasing
    int64_t radix = 0;                      // |D|
    int64_t truncation = 0;                 // offsets were searched below this bound

    bool empty() const { return progressions.empty(); }
    bool contains_index(int64_t n) const;
};

// Delta_h^*(k,s) = {n >= 0 : k_{n+h} - k_n = k and s_b(k_{n+h}) - s_b(k_n) = s},
// decomposed greedily into disjoint arithmetic progressions whose steps are
// powers of |D|: each new offset is the minimal element not yet covered, and
// its step exponent is the least i with offset + h < |D|^i.  All offsets below
// `truncation` are discovered; each returned progression is exact (infinite).
// Requires 0 in D.
ProgressionFamily delta_star(const CantorSet& set, int64_t h, const BigInt& k, const BigInt& s,
                             int64_t truncation);

// Default offset-search bound for delta_star.
int64_t default_delta_truncation(const CantorSet& set, int64_t h);

// The "good set" G of C cap [0, b^n0): elements whose index j satisfies
// j + H < |D|^n0, so that adding h <= H to the index never disturbs the
// blocks above n0.  Then |G| = |D|^n0 - H >= (1-eps)|D|^n0 whenever
// H <= eps*|D|^n0 (otherwise NotAchievable), and for every k' in G with
// index j, every h <= H and every m >= 1,
//   k_n = b^n0 k_m + k'  implies  k_{n+h} = b^n0 k_m + k''
// with k'' = k_{j+h} depending only on (k', h).
// Requires 0 in D.
std::vector<Element> good_set(const CantorSet& set, double epsilon, int64_t shift_bound,
                              int64_t level);

// Smallest level n0 at which good_set can satisfy its size bound.
int64_t good_set_min_level(const CantorSet& set, double epsilon, int64_t shift_bound);

// k'' for a good-set element: the element of index j+h where j is the index
// of k_prime.
Element good_set_successor(const CantorSet& set, const Element& k_prime, int64_t h);

}  // namespace cantor
