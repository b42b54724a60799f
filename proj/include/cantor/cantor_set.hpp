#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/numeric.hpp"

namespace cantor {

// An integer set C(b,D): all nonnegative integers whose base-b digits lie in D.
// Members are enumerated in increasing order as k_0 < k_1 < ...
struct CantorSet {
    int64_t base = 0;             // b >= 3
    std::vector<int64_t> digits;  // strictly increasing, each in [0, b)
    int64_t step = 0;             // gcd of pairwise digit differences
    double dim = 0.0;             // log|D| / log b

    static CantorSet create(int64_t base, std::vector<int64_t> digits);

    // Textual form "b=3;D=0,2".
    static CantorSet parse(const std::string& text);
    std::string format() const;

    int64_t radix() const { return static_cast<int64_t>(digits.size()); }  // |D|
    bool zero_digit() const { return digits.front() == 0; }
    int digit_index(int64_t d) const;  // position of d in digits, or -1
};

struct Element {
    BigInt value;
    std::vector<int32_t> digit_indices;  // positions in D, least-significant first
};

// Iterates members of C(b,D) in increasing order by maintaining the digit
// vector of the index n.  With 0 in D this is the plain base-|D| expansion
// of n; without 0 it is the bijective numeration of n+1 (digit-length
// blocks), which is the monotone enumeration in that case.
class ElementScanner {
public:
    struct Change {
        int32_t pos;
        int32_t from;  // digit index before, or -1 if the position did not exist
        int32_t to;
    };

    explicit ElementScanner(const CantorSet& set, const BigInt& start = BigInt(0));

    // Move to the next index; returns the digit changes made.
    const std::vector<Change>& advance();

    const std::vector<int32_t>& digit_indices() const { return idx_; }
    int64_t sum_digits() const { return sum_digits_; }
    const BigInt& index() const { return n_; }
    const CantorSet& set() const { return *set_; }

    // k_n, assembled from the digit vector.
    BigInt value() const;

private:
    const CantorSet* set_;
    std::vector<int32_t> idx_;
    std::vector<Change> changes_;
    BigInt n_;
    int64_t sum_digits_ = 0;
};

// Tracks k_n mod q across scanner steps using precomputed digit
// contributions d * b^pos mod q; no big-integer work per element.
class ModTracker {
public:
    ModTracker(const CantorSet& set, uint64_t modulus);

    void init(const ElementScanner& scan);
    void apply(const ElementScanner::Change& ch);
    void apply(const std::vector<ElementScanner::Change>& chs) {
        for (const auto& c : chs) apply(c);
    }
    uint64_t residue() const { return residue_; }
    uint64_t modulus() const { return q_; }

private:
    uint64_t contribution(int pos, int digit_index);
    const CantorSet* set_;
    uint64_t q_;
    uint64_t residue_ = 0;
    std::vector<uint64_t> pow_;                   // b^pos mod q
    std::vector<std::vector<uint64_t>> contrib_;  // [pos][digit index]
};

// Maintains the exact value k_n across scanner steps.
class ValueTracker {
public:
    explicit ValueTracker(const CantorSet& set);
    void init(const ElementScanner& scan);
    void apply(const ElementScanner::Change& ch);
    void apply(const std::vector<ElementScanner::Change>& chs) {
        for (const auto& c : chs) apply(c);
    }
    const BigInt& value() const { return value_; }

private:
    const BigInt& power(int pos);
    const CantorSet* set_;
    BigInt value_ = 0;
    std::vector<BigInt> pow_;
};

}  // namespace cantor
