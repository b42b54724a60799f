#include "cantor/digit_core.hpp"

#include <cmath>
#include <stdexcept>

#include "cantor/errors.hpp"

namespace cantor {

Element index_to_element(const CantorSet& set, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("index must be nonnegative");
    ElementScanner scan(set, n);
    Element e;
    e.digit_indices = scan.digit_indices();
    e.value = scan.value();
    return e;
}

bool contains(const CantorSet& set, const BigInt& k) {
    if (k < 0) return false;
    BigInt v = k;
    while (v > 0) {
        int64_t d = static_cast<int64_t>(v % set.base);
        if (set.digit_index(d) < 0) return false;
        v /= set.base;
    }
    // value 0 needs the zero digit
    return k > 0 || set.zero_digit();
}

BigInt element_to_index(const CantorSet& set, const BigInt& k) {
    if (k < 0) throw NotAMember("negative values are not members");
    if (k == 0 && !set.zero_digit()) throw NotAMember("0 is not a member (0 not in D)");
    std::vector<int32_t> idx;
    BigInt v = k;
    while (v > 0) {
        int64_t d = static_cast<int64_t>(v % set.base);
        int i = set.digit_index(d);
        if (i < 0) throw NotAMember("base-b digit " + std::to_string(d) + " not in D");
        idx.push_back(static_cast<int32_t>(i));
        v /= set.base;
    }
    const int64_t radix = set.radix();
    if (set.zero_digit()) {
        BigInt n = 0;
        for (size_t c = idx.size(); c-- > 0;) n = n * radix + idx[c];
        return n;
    }
    // bijective numeration: digits are idx+1 in {1..|D|}, index is value-1
    BigInt n = 0;
    for (size_t c = idx.size(); c-- > 0;) n = n * radix + (idx[c] + 1);
    return n - 1;
}

BigInt sum_digits(int64_t base, const BigInt& k) {
    if (k < 0) throw std::invalid_argument("sum_digits expects a nonnegative integer");
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    BigInt s = 0, v = k;
    while (v > 0) {
        s += v % base;
        v /= base;
    }
    return s;
}

bool self_similarity_check(const CantorSet& set, const BigInt& n, unsigned i, const BigInt& j) {
    BigInt block = pow_bigint(set.radix(), i);
    if (j < 0 || j >= block) throw IndexOutOfRange("need 0 <= j < |D|^i");
    Element kn = index_to_element(set, n);
    Element kj = index_to_element(set, j);
    Element lhs = index_to_element(set, block * n + j);
    BigInt expect = pow_bigint(set.base, i) * kn.value + kj.value;
    if (lhs.value != expect) return false;
    BigInt s_lhs = sum_digits(set.base, lhs.value);
    BigInt s_rhs = sum_digits(set.base, kn.value) + sum_digits(set.base, kj.value);
    return s_lhs == s_rhs;
}

bool ProgressionFamily::contains_index(int64_t n) const {
    for (const auto& p : progressions) {
        if (n < p.offset) continue;
        int64_t step = 1;
        for (unsigned e = 0; e < p.step_exponent; ++e) step *= radix;
        if ((n - p.offset) % step == 0) return true;
    }
    return false;
}

ProgressionFamily delta_star(const CantorSet& set, int64_t h, const BigInt& k, const BigInt& s,
                             int64_t truncation) {
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    if (!set.zero_digit())
        throw HypothesisViolated("delta_star requires 0 in D (self-similar indexing)");
    if (truncation < 1) truncation = default_delta_truncation(set, h);

    ProgressionFamily fam;
    fam.radix = set.radix();
    fam.truncation = truncation;

    ElementScanner lo(set, 0), hi(set, h);
    ValueTracker vlo(set), vhi(set);
    vlo.init(lo);
    vhi.init(hi);

    for (int64_t n = 0; n < truncation; ++n) {
        bool hit = (vhi.value() - vlo.value() == k) &&
                   (BigInt(hi.sum_digits()) - lo.sum_digits() == s);
        if (hit && !fam.contains_index(n)) {
            // least i with n + h < |D|^i: the block containing both n and n+h
            unsigned i = 0;
            int64_t block = 1;
            while (block <= n + h) {
                block *= set.radix();
                ++i;
            }
            fam.progressions.push_back({n, i});
        }
        vlo.apply(lo.advance());
        vhi.apply(hi.advance());
    }
    return fam;
}

int64_t default_delta_truncation(const CantorSet& set, int64_t h) {
    // offsets of new progressions are minimal uncovered elements; in practice
    // they appear well inside a few self-similarity blocks past h
    int64_t block = 1;
    while (block <= h + 512) block *= set.radix();
    return 2 * block;
}

int64_t good_set_min_level(const CantorSet& set, double epsilon, int64_t shift_bound) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
    if (shift_bound < 1) throw std::invalid_argument("shift bound must be >= 1");
    int64_t level = 1;
    double block = static_cast<double>(set.radix());
    while (static_cast<double>(shift_bound) > epsilon * block) {
        block *= static_cast<double>(set.radix());
        ++level;
        if (level > 62) throw NotAchievable("no feasible level");
    }
    return level;
}

std::vector<Element> good_set(const CantorSet& set, double epsilon, int64_t shift_bound,
                              int64_t level) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
    if (shift_bound < 1) throw std::invalid_argument("shift bound must be >= 1");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (!set.zero_digit())
        throw HypothesisViolated("good_set requires 0 in D (self-similar indexing)");

    double block = std::pow(static_cast<double>(set.radix()), static_cast<double>(level));
    if (static_cast<double>(shift_bound) > epsilon * block)
        throw NotAchievable("level too small for the requested size bound");

    BigInt count = pow_bigint(set.radix(), static_cast<unsigned>(level)) - shift_bound;
    if (count > 10000000)
        throw std::invalid_argument("level materializes more than 1e7 elements");
    std::vector<Element> g;
    g.reserve(count.convert_to<size_t>());
    ElementScanner scan(set, 0);
    ValueTracker val(set);
    val.init(scan);
    for (BigInt j = 0; j < count; ++j) {
        Element e;
        e.digit_indices = scan.digit_indices();
        e.value = val.value();
        g.push_back(std::move(e));
        val.apply(scan.advance());
    }
    return g;
}

Element good_set_successor(const CantorSet& set, const Element& k_prime, int64_t h) {
    BigInt j = element_to_index(set, k_prime.value);
    return index_to_element(set, j + h);
}

}  // namespace cantor
