#include "cantor/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cantor/errors.hpp"

namespace cantor {

EnergyReport additive_energy(const std::vector<BigInt>& values) {
    if (values.empty()) throw std::invalid_argument("set must be nonempty");
    if (values.size() > 10000) throw std::invalid_argument("set too large for the sum multiset");

    EnergyReport rep;
    rep.set_size = static_cast<int64_t>(values.size());

    bool small = std::all_of(values.begin(), values.end(), [](const BigInt& v) {
        return v >= -(BigInt(1) << 61) && v <= (BigInt(1) << 61);
    });
    BigInt energy = 0;
    if (small) {
        std::vector<int64_t> v(values.size());
        for (size_t i = 0; i < values.size(); ++i) v[i] = values[i].convert_to<int64_t>();
        std::unordered_map<int64_t, int64_t> sums;
        sums.reserve(v.size() * v.size());
        for (int64_t a : v)
            for (int64_t b : v) ++sums[a + b];
        for (const auto& [s, r] : sums) energy += BigInt(r) * r;
    } else {
        std::map<BigInt, int64_t> sums;
        for (const auto& a : values)
            for (const auto& b : values) ++sums[a + b];
        for (const auto& [s, r] : sums) energy += BigInt(r) * r;
    }
    rep.energy = energy;
    const int64_t n = rep.set_size;
    rep.sidon = (energy == BigInt(2) * n * n - n);
    rep.exponent = n > 1 ? std::log(to_double(BigRat(energy)))
                               / std::log(static_cast<double>(n))
                         : 0.0;
    return rep;
}

TruncationEnergyReport cantor_truncation_energy(const CantorSet& set, int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    TruncationEnergyReport rep;
    rep.levels = levels;
    rep.carry_free = 2 * set.digits.back() < set.base;

    std::vector<BigInt> digit_values;
    for (int64_t d : set.digits) digit_values.push_back(d);
    BigInt digit_energy = additive_energy(digit_values).energy;
    rep.digit_power = 1;
    for (int i = 0; i < levels; ++i) rep.digit_power *= digit_energy;

    // |D + D| as a set
    {
        std::vector<int64_t> sums;
        for (int64_t a : set.digits)
            for (int64_t b : set.digits) sums.push_back(a + b);
        std::sort(sums.begin(), sums.end());
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        rep.sumset_power = 1;
        for (int i = 0; i < levels; ++i) rep.sumset_power *= static_cast<int64_t>(sums.size());
    }

    // member count of C cap [0, b^levels)
    BigInt count;
    if (set.zero_digit()) {
        count = pow_bigint(set.radix(), static_cast<unsigned>(levels));
    } else {
        count = 0;
        for (int l = 1; l <= levels; ++l) count += pow_bigint(set.radix(), static_cast<unsigned>(l));
    }

    if (count <= 10000) {
        std::vector<BigInt> members;
        members.reserve(count.convert_to<size_t>());
        ElementScanner scan(set, 0);
        ValueTracker val(set);
        val.init(scan);
        for (BigInt i = 0; i < count; ++i) {
            members.push_back(val.value());
            val.apply(scan.advance());
        }
        rep.member_count = static_cast<int64_t>(members.size());
        rep.energy = additive_energy(members).energy;
        rep.directly_computed = true;
    } else if (rep.carry_free) {
        // no carries: quadruple identities factor digit by digit
        rep.member_count = count.convert_to<int64_t>();
        rep.energy = rep.digit_power;
        rep.directly_computed = false;
    } else {
        throw LevelTooLarge("truncation too large to enumerate and not carry-free");
    }
    rep.product_identity_holds = (rep.energy == rep.digit_power);
    return rep;
}

CorrelationReport pair_correlation(std::vector<double> thetas, double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("need 0 < s < 1");
    if (thetas.size() < 2) throw std::invalid_argument("need at least two points");
    const auto n = static_cast<int64_t>(thetas.size());
    for (double& t : thetas) t = frac01(t);
    std::sort(thetas.begin(), thetas.end());

    const double threshold = s / static_cast<double>(n);
    // extend by the wrapped copy so circular near pairs become linear ones
    std::vector<double> ext = thetas;
    ext.reserve(2 * thetas.size());
    for (double t : thetas) ext.push_back(t + 1.0);

    int64_t close_pairs = 0;  // unordered
    size_t j = 1;
    for (size_t i = 0; i < thetas.size(); ++i) {
        if (j <= i) j = i + 1;
        while (j < ext.size() && ext[j] - thetas[i] < threshold) ++j;
        close_pairs += static_cast<int64_t>(j - i - 1);
    }
    // the wrap window may count a pair from both ends when N is tiny and
    // the threshold exceeds half the circle; threshold < 1/2 rules that out

    CorrelationReport rep;
    rep.s = s;
    rep.n = n;
    rep.r2 = 2.0 * static_cast<double>(close_pairs) / static_cast<double>(n);
    rep.target = 2.0 * s;
    return rep;
}

CantorCorrelationReport cantor_pair_correlation(const CantorSet& set, double alpha, double s,
                                                int64_t n_to) {
    if (n_to < 2) throw std::invalid_argument("need N >= 2");
    CantorCorrelationReport rep;

    // phases via exact dyadic frac(alpha * d * b^pos) tables
    std::vector<std::vector<double>> table;
    std::vector<BigInt> pow{BigInt(1)};
    auto entry = [&](int pos, int digit_index) {
        while (static_cast<int>(pow.size()) <= pos) pow.push_back(pow.back() * set.base);
        while (static_cast<int>(table.size()) <= pos) {
            int p = static_cast<int>(table.size());
            std::vector<double> row(set.digits.size());
            for (size_t i = 0; i < row.size(); ++i)
                row[i] = frac_times(alpha, set.digits[i] * pow[p]);
            table.push_back(std::move(row));
        }
        return table[pos][digit_index];
    };

    std::vector<double> thetas;
    thetas.reserve(n_to);
    ElementScanner scan(set, 0);
    for (int64_t n = 0; n < n_to; ++n) {
        double acc = 0.0;
        const auto& idx = scan.digit_indices();
        for (size_t c = 0; c < idx.size(); ++c) acc += entry(static_cast<int>(c), idx[c]);
        thetas.push_back(frac01(acc));
        if (n + 1 < n_to) scan.advance();
    }
    rep.correlation = pair_correlation(std::move(thetas), s);

    std::vector<BigInt> digit_values;
    for (int64_t d : set.digits) digit_values.push_back(d);
    auto energy = additive_energy(digit_values);
    const double size = static_cast<double>(set.radix());
    rep.epsilon = 3.0 - std::log(to_double(BigRat(energy.energy))) / std::log(size);
    rep.hypotheses_hold = set.base >= 5 && set.digits.front() >= 0 &&
                          set.digits.back() <= set.base / 2 && rep.epsilon > 0.0;
    rep.exceptional_dimension_bound =
        1.0 - rep.epsilon / (3.0 + std::log(static_cast<double>(set.base)) / std::log(size));
    return rep;
}

double seeded_unit_draw(uint64_t seed, uint64_t index) {
    // splitmix64 over (seed, index): deterministic everywhere
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace cantor
