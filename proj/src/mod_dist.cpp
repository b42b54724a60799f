#include "cantor/mod_dist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cantor/errors.hpp"

namespace cantor {

double ModDistribution::mass(int64_t a) const {
    a %= modulus;
    if (a < 0) a += modulus;
    if (kind == Kind::Predicted) return to_double(exact[a]);
    return static_cast<double>(counts[a]) / static_cast<double>(sample_size);
}

std::vector<double> ModDistribution::masses() const {
    std::vector<double> m(modulus);
    for (int64_t a = 0; a < modulus; ++a) m[a] = mass(a);
    return m;
}

BigRat ModDistribution::exact_mass(int64_t a) const {
    a %= modulus;
    if (a < 0) a += modulus;
    if (kind == Kind::Predicted) return exact[a];
    return BigRat(counts[a], sample_size);
}

double total_variation(const ModDistribution& p, const ModDistribution& q) {
    if (p.modulus != q.modulus) throw std::invalid_argument("mismatched moduli");
    double tv = 0.0;
    for (int64_t a = 0; a < p.modulus; ++a) tv += std::abs(p.mass(a) - q.mass(a));
    return tv / 2.0;
}

ModDistribution empirical_mod_distribution(const CantorSet& set, int64_t q, int64_t n_to) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (q > 10000000) throw std::invalid_argument("modulus too large for a desk-scale table");
    if (n_to < 1) throw std::invalid_argument("need N >= 1");
    ModDistribution d;
    d.modulus = q;
    d.kind = ModDistribution::Kind::Empirical;
    d.counts.assign(q, 0);
    d.sample_size = n_to;
    ElementScanner scan(set, 0);
    ModTracker tracker(set, static_cast<uint64_t>(q));
    tracker.init(scan);
    for (int64_t n = 0; n < n_to; ++n) {
        ++d.counts[static_cast<int64_t>(tracker.residue())];
        if (n + 1 < n_to) tracker.apply(scan.advance());
    }
    return d;
}

namespace {

// Law of the low block C cap [0, b^j) mod u by dynamic programming over
// digit positions: exact counts over the |D|^j digit patterns.
std::vector<BigInt> block_counts_mod(const CantorSet& set, int64_t u, int64_t j) {
    std::vector<BigInt> cur(u, BigInt(0));
    cur[0] = 1;
    int64_t pw = 1 % u;
    for (int64_t c = 0; c < j; ++c) {
        std::vector<BigInt> next(u, BigInt(0));
        for (int64_t x = 0; x < u; ++x) {
            if (cur[x] == 0) continue;
            for (int64_t d : set.digits) next[(x + d % u * pw) % u] += cur[x];
        }
        cur = std::move(next);
        pw = pw * (set.base % u) % u;
    }
    return cur;
}

// q = r * u with gcd(r, b) = 1 and every prime of u dividing b.
void split_base_part(int64_t q, int64_t base, int64_t& r, int64_t& u) {
    r = q;
    int64_t g = std::gcd(r, base);
    while (g > 1) {
        r /= g;
        g = std::gcd(r, base);
    }
    u = q / r;
}

int64_t minimal_block_exponent(int64_t u, int64_t base) {
    int64_t j = 0, m = 1 % u;
    while (m != 0) {
        m = m * (base % u) % u;
        ++j;
    }
    return j;
}

}  // namespace

ModDistribution predicted_mod_distribution(const CantorSet& set, int64_t q) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (q > 10000000) throw std::invalid_argument("modulus too large for a desk-scale table");
    if (!set.zero_digit())
        throw HypothesisViolated("predicted_mod_distribution requires 0 in D");

    // 0 in D forces s | d for every digit; reduce to the step-one set D/s
    // and push its law forward under x -> s*x mod q
    const int64_t s = set.step;
    std::vector<int64_t> reduced;
    reduced.reserve(set.digits.size());
    for (int64_t d : set.digits) reduced.push_back(d / s);
    const CantorSet base_set = CantorSet::create(set.base, reduced);

    int64_t r = 1, u = 1;
    split_base_part(q, set.base, r, u);
    const int64_t j = minimal_block_exponent(u, set.base);

    // step-one law on Z_q: block law mod u, uniform mod r, glued by CRT
    std::vector<BigInt> ucounts = block_counts_mod(base_set, u, j);
    BigInt total = pow_bigint(base_set.radix(), static_cast<unsigned>(j));

    ModDistribution d;
    d.modulus = q;
    d.kind = ModDistribution::Kind::Predicted;
    d.exact.assign(q, BigRat(0));
    for (int64_t c = 0; c < q; ++c) {
        BigRat step_one_mass = BigRat(ucounts[c % u], total) / r;
        d.exact[c * (s % q) % q] += step_one_mass;
    }
    return d;
}

double zero_residue_density(const CantorSet& set, int64_t q, int64_t n_to) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (!set.zero_digit()) throw HypothesisViolated("zero_residue_density requires 0 in D");
    auto d = empirical_mod_distribution(set, q, n_to);
    return d.mass(0);
}

ModDistribution sum_digits_mod_distribution(const CantorSet& set, int64_t q, int64_t n_to) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (q > 10000000) throw std::invalid_argument("modulus too large for a desk-scale table");
    if (std::gcd(q, set.base) != 1)
        throw HypothesisViolated("sum_digits_mod_distribution requires gcd(q, b) = 1");
    if (n_to < 1) throw std::invalid_argument("need N >= 1");
    ModDistribution d;
    d.modulus = q;
    d.kind = ModDistribution::Kind::Empirical;
    d.counts.assign(q, 0);
    d.sample_size = n_to;
    ElementScanner scan(set, 0);
    for (int64_t n = 0; n < n_to; ++n) {
        ++d.counts[scan.sum_digits() % q];
        if (n + 1 < n_to) scan.advance();
    }
    return d;
}

SubgroupUniformity subgroup_uniformity(const CantorSet& set, const ModDistribution& dist) {
    SubgroupUniformity out;
    const int64_t q = dist.modulus;
    out.generator = std::gcd(q, set.step);
    out.subgroup_size = q / out.generator;
    out.support_inside = true;
    double tv = 0.0;
    const double uniform = 1.0 / static_cast<double>(out.subgroup_size);
    for (int64_t a = 0; a < q; ++a) {
        if (a % out.generator == 0) {
            tv += std::abs(dist.mass(a) - uniform);
        } else if (dist.mass(a) > 0.0) {
            out.support_inside = false;
            tv += dist.mass(a);
        }
    }
    out.tv_to_uniform = tv / 2.0;
    return out;
}

double JointDistribution::mass(int64_t i, int64_t j) const {
    return static_cast<double>(counts[i][j]) / static_cast<double>(sample_size);
}

std::vector<double> JointDistribution::value_marginal() const {
    std::vector<double> m(mod_value, 0.0);
    for (int64_t i = 0; i < mod_value; ++i)
        for (int64_t j = 0; j < mod_digit_sum; ++j) m[i] += mass(i, j);
    return m;
}

JointDistribution joint_mod_distribution(const CantorSet& set, int64_t a, int64_t a2,
                                         int64_t n_to) {
    if (a < 1 || a2 < 1) throw std::invalid_argument("moduli must be positive");
    if (a * a2 > 10000000) throw std::invalid_argument("joint table too large");
    if (set.step > 1 && set.digits.front() % set.step != 0)
        throw HypothesisViolated("joint law needs s = 1 or s | d for all digits");
    if (n_to < 1) throw std::invalid_argument("need N >= 1");
    JointDistribution joint;
    joint.mod_value = a;
    joint.mod_digit_sum = a2;
    joint.sample_size = n_to;
    joint.counts.assign(a, std::vector<int64_t>(a2, 0));
    ElementScanner scan(set, 0);
    ModTracker tracker(set, static_cast<uint64_t>(a));
    tracker.init(scan);
    for (int64_t n = 0; n < n_to; ++n) {
        ++joint.counts[static_cast<int64_t>(tracker.residue())][scan.sum_digits() % a2];
        if (n + 1 < n_to) tracker.apply(scan.advance());
    }
    return joint;
}

bool joint_uniformity_criterion(const CantorSet& set, int64_t a, int64_t a2) {
    const int64_t s = set.step;
    int64_t prod = s % a * (set.base % a) % a * ((set.base - 1) % a) % a;
    return std::gcd(prod, a) == 1 && std::gcd(s, a2) == 1;
}

double joint_tv_to_uniform(const JointDistribution& joint) {
    const double uniform =
        1.0 / (static_cast<double>(joint.mod_value) * static_cast<double>(joint.mod_digit_sum));
    double tv = 0.0;
    for (int64_t i = 0; i < joint.mod_value; ++i)
        for (int64_t j = 0; j < joint.mod_digit_sum; ++j)
            tv += std::abs(joint.mass(i, j) - uniform);
    return tv / 2.0;
}

bool ResidueIndexSet::member(int64_t n) const {
    if (family.contains_index(n)) return true;
    return std::find(unresolved.begin(), unresolved.end(), n) != unresolved.end();
}

namespace {

// All residues mod q attained by members of the set, of any length; grown
// position by position until stable across a full period of b^c mod q.
std::vector<int64_t> reachable_residues(const CantorSet& set, int64_t q) {
    std::vector<char> in(q, 0);
    in[0] = 1;
    size_t size = 1;
    // (preperiod, period) of the sequence b^c mod q
    std::vector<int64_t> seen_pos(q, -1);
    int64_t pw = 1 % q, c = 0;
    while (seen_pos[pw] < 0) {
        seen_pos[pw] = c;
        pw = pw * (set.base % q) % q;
        ++c;
    }
    const int64_t preperiod = seen_pos[pw];
    const int64_t period = c - seen_pos[pw];

    pw = 1 % q;
    int64_t stable_run = 0;
    for (int64_t pos = 0; stable_run < period && pos < preperiod + period * (q + 2); ++pos) {
        size_t before = size;
        std::vector<int64_t> fresh;
        for (int64_t x = 0; x < q; ++x) {
            if (!in[x]) continue;
            for (int64_t d : set.digits) {
                int64_t y = (x + d % q * pw) % q;
                if (!in[y]) fresh.push_back(y);
            }
        }
        for (int64_t y : fresh)
            if (!in[y]) {
                in[y] = 1;
                ++size;
            }
        stable_run = (size == before && pos >= preperiod) ? stable_run + 1 : 0;
        pw = pw * (set.base % q) % q;
    }
    std::vector<int64_t> out;
    for (int64_t x = 0; x < q; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

}  // namespace

ResidueIndexSet residue_index_set(const CantorSet& set, int64_t r, int64_t r2, int64_t q,
                                  int64_t truncation) {
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    if (q > 1000000) throw std::invalid_argument("modulus too large for a desk-scale search");
    if (truncation < 1) throw std::invalid_argument("truncation must be positive");
    if (!set.zero_digit())
        throw HypothesisViolated("residue_index_set requires 0 in D (self-similar indexing)");
    r %= q;
    if (r < 0) r += q;
    r2 %= q;
    if (r2 < 0) r2 += q;

    ResidueIndexSet out;
    out.family.radix = set.radix();
    out.family.truncation = truncation;

    // A progression {j + m |D|^i : m >= 0} lies inside N(r,r2,q) iff
    //   (a) j < |D|^i, so k_{j + m|D|^i} = b^i k_m + k_j splits,
    //   (b) b^i k_m = 0 mod q for every m, i.e. b^i annihilates every
    //       reachable residue of the set mod q, and
    //   (c) s_b(k_m) = 0 mod q for every m, i.e. q divides every digit.
    // j itself supplies the residues (r, r2).  Offsets that qualify but
    // cannot be certified this way are reported unresolved.
    const bool digit_sums_vanish =
        std::all_of(set.digits.begin(), set.digits.end(), [&](int64_t d) { return d % q == 0; });

    int64_t value_exponent = -1;  // least i with b^i * reachable = {0}, if any
    if (digit_sums_vanish) {
        auto reach = reachable_residues(set, q);
        std::vector<char> visited(q, 0);
        int64_t pw = 1 % q;
        for (int64_t i = 0;; ++i) {
            bool all_zero = true;
            for (int64_t v : reach)
                if (v * pw % q != 0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) {
                value_exponent = i;
                break;
            }
            if (visited[pw]) break;  // b^i mod q has cycled with no success
            visited[pw] = 1;
            pw = pw * (set.base % q) % q;
        }
    }

    ElementScanner scan(set, 0);
    ModTracker tracker(set, static_cast<uint64_t>(q));
    tracker.init(scan);
    unsigned prev_exponent = 0;
    for (int64_t n = 0; n < truncation; ++n) {
        bool hit = static_cast<int64_t>(tracker.residue()) == r && scan.sum_digits() % q == r2;
        if (hit && !out.family.contains_index(n)) {
            if (value_exponent < 0) {
                out.unresolved.push_back(n);
            } else {
                unsigned i = std::max<unsigned>(prev_exponent, static_cast<unsigned>(value_exponent));
                int64_t block = 1;
                for (unsigned e = 0; e < i; ++e) block *= set.radix();
                while (block <= n) {
                    block *= set.radix();
                    ++i;
                }
                out.family.progressions.push_back({n, i});
                prev_exponent = i;  // monotone exponents keep the family disjoint
            }
        }
        if (n + 1 < truncation) tracker.apply(scan.advance());
    }
    return out;
}

}  // namespace cantor
