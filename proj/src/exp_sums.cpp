#include "cantor/exp_sums.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

// Phase of theta * k_n as n scans the set.  Rational theta: exact residue
// arithmetic mod the denominator.  Real theta: per-position tables of
// frac(theta * d * b^pos), each entry exact up to one final rounding.
class ElementPhase {
public:
    ElementPhase(const CantorSet& set, const Frequency& theta) : set_(&set), theta_(theta) {
        if (theta.is_rational()) {
            const BigInt& den = denominator(theta.rat);
            if (den >= (BigInt(1) << 62))
                throw std::invalid_argument("rational frequency denominator too large for scans");
            q_ = den.convert_to<uint64_t>();
            p_ = (numerator(theta.rat) % den).convert_to<uint64_t>();
            tracker_ = std::make_unique<ModTracker>(set, q_);
        }
    }

    void init(const ElementScanner& scan) {
        if (tracker_) tracker_->init(scan);
    }
    void apply(const std::vector<ElementScanner::Change>& chs) {
        if (tracker_) tracker_->apply(chs);
    }

    double value(const ElementScanner& scan) {
        if (tracker_) {
            uint64_t num = mulmod_u64(p_, tracker_->residue(), q_);
            return static_cast<double>(num) / static_cast<double>(q_);
        }
        double acc = 0.0;
        const auto& idx = scan.digit_indices();
        for (size_t c = 0; c < idx.size(); ++c) acc += table(static_cast<int>(c), idx[c]);
        return frac01(acc);
    }

private:
    double table(int pos, int digit_index) {
        while (static_cast<int>(pow_.size()) <= pos)
            pow_.push_back(pow_.empty() ? BigInt(1) : BigInt(pow_.back() * set_->base));
        while (static_cast<int>(tab_.size()) <= pos) {
            int p = static_cast<int>(tab_.size());
            std::vector<double> row(set_->digits.size());
            for (size_t i = 0; i < row.size(); ++i)
                row[i] = frac_times(theta_.real, set_->digits[i] * pow_[p]);
            tab_.push_back(std::move(row));
        }
        return tab_[pos][digit_index];
    }

    const CantorSet* set_;
    Frequency theta_;
    uint64_t p_ = 0, q_ = 1;
    std::unique_ptr<ModTracker> tracker_;
    std::vector<BigInt> pow_;
    std::vector<std::vector<double>> tab_;
};

// Phase of theta * s_b(k_n); digit sums are small, so memoize per value.
class SumDigitsPhase {
public:
    SumDigitsPhase(const Frequency& theta) : theta_(theta) {
        if (theta.is_rational()) {
            const BigInt& den = denominator(theta.rat);
            if (den >= (BigInt(1) << 62))
                throw std::invalid_argument("rational frequency denominator too large for scans");
            q_ = den.convert_to<uint64_t>();
            p_ = (numerator(theta.rat) % den).convert_to<uint64_t>();
        }
    }

    double value(int64_t sum_digits) {
        if (theta_.is_rational()) {
            uint64_t s = static_cast<uint64_t>(sum_digits) % q_;
            return static_cast<double>(mulmod_u64(p_, s, q_)) / static_cast<double>(q_);
        }
        auto it = memo_.find(sum_digits);
        if (it != memo_.end()) return it->second;
        double v = frac_times(theta_.real, BigInt(sum_digits));
        memo_.emplace(sum_digits, v);
        return v;
    }

private:
    Frequency theta_;
    uint64_t p_ = 0, q_ = 1;
    std::unordered_map<int64_t, double> memo_;
};

WeylSumResult finish(const ComplexSum& acc, int64_t count) {
    WeylSumResult r;
    r.count = count;
    r.value = acc.value() / static_cast<double>(count);
    r.magnitude = std::abs(r.value);
    return r;
}

}  // namespace

Complex lhat(const CantorSet& set, const Frequency& theta) {
    ComplexSum acc;
    if (theta.is_rational()) {
        const BigInt& p = numerator(theta.rat);
        const BigInt& q = denominator(theta.rat);
        for (int64_t d : set.digits) {
            BigRat angle((d * p) % q, q);
            acc.add(unit_phase(to_double(mod1(angle))));
        }
    } else {
        for (int64_t d : set.digits) acc.add(unit_phase(frac_times(theta.real, BigInt(d))));
    }
    return acc.value() / static_cast<double>(set.radix());
}

Complex riesz_product(const CantorSet& set, const Frequency& alpha, const Frequency& beta,
                      unsigned k) {
    Complex prod{1.0, 0.0};
    if (alpha.is_rational()) {
        Frequency aj = alpha;
        for (unsigned j = 0; j < k; ++j) {
            prod *= lhat(set, aj.plus(beta));
            aj = aj.scaled(set.base);
        }
        return prod;
    }
    // real alpha: compute frac(alpha * b^j) from scratch each time (exact in
    // the dyadic sense) instead of iterating x -> b*x mod 1, which amplifies
    // rounding error by b per step
    BigInt bj = 1;
    for (unsigned j = 0; j < k; ++j) {
        Frequency aj = Frequency::irrational(frac_times(alpha.real, bj));
        prod *= lhat(set, aj.plus(beta));
        bj *= set.base;
    }
    return prod;
}

WeylSumResult weyl_sum_window(const CantorSet& set, const Frequency& alpha, const Frequency& beta,
                              int64_t m_from, int64_t n_to) {
    if (m_from < 0 || n_to <= m_from) throw std::invalid_argument("need 0 <= M < N");
    ElementPhase pa(set, alpha);
    SumDigitsPhase pb(beta);
    ElementScanner scan(set, m_from);
    pa.init(scan);
    ComplexSum acc;
    for (int64_t n = m_from; n < n_to; ++n) {
        double t = frac01(pa.value(scan) + pb.value(scan.sum_digits()));
        acc.add(unit_phase(t));
        if (n + 1 < n_to) pa.apply(scan.advance());
    }
    return finish(acc, n_to - m_from);
}

WeylSumResult polynomial_weyl_sum(const CantorSet& set, const std::vector<PhaseMonomial>& poly,
                                  int64_t n_to) {
    if (n_to < 1) throw std::invalid_argument("need N >= 1");
    bool needs_value = false;
    for (const auto& m : poly) {
        if (m.dx + m.dy > kMaxPolynomialDegree)
            throw DegreeTooLarge("monomial degree beyond cap " +
                                 std::to_string(kMaxPolynomialDegree));
        if (!m.coeff.is_rational() && m.dx > 0) needs_value = true;
    }

    struct RatTerm {
        unsigned dx, dy;
        uint64_t p, q;
        std::unique_ptr<ModTracker> tracker;  // k_n mod q, present when dx > 0
    };
    struct RealTerm {
        unsigned dx, dy;
        double coeff;
    };
    std::vector<RatTerm> rats;
    std::vector<RealTerm> reals;
    for (const auto& m : poly) {
        if (m.coeff.is_rational()) {
            const BigInt& den = denominator(m.coeff.rat);
            if (den >= (BigInt(1) << 62))
                throw std::invalid_argument("rational coefficient denominator too large");
            RatTerm t;
            t.dx = m.dx;
            t.dy = m.dy;
            t.q = den.convert_to<uint64_t>();
            t.p = (numerator(m.coeff.rat) % den).convert_to<uint64_t>();
            if (t.dx > 0 && t.q > 1) t.tracker = std::make_unique<ModTracker>(set, t.q);
            rats.push_back(std::move(t));
        } else {
            reals.push_back({m.dx, m.dy, m.coeff.real});
        }
    }

    ElementScanner scan(set, 0);
    ValueTracker val(set);
    if (needs_value) val.init(scan);
    for (auto& t : rats)
        if (t.tracker) t.tracker->init(scan);

    ComplexSum acc;
    for (int64_t n = 0; n < n_to; ++n) {
        const int64_t sb = scan.sum_digits();
        double phase = 0.0;
        for (auto& t : rats) {
            if (t.q == 1) continue;
            uint64_t kq = t.dx == 0 ? 1 : powmod_u64(t.tracker->residue(), t.dx, t.q);
            uint64_t sq = t.dy == 0 ? 1 : powmod_u64(static_cast<uint64_t>(sb) % t.q, t.dy, t.q);
            uint64_t v = mulmod_u64(t.p, mulmod_u64(kq, sq, t.q), t.q);
            phase += static_cast<double>(v) / static_cast<double>(t.q);
        }
        for (const auto& t : reals) {
            BigInt term = 1;
            for (unsigned e = 0; e < t.dx; ++e) term *= val.value();
            for (unsigned e = 0; e < t.dy; ++e) term *= sb;
            phase += frac_times(t.coeff, term);
        }
        acc.add(unit_phase(frac01(phase)));
        if (n + 1 < n_to) {
            const auto& chs = scan.advance();
            if (needs_value) val.apply(chs);
            for (auto& t : rats)
                if (t.tracker) t.tracker->apply(chs);
        }
    }
    return finish(acc, n_to);
}

namespace {

// Minimal t with den | b^t, if every prime of den divides b.
bool badic_order(const BigInt& den, int64_t base, unsigned& t_out) {
    BigInt g = den;
    while (g > 1) {
        BigInt u = gcd(g, BigInt(base));
        if (u == 1) return false;  // den has a prime factor outside b
        g /= u;
    }
    BigInt m = 1 % den;
    unsigned t = 0;
    while (m != 0) {
        m = (m * base) % den;
        ++t;
    }
    t_out = t;
    return true;
}

}  // namespace

LimitClass classify_limit(const CantorSet& set, const Frequency& alpha, const Frequency& beta) {
    LimitClass out;
    if (alpha.is_zero() && beta.is_zero()) {
        out.tag = LimitClass::Tag::One;
        return out;
    }
    if (!alpha.is_rational() || !beta.is_rational()) {
        out.tag = LimitClass::Tag::Zero;
        return out;
    }

    const int64_t s = set.step;
    const bool divides_all = (set.digits.front() % s) == 0;  // s | d for all d in D
    const BigInt bm1 = set.base - 1;

    // witness search: s*beta = -a/(b-1) pins a; then s*alpha - a/(b-1) must
    // be b-adic, r/b^t with minimal t
    const BigRat sa = mod1(BigRat(s) * alpha.rat);
    const BigRat sb = mod1(BigRat(s) * beta.rat);
    bool witness = false;
    BigInt a = 0, r = 0;
    unsigned t = 0;
    {
        BigRat target = mod1(-sb);  // a/(b-1) mod 1
        const BigInt& den = denominator(target);
        if (bm1 % den == 0) {
            a = numerator(target) * (bm1 / den);
            BigRat rest = mod1(sa - BigRat(a, bm1));
            if (badic_order(denominator(rest), set.base, t)) {
                r = numerator(rest) * (pow_bigint(set.base, t) / denominator(rest));
                witness = true;
            }
        }
    }

    if (s == 1 || divides_all) {
        out.tag = witness ? LimitClass::Tag::NonzeroPossible : LimitClass::Tag::Zero;
    } else {
        out.tag = witness ? LimitClass::Tag::MayNotExist : LimitClass::Tag::Zero;
    }
    if (witness) {
        out.a = a;
        out.r = r;
        out.t = t;
    }
    return out;
}

}  // namespace cantor
