#include "cantor/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cantor/errors.hpp"

namespace cantor {

double SpectralVector::norm() const {
    double sq = 0.0;
    for (const auto& c : components) sq += std::norm(c.coefficient);
    return std::sqrt(sq);
}

double spectral_distance(const SpectralVector& x, const SpectralVector& y) {
    if (x.components.size() != y.components.size())
        throw std::invalid_argument("component mismatch");
    double sq = 0.0;
    for (size_t i = 0; i < x.components.size(); ++i)
        sq += std::norm(x.components[i].coefficient - y.components[i].coefficient);
    return std::sqrt(sq);
}

SpectralVector ergodic_average(const CantorSet& set, const SpectralVector& x, int64_t n_to) {
    SpectralVector out = x;
    for (auto& comp : out.components) {
        if (comp.coefficient == Complex{0.0, 0.0}) continue;
        comp.coefficient *= weyl_sum(set, comp.alpha, comp.beta, n_to).value;
    }
    return out;
}

namespace {

// Past the witness scale t the factor angle sits at its fixed point and the
// product behaves geometrically, so the stabilization scan starts there
// (plateau-then-cliff frequencies like 1/b^45 would otherwise fool it).
Complex stabilized_riesz(const CantorSet& set, const Frequency& alpha, const Frequency& beta,
                         unsigned start) {
    Complex prev = riesz_product(set, alpha, beta, start + 1);
    int consecutive = 0;
    for (unsigned k = start + 2; k <= start + 41; ++k) {
        Complex cur = riesz_product(set, alpha, beta, k);
        consecutive = std::abs(cur - prev) < 1e-6 ? consecutive + 1 : 0;
        prev = cur;
        if (consecutive >= 3) return cur;
    }
    throw Unstable("Riesz product did not stabilize within 40 steps past the witness scale");
}

}  // namespace

SpectralVector predicted_limit(const CantorSet& set, const SpectralVector& x) {
    SpectralVector out = x;
    for (auto& comp : out.components) {
        auto cls = classify_limit(set, comp.alpha, comp.beta);
        switch (cls.tag) {
            case LimitClass::Tag::One:
                break;  // factor 1
            case LimitClass::Tag::NonzeroPossible:
                comp.coefficient *= stabilized_riesz(set, comp.alpha, comp.beta, cls.t);
                break;
            case LimitClass::Tag::Zero:
            case LimitClass::Tag::MayNotExist:
                comp.coefficient = {0.0, 0.0};
                break;
        }
    }
    return out;
}

BigInt IntPolynomial2::eval(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    for (const auto& t : terms) {
        BigInt v = t.coefficient;
        for (unsigned e = 0; e < t.dx; ++e) v *= x;
        for (unsigned e = 0; e < t.dy; ++e) v *= y;
        acc += v;
    }
    return acc;
}

SpectralVector polynomial_ergodic_average(const CantorSet& set, const IntPolynomial2& p1,
                                          const IntPolynomial2& p2, const SpectralVector& x,
                                          int64_t n_to) {
    SpectralVector out = x;
    for (auto& comp : out.components) {
        if (comp.coefficient == Complex{0.0, 0.0}) continue;
        std::vector<PhaseMonomial> poly;
        for (const auto& t : p1.terms)
            poly.push_back({t.dx, t.dy, comp.alpha.scaled(t.coefficient)});
        for (const auto& t : p2.terms)
            poly.push_back({t.dx, t.dy, comp.beta.scaled(t.coefficient)});
        comp.coefficient *= polynomial_weyl_sum(set, poly, n_to).value;
    }
    return out;
}

double PeriodicSet::density() const {
    return static_cast<double>(residues.size()) / static_cast<double>(modulus);
}

bool PeriodicSet::member(int64_t residue) const {
    residue %= modulus;
    if (residue < 0) residue += modulus;
    return std::binary_search(residues.begin(), residues.end(), residue);
}

double recurrence_density(const CantorSet& set, const PeriodicSet& a,
                          const std::vector<BigInt>& poly_coefficients, const BigInt& n_to) {
    if (a.modulus < 1 || a.residues.empty())
        throw std::invalid_argument("periodic set must be nonempty");
    if (poly_coefficients.empty() || poly_coefficients.front() != 0)
        throw HypothesisViolated("polynomial must have zero constant term");
    if (poly_coefficients.back() <= 0)
        throw HypothesisViolated("polynomial must have positive leading coefficient");
    if (n_to < 1) throw std::invalid_argument("need N >= 1");

    const auto q = static_cast<uint64_t>(a.modulus);
    ElementScanner scan(set, 0);
    ValueTracker val(set);
    ModTracker tracker(set, q);
    val.init(scan);
    tracker.init(scan);

    int64_t total = 0, hits = 0;
    while (true) {
        if (val.value() > n_to) break;
        if (val.value() >= 1) {
            ++total;
            const auto k_mod = static_cast<int64_t>(tracker.residue());
            if (a.member(k_mod)) {
                // p(k) mod q from k mod q (integer coefficients)
                BigInt shift = 0;
                BigInt pw = 1;
                for (const auto& c : poly_coefficients) {
                    shift += c % a.modulus * pw;
                    pw = pw * k_mod % a.modulus;
                }
                int64_t target = ((k_mod + shift) % a.modulus).convert_to<int64_t>();
                if (a.member(target)) ++hits;
            }
        }
        const auto& chs = scan.advance();
        val.apply(chs);
        tracker.apply(chs);
    }
    if (total == 0) throw std::invalid_argument("no members in [1, N]");
    return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace cantor
