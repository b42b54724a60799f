#include "cantor/intersective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cantor/digit_core.hpp"
#include "cantor/errors.hpp"

namespace cantor {

namespace {

// Fixed-width bitset over uint64 words.
struct BitRow {
    std::vector<uint64_t> w;
    explicit BitRow(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int popcount() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    int lowest() const {  // -1 when empty
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j]) return static_cast<int>(j * 64 + __builtin_ctzll(w[j]));
        return -1;
    }
    void and_not(const BitRow& o) {
        for (size_t j = 0; j < w.size(); ++j) w[j] &= ~o.w[j];
    }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
};

// Exact maximum independent set by branch and bound on candidate bitsets.
// Vertices are pre-permuted by decreasing degree; the greedy solution seeds
// the incumbent, and a greedy clique cover of the candidates bounds the
// subtree (an independent set meets each clique at most once).
class MisSolver {
public:
    MisSolver(int n, const std::vector<BitRow>& adj) : n_(n), adj_(&adj) {}

    std::pair<int, std::vector<int>> solve() {
        best_ = greedy_seed();
        BitRow all(n_);
        for (int v = 0; v < n_; ++v) all.set(v);
        std::vector<int> current;
        current.reserve(n_);
        expand(all, current);
        return {static_cast<int>(best_.size()), best_};
    }

private:
    std::vector<int> greedy_seed() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v) {
            bool ok = true;
            for (int u : out)
                if ((*adj_)[v].test(u)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(v);
        }
        return out;
    }

    int clique_cover_bound(const BitRow& candidates) const {
        // cover[i]: vertices adjacent to every member of clique i so far
        cover_.clear();
        for (size_t w = 0; w < candidates.w.size(); ++w) {
            uint64_t bits = candidates.w[w];
            while (bits) {
                int v = static_cast<int>(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                bool placed = false;
                for (auto& clique : cover_) {
                    if (clique.test(v)) {
                        for (size_t j = 0; j < clique.w.size(); ++j)
                            clique.w[j] &= (*adj_)[v].w[j];
                        placed = true;
                        break;
                    }
                }
                if (!placed) cover_.push_back((*adj_)[v]);
            }
        }
        return static_cast<int>(cover_.size());
    }

    void expand(BitRow candidates, std::vector<int>& current) {
        while (true) {
            int slack = static_cast<int>(best_.size()) - static_cast<int>(current.size());
            if (candidates.popcount() <= slack) break;  // popcount is cheaper, try it first
            if (clique_cover_bound(candidates) <= slack) return;
            int v = candidates.lowest();
            if (v < 0) break;
            candidates.reset(v);
            current.push_back(v);
            BitRow next = candidates;
            next.and_not((*adj_)[v]);
            if (!next.any()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            // fall through: the loop iteration is the "skip v" branch
        }
        if (current.size() > best_.size()) best_ = current;
    }

    int n_;
    const std::vector<BitRow>* adj_;
    std::vector<int> best_;
    mutable std::vector<BitRow> cover_;
};

std::vector<BitRow> difference_adjacency(const std::vector<int64_t>& forbidden, int64_t n) {
    std::vector<BitRow> adj(n, BitRow(static_cast<int>(n)));
    for (int64_t f : forbidden) {
        if (f < 1 || f >= n) continue;
        for (int64_t v = 0; v + f < n; ++v) {
            adj[v].set(static_cast<int>(v + f));
            adj[v + f].set(static_cast<int>(v));
        }
    }
    return adj;
}

std::vector<int> degree_order(const std::vector<BitRow>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].popcount() > adj[b].popcount(); });
    return order;
}

// Greedy independent set plus 1-out-2-in local improvement, for lower-bound
// mode past the exact cap.
std::vector<int> greedy_local_search(const std::vector<BitRow>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order = degree_order(adj);
    std::reverse(order.begin(), order.end());  // low degree first packs better
    std::vector<char> in(n, 0);
    for (int v : order) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (in[u] && adj[v].test(u)) ok = false;
        if (ok) in[v] = 1;
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (int drop = 0; drop < n && !improved; ++drop) {
            if (!in[drop]) continue;
            in[drop] = 0;
            std::vector<int> adds;
            for (int v = 0; v < n; ++v) {
                if (in[v] || v == drop) continue;
                bool ok = true;
                for (int u = 0; u < n && ok; ++u)
                    if (in[u] && adj[v].test(u)) ok = false;
                for (int u : adds)
                    if (adj[v].test(u)) ok = false;
                if (ok) adds.push_back(v);
            }
            if (adds.size() >= 2) {
                for (int v : adds) in[v] = 1;
                improved = true;
            } else {
                in[drop] = 1;
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace

AvoidingSetResult max_avoiding_set(const DifferenceFamily& h, int64_t n,
                                   const SolverOptions& opts) {
    if (n < 1) throw std::invalid_argument("N must be positive");
    auto adj = difference_adjacency(h.forbidden, n);

    AvoidingSetResult res;
    if (n > opts.exact_cap) {
        if (!opts.allow_lower_bound)
            throw CapExceeded("N = " + std::to_string(n) + " beyond exact cap " +
                              std::to_string(opts.exact_cap));
        auto sol = greedy_local_search(adj);
        res.exact = false;
        res.size = static_cast<int64_t>(sol.size());
        for (int v : sol) res.witness.push_back(v + 1);
        std::sort(res.witness.begin(), res.witness.end());
        return res;
    }

    // permute vertices by decreasing degree so the solver picks dense ones first
    auto order = degree_order(adj);
    std::vector<int> place(n);
    for (int i = 0; i < n; ++i) place[order[i]] = i;
    std::vector<BitRow> padj(n, BitRow(static_cast<int>(n)));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (adj[v].test(u)) padj[place[v]].set(place[u]);

    MisSolver solver(static_cast<int>(n), padj);
    auto [size, witness] = solver.solve();
    res.exact = true;
    res.size = size;
    for (int v : witness) res.witness.push_back(order[v] + 1);  // back to 1-based [N]
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

std::vector<RatioPoint> intersective_ratio_profile(const CantorSet& set,
                                                   const std::vector<unsigned>& exponents,
                                                   const SolverOptions& opts) {
    std::vector<RatioPoint> out;
    for (unsigned e : exponents) {
        BigInt bound = pow_bigint(set.base, e);
        // the dense adjacency grows as b^2n; keep profile points desk-sized
        if (bound > 20000) throw std::invalid_argument("b^n too large for a profile point");
        int64_t n = bound.convert_to<int64_t>();
        DifferenceFamily h;
        h.source = set.format() + " members in [1," + std::to_string(n) + ")";
        for (int64_t v = 1; v < n; ++v)
            if (contains(set, v)) h.forbidden.push_back(v);
        auto sol = max_avoiding_set(h, n, opts);
        RatioPoint p;
        p.exponent = e;
        p.n = n;
        p.avoiding_size = sol.size;
        p.ratio = static_cast<double>(sol.size) / static_cast<double>(n);
        p.exact = sol.exact;
        p.witness = sol.witness;
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<int64_t> normalize_residues(int64_t b, std::vector<int64_t> v) {
    for (auto& x : v) {
        x %= b;
        if (x < 0) x += b;
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::optional<KernelWitness> antipodal_kernel(int64_t b, const std::vector<int64_t>& digit_residues) {
    auto d = normalize_residues(b, digit_residues);
    if (!std::binary_search(d.begin(), d.end(), int64_t(0))) return std::nullopt;
    for (int64_t x : d) {
        if (x == 0) continue;
        if (std::binary_search(d.begin(), d.end(), (b - x) % b)) {
            KernelWitness w;
            w.residues = {0, x};
            w.exponent = std::log(2.0) / std::log(static_cast<double>(b));
            return w;
        }
    }
    return std::nullopt;
}

std::optional<KernelWitness> find_difference_kernel(int64_t b,
                                                    std::vector<int64_t> digit_residues) {
    if (b < 2 || b > 4096) throw std::invalid_argument("kernel search needs 2 <= b <= 4096");
    auto d = normalize_residues(b, digit_residues);

    // clique search on the compatibility graph: x ~ y when both x-y and y-x
    // are digits mod b; a maximum independent set of the complement
    std::vector<BitRow> compl_adj(b, BitRow(static_cast<int>(b)));
    auto allowed = [&](int64_t x, int64_t y) {
        int64_t fwd = (x - y % b + b) % b;
        int64_t bwd = (y - x % b + b) % b;
        return std::binary_search(d.begin(), d.end(), fwd) &&
               std::binary_search(d.begin(), d.end(), bwd);
    };
    for (int64_t x = 0; x < b; ++x)
        for (int64_t y = 0; y < b; ++y)
            if (x != y && !allowed(x, y)) compl_adj[x].set(static_cast<int>(y));

    auto order = degree_order(compl_adj);
    std::vector<int> place(b);
    for (int64_t i = 0; i < b; ++i) place[order[i]] = static_cast<int>(i);
    std::vector<BitRow> padj(b, BitRow(static_cast<int>(b)));
    for (int64_t v = 0; v < b; ++v)
        for (int64_t u = 0; u < b; ++u)
            if (compl_adj[v].test(static_cast<int>(u))) padj[place[v]].set(place[u]);

    MisSolver solver(static_cast<int>(b), padj);
    auto [size, witness] = solver.solve();
    if (size <= 1) return std::nullopt;
    KernelWitness w;
    for (int v : witness) w.residues.push_back(order[v]);
    std::sort(w.residues.begin(), w.residues.end());
    w.exponent = std::log(static_cast<double>(size)) / std::log(static_cast<double>(b));
    return w;
}

BigRat CosinePolynomial::a0() const {
    auto it = coefficients.find(0);
    return it == coefficients.end() ? BigRat(0) : it->second;
}

BigRat CosinePolynomial::value_at_zero() const {
    BigRat sum = 0;
    for (const auto& [n, a] : coefficients) sum += a;
    return sum;
}

double CosinePolynomial::eval(double x) const {
    double acc = 0.0;
    const double tau = 6.283185307179586476925286766559;
    for (const auto& [n, a] : coefficients)
        acc += to_double(a) * std::cos(tau * static_cast<double>(n) * x);
    return acc;
}

bool signed_digit_representable(const BigInt& n, int64_t b,
                                const std::vector<int64_t>& residue_classes) {
    auto classes = normalize_residues(b, residue_classes);
    std::set<BigInt> visited;
    std::vector<BigInt> stack{n};
    while (!stack.empty()) {
        BigInt v = stack.back();
        stack.pop_back();
        if (v == 0) return true;
        if (!visited.insert(v).second) continue;
        BigInt m = v % b;
        if (m < 0) m += b;
        if (!std::binary_search(classes.begin(), classes.end(), m.convert_to<int64_t>())) continue;
        stack.push_back((v - m) / b);        // digit m
        stack.push_back((v - (m - b)) / b);  // digit m - b
    }
    return false;
}

VdcPolynomial vdc_polynomial(int64_t b, std::vector<int64_t> kernel_residues, unsigned levels,
                             size_t support_cap) {
    if (b < 3) throw std::invalid_argument("base must be >= 3");
    auto s_norm = normalize_residues(b, kernel_residues);
    if (s_norm.size() < 2) throw std::invalid_argument("kernel needs at least two residues");

    // per-level factor |sum_s e(s b^j x)|^2 / |S|^2
    //   = sum over pairs (s,s') of e((s-s') b^j x) / |S|^2
    std::map<int64_t, int64_t> level_diffs;
    for (int64_t s : s_norm)
        for (int64_t t : s_norm) ++level_diffs[s - t];
    const BigRat level_scale(1, BigInt(s_norm.size()) * BigInt(s_norm.size()));

    std::map<int64_t, BigRat> expo;
    expo[0] = 1;
    for (unsigned j = 0; j <= levels; ++j) {
        BigInt pw_big = pow_bigint(b, j);
        if (pw_big * (b - 1) > (int64_t(1) << 60)) throw SupportTooLarge("frequency overflow");
        int64_t pw = pw_big.convert_to<int64_t>();
        std::map<int64_t, BigRat> next;
        for (const auto& [freq, coef] : expo)
            for (const auto& [diff, count] : level_diffs)
                next[freq + diff * pw] += coef * count * level_scale;
        if (next.size() > support_cap)
            throw SupportTooLarge("expanded support exceeds " + std::to_string(support_cap));
        expo = std::move(next);
    }

    VdcPolynomial out;
    out.poly.degree_bound = pow_bigint(b, levels + 1).convert_to<int64_t>();
    for (const auto& [freq, coef] : expo) {
        if (coef == 0) continue;
        if (freq < 0) continue;  // conjugate pair folds onto the positive frequency
        out.poly.coefficients[freq] += freq == 0 ? coef : 2 * coef;
    }

    // the nonzero support must consist of signed-digit numbers over S - S
    std::vector<int64_t> diff_classes;
    for (int64_t x : s_norm)
        for (int64_t y : s_norm) diff_classes.push_back(x - y);
    for (const auto& [freq, coef] : out.poly.coefficients) {
        if (freq == 0 || coef == 0) continue;
        if (!signed_digit_representable(BigInt(freq), b, diff_classes)) {
            out.support_in_difference_set = false;
            out.support_violations.push_back(freq);
        }
    }
    return out;
}

VdcBound vdc_bound(int64_t b, const std::vector<int64_t>& kernel_residues, unsigned levels) {
    auto s_norm = normalize_residues(b, kernel_residues);
    auto expanded = vdc_polynomial(b, s_norm, levels);
    VdcBound out;
    out.degree_bound = expanded.poly.degree_bound;
    out.a0 = expanded.poly.a0();
    out.exponent =
        std::log(static_cast<double>(s_norm.size())) / std::log(static_cast<double>(b));
    // a0 <= N^(-c) <=> log(1/a0) / log N >= c
    double lhs = -std::log(to_double(out.a0)) / std::log(static_cast<double>(out.degree_bound));
    out.bound_holds = lhs >= out.exponent - 1e-12;
    return out;
}

DimensionSavings dimension_power_savings(int64_t b, int64_t k) {
    if (4 * k + 1 > b - 1) throw std::invalid_argument("need 4k+1 <= b-1");
    DimensionSavings out;
    out.dim = std::log(static_cast<double>(4 * k + 1)) / std::log(static_cast<double>(b));
    out.savings = std::log(static_cast<double>(2 * k + 1)) / std::log(static_cast<double>(b));
    return out;
}

IntersectiveReport is_intersective_structure(const CantorSet& set) {
    IntersectiveReport rep;
    rep.ip = set.zero_digit();
    rep.kernel = find_difference_kernel(set.base, set.digits);

    if (rep.ip) {
        // nested-sum witness a_t = sum_{1 <= e <= t} d b^e: pairwise
        // differences have digits in {0, d}, so they stay in the set
        int64_t d = 0;
        for (int64_t x : set.digits)
            if (x != 0) {
                d = x;
                break;
            }
        std::vector<BigInt> chain;
        BigInt acc = 0;
        for (unsigned t = 1; t <= 10; ++t) {
            acc += d * pow_bigint(set.base, t);
            chain.push_back(acc);
        }
        rep.ip_differences_verified = true;
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j)
                if (!contains(set, chain[j] - chain[i])) rep.ip_differences_verified = false;
    }

    std::ostringstream os;
    if (!rep.ip) {
        os << "0 not in D: no IP set, not van der Corput";
    } else if (rep.kernel) {
        os << "IP set present; kernel of size " << rep.kernel->residues.size()
           << " gives van der Corput power savings c = " << rep.kernel->exponent;
    } else {
        os << "IP set present: intersective, but no difference kernel (no power savings "
           << "from this construction)";
    }
    rep.conclusion = os.str();
    return rep;
}

}  // namespace cantor
