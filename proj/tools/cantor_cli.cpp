// Experiment harness for integer sets with restricted digits: enumeration,
// exponential sums, modular laws, difference-avoiding sets, cosine-polynomial
// certificates, additive energy, pair correlation, and the diagonal ergodic
// model.  Every experiment writes CSV (or JSON with --json); stochastic
// experiments take their randomness only from --seed.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cantor/acceptance.hpp"
#include "cantor/correlation.hpp"
#include "cantor/digit_core.hpp"
#include "cantor/ergodic.hpp"
#include "cantor/errors.hpp"
#include "cantor/exp_sums.hpp"
#include "cantor/intersective.hpp"
#include "cantor/mod_dist.hpp"
#include "cantor/report.hpp"

using namespace cantor;

namespace {

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        std::string full = path;
        const char* dir = std::getenv("CANTOR_OUT_DIR");
        if (dir && *dir && path.find('/') == std::string::npos)
            full = std::string(dir) + "/" + path;
        file.open(full, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + full);
        os = &file;
    }
};

struct CommonArgs {
    std::string cantor_spec;
    std::string out_path;
    bool json = false;
};

std::string big_str(const BigInt& v) { return v.str(); }

std::string rat_str(const BigRat& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << '/' << denominator(v);
    return os.str();
}

std::string limit_class_name(LimitClass::Tag tag) {
    switch (tag) {
        case LimitClass::Tag::NonzeroPossible: return "nonzero-possible";
        case LimitClass::Tag::Zero: return "zero";
        case LimitClass::Tag::One: return "one";
        case LimitClass::Tag::MayNotExist: return "may-not-exist";
    }
    return "?";
}

std::vector<int64_t> parse_int_list(const std::string& text) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::string join_ints(const std::vector<int64_t>& v, char sep = ' ') {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
    return os.str();
}

void run_enumerate(const CommonArgs& common, int64_t count, int64_t start) {
    auto set = CantorSet::parse(common.cantor_spec);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"index", "value", "sum_digits"}, common.json);
    ElementScanner scan(set, start);
    ValueTracker val(set);
    val.init(scan);
    for (int64_t i = 0; i < count; ++i) {
        w.row({big_str(scan.index()), big_str(val.value()), std::to_string(scan.sum_digits())});
        val.apply(scan.advance());
    }
}

void run_weyl(const CommonArgs& common, const std::string& alpha, const std::string& beta,
              int64_t n_to, int64_t m_from) {
    auto set = CantorSet::parse(common.cantor_spec);
    auto r = weyl_sum_window(set, parse_frequency(alpha), parse_frequency(beta), m_from, n_to);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"cantor", "alpha", "beta", "M", "N", "real", "imag", "magnitude"},
                   common.json);
    w.row({set.format(), alpha, beta, std::to_string(m_from), std::to_string(n_to),
           format_double(r.value.real()), format_double(r.value.imag()),
           format_double(r.magnitude)});
}

void run_riesz(const CommonArgs& common, const std::string& alpha, const std::string& beta,
               unsigned k) {
    auto set = CantorSet::parse(common.cantor_spec);
    Complex r = riesz_product(set, parse_frequency(alpha), parse_frequency(beta), k);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"cantor", "alpha", "beta", "k", "real", "imag", "magnitude"},
                   common.json);
    w.row({set.format(), alpha, beta, std::to_string(k), format_double(r.real()),
           format_double(r.imag()), format_double(std::abs(r))});
}

void run_classify(const CommonArgs& common, const std::string& alpha, const std::string& beta) {
    auto set = CantorSet::parse(common.cantor_spec);
    auto cls = classify_limit(set, parse_frequency(alpha), parse_frequency(beta));
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"cantor", "alpha", "beta", "class", "a", "r", "t"}, common.json);
    bool has_witness = cls.tag == LimitClass::Tag::NonzeroPossible ||
                       cls.tag == LimitClass::Tag::MayNotExist;
    w.row({set.format(), alpha, beta, limit_class_name(cls.tag),
           has_witness ? big_str(cls.a) : "", has_witness ? big_str(cls.r) : "",
           has_witness ? std::to_string(cls.t) : ""});
}

void run_moddist(const CommonArgs& common, int64_t q, int64_t n_to, bool digit_sums) {
    auto set = CantorSet::parse(common.cantor_spec);
    OutputTarget out(common.out_path);
    if (digit_sums) {
        auto emp = sum_digits_mod_distribution(set, q, n_to);
        auto sub = subgroup_uniformity(set, emp);
        ReportWriter w(*out.os,
                       {"cantor", "q", "N", "residue", "count", "empirical", "predicted",
                        "subgroup_generator", "tv_to_uniform"},
                       common.json);
        for (int64_t a = 0; a < q; ++a) {
            double predicted =
                a % sub.generator == 0 ? 1.0 / static_cast<double>(sub.subgroup_size) : 0.0;
            w.row({set.format(), std::to_string(q), std::to_string(n_to), std::to_string(a),
                   std::to_string(emp.counts[a]), format_double(emp.mass(a)),
                   format_double(predicted), std::to_string(sub.generator),
                   format_double(sub.tv_to_uniform)});
        }
        return;
    }
    auto emp = empirical_mod_distribution(set, q, n_to);
    auto pred = predicted_mod_distribution(set, q);
    double tv = total_variation(pred, emp);
    ReportWriter w(*out.os,
                   {"cantor", "q", "N", "residue", "count", "empirical", "predicted", "tv"},
                   common.json);
    for (int64_t a = 0; a < q; ++a)
        w.row({set.format(), std::to_string(q), std::to_string(n_to), std::to_string(a),
               std::to_string(emp.counts[a]), format_double(emp.mass(a)),
               rat_str(pred.exact[a]), format_double(tv)});
}

void run_jointdist(const CommonArgs& common, int64_t a, int64_t a2, int64_t n_to) {
    auto set = CantorSet::parse(common.cantor_spec);
    auto joint = joint_mod_distribution(set, a, a2, n_to);
    bool criterion = joint_uniformity_criterion(set, a, a2);
    double tv = joint_tv_to_uniform(joint);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os,
                   {"cantor", "a", "a2", "N", "value_residue", "digit_sum_residue", "mass",
                    "uniform_criterion", "tv_to_uniform"},
                   common.json);
    for (int64_t i = 0; i < a; ++i)
        for (int64_t j = 0; j < a2; ++j)
            w.row({set.format(), std::to_string(a), std::to_string(a2), std::to_string(n_to),
                   std::to_string(i), std::to_string(j), format_double(joint.mass(i, j)),
                   criterion ? "yes" : "no", format_double(tv)});
}

void run_residue_set(const CommonArgs& common, int64_t q, int64_t r, int64_t r2,
                     int64_t truncation) {
    auto set = CantorSet::parse(common.cantor_spec);
    auto res = residue_index_set(set, r, r2, q, truncation);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os,
                   {"cantor", "q", "r", "r2", "truncation", "kind", "offset", "step_exponent"},
                   common.json);
    for (const auto& p : res.family.progressions)
        w.row({set.format(), std::to_string(q), std::to_string(r), std::to_string(r2),
               std::to_string(truncation), "progression", std::to_string(p.offset),
               std::to_string(p.step_exponent)});
    for (int64_t n : res.unresolved)
        w.row({set.format(), std::to_string(q), std::to_string(r), std::to_string(r2),
               std::to_string(truncation), "unresolved", std::to_string(n), ""});
}

void run_intersective(const CommonArgs& common, const std::string& exponents, int64_t cap,
                      bool allow_lower_bound) {
    auto set = CantorSet::parse(common.cantor_spec);
    std::vector<unsigned> exps;
    for (int64_t e : parse_int_list(exponents)) exps.push_back(static_cast<unsigned>(e));
    SolverOptions opts;
    opts.exact_cap = cap;
    opts.allow_lower_bound = allow_lower_bound;
    auto profile = intersective_ratio_profile(set, exps, opts);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"cantor", "exponent", "N", "size", "ratio", "exact", "witness"},
                   common.json);
    for (const auto& p : profile)
        w.row({set.format(), std::to_string(p.exponent), std::to_string(p.n),
               std::to_string(p.avoiding_size), format_double(p.ratio), p.exact ? "yes" : "no",
               join_ints(p.witness)});
}

void run_vdc_poly(const CommonArgs& common, int64_t base, const std::string& kernel, unsigned j) {
    auto s = parse_int_list(kernel);
    auto expanded = vdc_polynomial(base, s, j);
    auto bound = vdc_bound(base, s, j);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"b", "S", "J", "kind", "frequency", "value"}, common.json);
    const std::string b_str = std::to_string(base);
    const std::string s_str = join_ints(s);
    const std::string j_str = std::to_string(j);
    for (const auto& [freq, coef] : expanded.poly.coefficients)
        w.row({b_str, s_str, j_str, "coefficient", std::to_string(freq), rat_str(coef)});
    w.row({b_str, s_str, j_str, "degree_bound", "", std::to_string(bound.degree_bound)});
    w.row({b_str, s_str, j_str, "a0", "", rat_str(bound.a0)});
    w.row({b_str, s_str, j_str, "exponent", "", format_double(bound.exponent)});
    w.row({b_str, s_str, j_str, "bound_holds", "", bound.bound_holds ? "yes" : "no"});
    w.row({b_str, s_str, j_str, "support_in_difference_set", "",
           expanded.support_in_difference_set ? "yes" : "no"});
}

void run_kernel(const CommonArgs& common, int64_t base, const std::string& digits) {
    auto d = parse_int_list(digits);
    auto kernel = find_difference_kernel(base, d);
    auto anti = antipodal_kernel(base, d);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"b", "D", "found", "S", "size", "exponent", "antipodal"},
                   common.json);
    w.row({std::to_string(base), join_ints(d), kernel ? "yes" : "no",
           kernel ? join_ints(kernel->residues) : "",
           kernel ? std::to_string(kernel->residues.size()) : "0",
           kernel ? format_double(kernel->exponent) : "",
           anti ? join_ints(anti->residues) : ""});
}

void run_energy(const CommonArgs& common, const std::string& values, int levels) {
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os,
                   {"source", "set_size", "energy", "exponent", "sidon", "carry_free",
                    "digit_power", "sumset_power", "product_identity"},
                   common.json);
    if (!values.empty()) {
        std::vector<BigInt> a;
        for (int64_t v : parse_int_list(values)) a.push_back(v);
        auto rep = additive_energy(a);
        w.row({"values " + values, std::to_string(rep.set_size), big_str(rep.energy),
               format_double(rep.exponent), rep.sidon ? "yes" : "no", "", "", "", ""});
        return;
    }
    auto set = CantorSet::parse(common.cantor_spec);
    auto rep = cantor_truncation_energy(set, levels);
    double exponent =
        rep.member_count > 1
            ? std::log(to_double(BigRat(rep.energy))) / std::log(double(rep.member_count))
            : 0.0;
    std::vector<BigInt> digit_values;
    for (int64_t v : set.digits) digit_values.push_back(v);
    auto digit_rep = additive_energy(digit_values);
    w.row({set.format() + " levels " + std::to_string(levels), std::to_string(rep.member_count),
           big_str(rep.energy), format_double(exponent), digit_rep.sidon ? "yes" : "no",
           rep.carry_free ? "yes" : "no", big_str(rep.digit_power), big_str(rep.sumset_power),
           rep.product_identity_holds ? "yes" : "no"});
}

void run_paircorr(const CommonArgs& common, const std::string& alpha, int64_t draws,
                  uint64_t seed, const std::string& s_list, int64_t n_to) {
    auto set = CantorSet::parse(common.cantor_spec);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os,
                   {"cantor", "seed", "draw", "alpha", "s", "N", "r2", "target", "abs_error",
                    "epsilon", "dimension_bound", "hypotheses"},
                   common.json);
    std::vector<double> s_values;
    {
        std::stringstream ss(s_list);
        std::string item;
        while (std::getline(ss, item, ',')) s_values.push_back(std::stod(item));
    }
    auto emit = [&](const std::string& seed_str, const std::string& draw_str, double a) {
        for (double s : s_values) {
            auto rep = cantor_pair_correlation(set, a, s, n_to);
            w.row({set.format(), seed_str, draw_str, format_double(a), format_double(s),
                   std::to_string(n_to), format_double(rep.correlation.r2),
                   format_double(rep.correlation.target),
                   format_double(std::abs(rep.correlation.r2 - rep.correlation.target)),
                   format_double(rep.epsilon), format_double(rep.exceptional_dimension_bound),
                   rep.hypotheses_hold ? "yes" : "no"});
        }
    };
    if (!alpha.empty()) {
        emit("", "", parse_frequency(alpha).numeric());
        return;
    }
    if (draws < 1) throw std::runtime_error("need --alpha or --draws with --seed");
    for (int64_t i = 0; i < draws; ++i)
        emit(std::to_string(seed), std::to_string(i),
             seeded_unit_draw(seed, static_cast<uint64_t>(i)));
}

SpectralVector read_spectral_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectral vector file " + path);
    SpectralVector x;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::string alpha, beta;
        double re = 0.0, im = 0.0;
        if (!(ls >> alpha >> beta >> re >> im))
            throw std::runtime_error("bad spectral vector line: " + line);
        x.components.push_back({parse_frequency(alpha), parse_frequency(beta), {re, im}});
    }
    if (x.components.empty()) throw std::runtime_error("spectral vector file is empty");
    return x;
}

void run_ergodic(const CommonArgs& common, const std::string& vector_path, int64_t n_to) {
    auto set = CantorSet::parse(common.cantor_spec);
    auto x = read_spectral_vector(vector_path);
    auto avg = ergodic_average(set, x, n_to);
    auto lim = predicted_limit(set, x);
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os,
                   {"cantor", "N", "component", "alpha", "beta", "in_real", "in_imag", "avg_real",
                    "avg_imag", "limit_real", "limit_imag"},
                   common.json);
    for (size_t i = 0; i < x.components.size(); ++i) {
        const auto& c = x.components[i];
        w.row({set.format(), std::to_string(n_to), std::to_string(i), c.alpha.str(),
               c.beta.str(), format_double(c.coefficient.real()),
               format_double(c.coefficient.imag()),
               format_double(avg.components[i].coefficient.real()),
               format_double(avg.components[i].coefficient.imag()),
               format_double(lim.components[i].coefficient.real()),
               format_double(lim.components[i].coefficient.imag())});
    }
}

void run_recurrence(const CommonArgs& common, int64_t q, const std::string& residues,
                    const std::string& poly, const std::string& n_to) {
    auto set = CantorSet::parse(common.cantor_spec);
    PeriodicSet a;
    a.modulus = q;
    a.residues = parse_int_list(residues);
    std::sort(a.residues.begin(), a.residues.end());
    std::vector<BigInt> coeffs;
    {
        std::stringstream ss(poly);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(BigInt(item));
    }
    double density = recurrence_density(set, a, coeffs, BigInt(n_to));
    OutputTarget out(common.out_path);
    ReportWriter w(*out.os, {"cantor", "q", "residues", "poly", "N", "density", "density_of_A"},
                   common.json);
    w.row({set.format(), std::to_string(q), residues, poly, n_to, format_double(density),
           format_double(a.density())});
}

int run_verify_all(const CommonArgs& common) {
    auto results = run_acceptance();
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    if (!common.out_path.empty()) {
        OutputTarget out(common.out_path);
        ReportWriter w(*out.os, {"criterion", "name", "pass", "detail"}, common.json);
        for (const auto& r : results)
            w.row({std::to_string(r.id), r.name, r.pass ? "yes" : "no", r.detail});
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"experiments on integer sets with restricted digits"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.option_defaults()->always_capture_default();

    CommonArgs common;
    app.add_option("--out", common.out_path,
                   "output file (default stdout; bare names resolve against $CANTOR_OUT_DIR)");
    app.add_flag("--json", common.json, "emit JSON rows instead of CSV");

    std::string cantor_spec;

    auto* enumerate = app.add_subcommand("enumerate", "list members in increasing order");
    int64_t count = 10, start = 0;
    enumerate->add_option("--cantor", cantor_spec, "set spec, e.g. b=3;D=0,2")->required();
    enumerate->add_option("--count", count, "number of members");
    enumerate->add_option("--start", start, "starting index");

    std::string alpha = "0", beta = "0";
    int64_t weyl_n = 4096, weyl_m = 0;
    auto* weyl = app.add_subcommand("weyl", "windowed average of e(k*alpha + s_b(k)*beta)");
    weyl->add_option("--cantor", cantor_spec, "set spec")->required();
    weyl->add_option("--alpha", alpha, "frequency: p/q, decimal, or named constant");
    weyl->add_option("--beta", beta, "digit-sum frequency");
    weyl->add_option("--N", weyl_n, "number of terms (exclusive upper index)");
    weyl->add_option("--M", weyl_m, "window start index");

    unsigned riesz_k = 8;
    auto* riesz = app.add_subcommand("riesz", "product of one-step Fourier factors");
    riesz->add_option("--cantor", cantor_spec, "set spec")->required();
    riesz->add_option("--alpha", alpha, "frequency");
    riesz->add_option("--beta", beta, "digit-sum frequency");
    riesz->add_option("--k", riesz_k, "number of factors");

    auto* classify = app.add_subcommand("classify", "limit trichotomy for a frequency pair");
    classify->add_option("--cantor", cantor_spec, "set spec")->required();
    classify->add_option("--alpha", alpha, "frequency");
    classify->add_option("--beta", beta, "digit-sum frequency");

    int64_t md_q = 3, md_n = 1 << 16;
    bool md_digit_sums = false;
    auto* moddist = app.add_subcommand("moddist", "empirical vs predicted law of k_n mod q");
    moddist->add_option("--cantor", cantor_spec, "set spec")->required();
    moddist->add_option("--q", md_q, "modulus");
    moddist->add_option("--N", md_n, "sample size");
    moddist->add_flag("--digit-sums", md_digit_sums, "distribution of s_b(k_n) instead");

    int64_t jd_a = 5, jd_a2 = 5, jd_n = 1 << 16;
    auto* jointdist = app.add_subcommand("jointdist", "joint law of (k_n, s_b(k_n)) mod (a,a2)");
    jointdist->add_option("--cantor", cantor_spec, "set spec")->required();
    jointdist->add_option("--a", jd_a, "value modulus");
    jointdist->add_option("--a2", jd_a2, "digit-sum modulus");
    jointdist->add_option("--N", jd_n, "sample size");

    int64_t rs_q = 2, rs_r = 0, rs_r2 = 0, rs_trunc = 1 << 10;
    auto* residue_set =
        app.add_subcommand("residue-set", "index set of a residue pair as certified progressions");
    residue_set->add_option("--cantor", cantor_spec, "set spec")->required();
    residue_set->add_option("--q", rs_q, "modulus");
    residue_set->add_option("--r", rs_r, "value residue");
    residue_set->add_option("--r2", rs_r2, "digit-sum residue");
    residue_set->add_option("--truncation", rs_trunc, "offset search bound");

    std::string is_exps = "1,2";
    int64_t is_cap = 120;
    bool is_lower = false;
    auto* intersective =
        app.add_subcommand("intersective", "largest difference-avoiding subsets I(H, b^n)");
    intersective->add_option("--cantor", cantor_spec, "set spec")->required();
    intersective->add_option("--exponents", is_exps, "comma-separated n for N = b^n");
    intersective->add_option("--cap", is_cap, "largest N solved exactly");
    intersective->add_flag("--allow-lower-bound", is_lower,
                           "past the cap, report greedy lower bounds");

    int64_t vp_b = 5;
    std::string vp_s = "0,2";
    unsigned vp_j = 2;
    auto* vdc = app.add_subcommand("vdc-poly", "nonnegative cosine polynomial certificate");
    vdc->add_option("--b", vp_b, "base")->required();
    vdc->add_option("--S", vp_s, "kernel residues (signed allowed)")->required();
    vdc->add_option("--J", vp_j, "number of levels minus one");

    int64_t k_b = 5;
    std::string k_d = "0,2,3";
    auto* kernel = app.add_subcommand("kernel", "largest S with S-S inside the digits mod b");
    kernel->add_option("--b", k_b, "base")->required();
    kernel->add_option("--D", k_d, "digit residues (signed allowed)")->required();

    std::string e_values;
    int e_levels = 1;
    auto* energy = app.add_subcommand("energy", "additive energy of a set or a truncation");
    energy->add_option("--values", e_values, "explicit comma-separated integers");
    energy->add_option("--cantor", cantor_spec, "set spec (with --levels)");
    energy->add_option("--levels", e_levels, "truncation exponent s for C cap [0, b^s)");

    std::string pc_alpha, pc_s = "0.25,0.5,0.75";
    int64_t pc_draws = 0, pc_n = 4096;
    uint64_t pc_seed = 0;
    auto* paircorr = app.add_subcommand("paircorr", "pair correlation of dilated members");
    paircorr->add_option("--cantor", cantor_spec, "set spec")->required();
    paircorr->add_option("--alpha", pc_alpha, "explicit dilation");
    auto* draws_opt = paircorr->add_option("--draws", pc_draws, "number of seeded dilations");
    auto* seed_opt = paircorr->add_option("--seed", pc_seed, "seed for the dilation stream");
    draws_opt->needs(seed_opt);
    paircorr->add_option("--s", pc_s, "comma-separated window parameters in (0,1)");
    paircorr->add_option("--N", pc_n, "number of members");

    std::string eg_vector;
    int64_t eg_n = 1 << 14;
    auto* ergodic = app.add_subcommand("ergodic", "diagonal-model mean ergodic averages");
    ergodic->add_option("--cantor", cantor_spec, "set spec")->required();
    ergodic->add_option("--vector", eg_vector, "file of lines: alpha, beta, re, im")->required();
    ergodic->add_option("--N", eg_n, "number of terms");

    int64_t rc_q = 7;
    std::string rc_res = "0", rc_poly = "0,0,1", rc_n = "531441";
    auto* recurrence = app.add_subcommand(
        "recurrence", "density of polynomial return times into a periodic set");
    recurrence->add_option("--cantor", cantor_spec, "set spec")->required();
    recurrence->add_option("--q", rc_q, "modulus of the periodic set");
    recurrence->add_option("--residues", rc_res, "comma-separated residues of A");
    recurrence->add_option("--poly", rc_poly, "polynomial coefficients, constant first");
    recurrence->add_option("--N", rc_n, "value bound (members k <= N)");

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // 0 for --help
        return code == 0 ? 0 : 1;
    }
    common.cantor_spec = cantor_spec;

    try {
        if (*enumerate) run_enumerate(common, count, start);
        else if (*weyl) run_weyl(common, alpha, beta, weyl_n, weyl_m);
        else if (*riesz) run_riesz(common, alpha, beta, riesz_k);
        else if (*classify) run_classify(common, alpha, beta);
        else if (*moddist) run_moddist(common, md_q, md_n, md_digit_sums);
        else if (*jointdist) run_jointdist(common, jd_a, jd_a2, jd_n);
        else if (*residue_set) run_residue_set(common, rs_q, rs_r, rs_r2, rs_trunc);
        else if (*intersective) run_intersective(common, is_exps, is_cap, is_lower);
        else if (*vdc) run_vdc_poly(common, vp_b, vp_s, vp_j);
        else if (*kernel) run_kernel(common, k_b, k_d);
        else if (*energy) run_energy(common, e_values, e_levels);
        else if (*paircorr) run_paircorr(common, pc_alpha, pc_draws, pc_seed, pc_s, pc_n);
        else if (*ergodic) run_ergodic(common, eg_vector, eg_n);
        else if (*recurrence) run_recurrence(common, rc_q, rc_res, rc_poly, rc_n);
        else if (*verify) return run_verify_all(common);
    } catch (const HypothesisViolated& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
