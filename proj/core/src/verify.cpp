#include "membrane/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "membrane/corpus.hpp"
#include "membrane/errors.hpp"
#include "membrane/evolution.hpp"
#include "membrane/extensions.hpp"
#include "membrane/kernel.hpp"
#include "membrane/projections.hpp"
#include "membrane/scaling.hpp"

namespace membrane {

namespace {

Grid default_grid() { return Grid(30.0, 6001); }
Grid fine_grid() { return Grid(30.0, 24001); }

constexpr double kEpsDisc = 1e-3;  // 10 h^2 at h = 0.01

SharpFunction normalized(SharpFunction f) {
    const double s = sup_norm(f);
    return s > 0.0 ? scale(1.0 / s, f) : f;
}

FunctionPair normalized(FunctionPair p) {
    const double s = sup_norm(p);
    return s > 0.0 ? scale(1.0 / s, p) : p;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

struct Tracker {
    double worst = 0.0;
    bool ok = true;
    void observe(double value, double bound) {
        worst = std::max(worst, value);
        if (!(value <= bound)) ok = false;
    }
};

// ---------------------------------------------------------------- criterion 1

SuiteResult suite_norm_bounds(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1001);
    std::uniform_real_distribution<double> ab(0.05, 3.0);
    Tracker snap, perp, cos;
    for (int i = 0; i < 100; ++i) {
        const MembraneParams params(ab(rng), ab(rng));
        RandomOptions any;
        const SharpFunction f = random_sharp(g, rng, any);
        const double nf = sup_norm(f);
        snap.observe(sup_norm(extend_snapping(params, f)) / nf, 5.0);

        RandomOptions ov;
        ov.interface_condition = InterfaceCondition::OppositeValues;
        const SharpFunction fo = random_sharp(g, rng, ov);
        perp.observe(sup_norm(extend_perp(params, fo)) / sup_norm(fo), 5.0);

        const Evolution ev = Evolution::snapping(params);
        for (double t : {0.5, 1.0, 3.0})
            cos.observe(sup_norm(cosine_evolve(ev, t, f)) / nf, 5.0);
    }
    SuiteResult r{"norm-bounds", snap.ok && perp.ok && cos.ok, ""};
    r.detail = "max ratios: extend_snapping " + fmt(snap.worst) + ", extend_perp " +
               fmt(perp.worst) + ", cosine " + fmt(cos.worst) + " (bound 5)";
    return r;
}

// ---------------------------------------------------------------- criterion 2

const std::vector<MembraneParams>& param_samples10() {
    static const std::vector<MembraneParams> samples = {
        {0.5, 0.5}, {1.0, 1.0}, {2.0, 2.0}, {1.0, 0.0}, {0.0, 1.0},
        {1.0, 3.0}, {3.0, 1.0}, {0.25, 0.75}, {2.0, 0.5}, {1.5, 1.5}};
    return samples;
}

SuiteResult suite_complementarity(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1002);
    Tracker pq, idem, skew_pq;
    bool complement_exact = true;
    int pair_index = 0;
    for (int i = 0; i < 50; ++i) {
        const FunctionPair p = normalized(random_pair(g, rng));
        const MembraneParams& params = param_samples10()[pair_index++ % 10];
        const FunctionPair pc = project_C(params, p);
        const FunctionPair pd = project_D(params, p);
        if (!bitwise_equal(pd, subtract(p, pc))) complement_exact = false;
        pq.observe(sup_norm(project_C(params, pd)), 3.0 * kEpsDisc);
        idem.observe(sup_dist(project_C(params, pc), pc), 3.0 * kEpsDisc);

        const FunctionPair ps = project_C_skew(params, p);
        const FunctionPair qw = project_D_weks(params, p);
        if (!bitwise_equal(qw, subtract(p, ps))) complement_exact = false;
        skew_pq.observe(sup_norm(project_C_skew(params, qw)), 3.0 * kEpsDisc);
    }
    SuiteResult r{"complementarity",
                  complement_exact && pq.ok && idem.ok && skew_pq.ok, ""};
    r.detail = std::string("Q = I - P ") + (complement_exact ? "bit-exact" : "NOT exact") +
               "; max ||P Q p|| " + fmt(pq.worst) + ", ||P^2 p - P p|| " + fmt(idem.worst) +
               ", skew/weks ||P Q p|| " + fmt(skew_pq.worst) + " (tol 3e-3)";
    return r;
}

// ---------------------------------------------------------------- criterion 3

SuiteResult suite_membership(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1003);
    const std::vector<MembraneParams> params_set = {
        {0.5, 0.5}, {1.0, 2.0}, {2.0, 1.0}, {1.0, 0.0}, {0.25, 0.75}, {1.5, 1.5}};
    const double tol = 1e-3;
    Tracker worst;
    RandomOptions any, cont, ov;
    cont.interface_condition = InterfaceCondition::Continuous;
    ov.interface_condition = InterfaceCondition::OppositeValues;

    for (const auto& params : params_set) {
        // extensions land in their subspaces
        for (int i = 0; i < 3; ++i) {
            const SharpFunction f = normalized(random_sharp(g, rng, any));
            worst.observe(
                membership(SubspaceKind::SnappingC, params, extend_snapping(params, f), tol)
                    .max_residual,
                tol);
            const SharpFunction fo = normalized(random_sharp(g, rng, ov));
            worst.observe(
                membership(SubspaceKind::PerpD, params, extend_perp(params, fo), tol)
                    .max_residual,
                tol);
            const SharpFunction fc = normalized(random_sharp(g, rng, cont));
            worst.observe(
                membership(SubspaceKind::SkewC, params, extend_skew(params, fc), tol)
                    .max_residual,
                tol);
            worst.observe(
                membership(SubspaceKind::WeksD, params, extend_weks(params, fo), tol)
                    .max_residual,
                tol);
        }
        // projections land in their subspaces
        for (int i = 0; i < 3; ++i) {
            const FunctionPair p = normalized(random_pair(g, rng));
            worst.observe(
                membership(SubspaceKind::SnappingC, params, project_C(params, p), tol)
                    .max_residual,
                tol);
            worst.observe(
                membership(SubspaceKind::PerpD, params, project_D(params, p), tol)
                    .max_residual,
                tol);
            worst.observe(
                membership(SubspaceKind::SkewC, params, project_C_skew(params, p), tol)
                    .max_residual,
                tol);
            worst.observe(
                membership(SubspaceKind::WeksD, params, project_D_weks(params, p), tol)
                    .max_residual,
                tol);
        }
    }
    SuiteResult r{"membership", worst.ok, ""};
    r.detail = "max subspace residual " + fmt(worst.worst) + " (tol 1e-3)";
    return r;
}

// ---------------------------------------------------------------- criterion 4

SuiteResult suite_invariance(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1004);
    const std::vector<MembraneParams> params_set = {
        {0.5, 0.5}, {1.0, 2.0}, {0.25, 0.75}, {2.0, 1.0}};
    const double tol = 3.0 * kEpsDisc;
    Tracker worst;
    RandomOptions any, cont, ov;
    cont.interface_condition = InterfaceCondition::Continuous;
    ov.interface_condition = InterfaceCondition::OppositeValues;

    for (const auto& params : params_set) {
        const SharpFunction f = normalized(random_sharp(g, rng, any));
        const SharpFunction fc = normalized(random_sharp(g, rng, cont));
        const SharpFunction fo = normalized(random_sharp(g, rng, ov));
        const FunctionPair members[4] = {
            extend_snapping(params, f), extend_perp(params, fo), extend_skew(params, fc),
            extend_weks(params, fo)};
        const SubspaceKind kinds[4] = {SubspaceKind::SnappingC, SubspaceKind::PerpD,
                                       SubspaceKind::SkewC, SubspaceKind::WeksD};
        for (int k = 0; k < 4; ++k)
            for (double t : {0.5, 1.5})
                worst.observe(
                    membership(kinds[k], params, cosine_pair(t, members[k]), tol).max_residual,
                    tol);
    }
    SuiteResult r{"invariance", worst.ok, ""};
    r.detail = "max residual of C_D(t) p " + fmt(worst.worst) + " (tol 3e-3)";
    return r;
}

// ---------------------------------------------------------------- criterion 5

SuiteResult suite_cosine_axioms(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1005);
    RandomOptions ov;
    ov.interface_condition = InterfaceCondition::OppositeValues;
    const MembraneParams params(1.0, 2.0);
    const double window = g.half_width() - 3.0;
    const double tol = 3.0 * kEpsDisc;
    Tracker worst;
    bool identity_exact = true;

    struct Case {
        Evolution ev;
        std::vector<SharpFunction> fns;
    };
    std::vector<Case> cases;
    cases.push_back({Evolution::free(),
                     {corpus_sharp("gauss", g), corpus_sharp("atan", g),
                      corpus_sharp("ratio", g)}});
    cases.push_back({Evolution::snapping(params),
                     {corpus_sharp("gauss", g), corpus_sharp("step", g),
                      corpus_sharp("odd_step", g)}});
    cases.push_back({Evolution::perp(params),
                     {corpus_sharp("odd_step", g), normalized(random_sharp(g, rng, ov))}});
    cases.push_back({Evolution::skew(params),
                     {corpus_sharp("gauss", g), corpus_sharp("ratio", g)}});
    cases.push_back({Evolution::weks(params),
                     {corpus_sharp("odd_step", g), normalized(random_sharp(g, rng, ov))}});

    for (const auto& c : cases) {
        for (const auto& f : c.fns) {
            if (!bitwise_equal(cosine_evolve(c.ev, 0.0, f), f)) identity_exact = false;
            for (double t : {0.3, 0.7, 1.1}) {
                for (double s : {0.3, 0.7, 1.1}) {
                    const SharpFunction lhs =
                        add(cosine_evolve(c.ev, t + s, f), cosine_evolve(c.ev, t - s, f));
                    const SharpFunction rhs =
                        scale(2.0, cosine_evolve(c.ev, s, cosine_evolve(c.ev, t, f)));
                    worst.observe(sup_dist_on(lhs, rhs, -window, window), tol);
                }
            }
        }
    }
    SuiteResult r{"cosine-axioms", worst.ok && identity_exact, ""};
    r.detail = std::string("Cos(0) = I ") + (identity_exact ? "exact" : "NOT exact") +
               "; max d'Alembert residual " + fmt(worst.worst) + " (tol 3e-3)";
    return r;
}

// ---------------------------------------------------------------- criterion 6

SuiteResult suite_heat_kernel(const VerifyOptions&) {
    const Grid g = default_grid();
    const double s0 = 0.5;
    const SharpFunction f = sample_sharp(
        g, [&](double x) { return std::exp(-x * x / (4.0 * s0)); },
        [&](double x) { return std::exp(-x * x / (4.0 * s0)); }, 1.0, 1.0, 0.0, 0.0);
    Tracker worst;
    for (double t : {0.1, 1.0}) {
        const SharpFunction u = semigroup_evolve(Evolution::free(), t, f);
        const double amp = std::sqrt(s0 / (s0 + t));
        const SharpFunction oracle = sample_sharp(
            g, [&](double x) { return amp * std::exp(-x * x / (4.0 * (s0 + t))); },
            [&](double x) { return amp * std::exp(-x * x / (4.0 * (s0 + t))); }, amp, amp, 0.0,
            0.0);
        worst.observe(sup_dist(u, oracle), 1e-6);
    }
    SuiteResult r{"heat-kernel", worst.ok, ""};
    r.detail = "max sup error vs closed form " + fmt(worst.worst) + " (tol 1e-6)";
    return r;
}

// ---------------------------------------------------------------- criterion 7

SuiteResult suite_transmission(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1007);
    const double tol = 5e-3;
    Tracker worst;

    // snapping conditions on evolved step data
    for (const auto& params : {MembraneParams{1.0, 0.5}, MembraneParams{0.5, 0.5}}) {
        const SharpFunction u =
            semigroup_evolve(Evolution::snapping(params), 0.5, corpus_sharp("step", g));
        for (const auto& [name, v] : transmission_residual(Evolution::snapping(params), u).entries)
            worst.observe(std::abs(v), tol);
    }
    // complementary conditions on evolved odd-step data
    for (const auto& params : {MembraneParams{1.0, 0.5}, MembraneParams{1.0, 2.0}}) {
        const SharpFunction u =
            semigroup_evolve(Evolution::perp(params), 0.5, corpus_sharp("odd_step", g));
        const TransmissionResidual res = transmission_residual(Evolution::perp(params), u);
        for (const auto& [name, v] : res.entries)
            if (name == "opposite_values" || name == "curvature_combo")
                worst.observe(std::abs(v), tol);
    }
    // skew conditions on evolved continuous data
    RandomOptions cont;
    cont.interface_condition = InterfaceCondition::Continuous;
    const SharpFunction skew_corpus[] = {corpus_sharp("ratio", g), corpus_sharp("gauss", g),
                                         normalized(random_sharp(g, rng, cont))};
    for (const auto& params : {MembraneParams{1.0, 3.0}, MembraneParams{2.0, 1.0}}) {
        for (const auto& f : skew_corpus) {
            const SharpFunction u = semigroup_evolve(Evolution::skew(params), 0.5, f);
            const TransmissionResidual res = transmission_residual(Evolution::skew(params), u);
            for (const auto& [name, v] : res.entries)
                if (name == "value_jump" || name == "flux_ratio")
                    worst.observe(std::abs(v), tol);
        }
    }
    SuiteResult r{"transmission", worst.ok, ""};
    r.detail = "max interface residual of e^{tA} f " + fmt(worst.worst) + " (tol 5e-3)";
    return r;
}

// ---------------------------------------------------------------- criterion 8

SuiteResult suite_skew_convergence(const VerifyOptions&) {
    const Grid g = default_grid();
    const std::vector<int> ladder(std::begin(kDefaultLadder), std::end(kDefaultLadder));
    const std::vector<double> t_set = {0.25, 0.5, 1.0, 2.0, 4.0};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& params : {MembraneParams{0.5, 0.5}, MembraneParams{0.25, 0.75}}) {
        for (const char* name : {"gauss", "atan", "ratio"}) {
            const LadderReport rep =
                converge_cosine(params, corpus_sharp(name, g), ladder, t_set);
            if (rep.verdict != Verdict::Converging) ok = false;
        }
        for (const char* name : {"odd_step", "step"}) {
            const LadderReport rep =
                converge_cosine(params, corpus_sharp(name, g), ladder, t_set);
            if (rep.verdict != Verdict::Diverging) ok = false;
        }
    }
    const LadderReport sample =
        converge_cosine(MembraneParams{0.5, 0.5}, corpus_sharp("ratio", g), ladder, t_set);
    detail << "continuous: err(64)/err(1) = " << fmt(sample.errors.back() / sample.errors.front())
           << " (need <= 0.05); jumps produce a divergence witness";
    return {"skew-convergence", ok, detail.str()};
}

// ---------------------------------------------------------------- criterion 9

SuiteResult suite_irregular_convergence(const VerifyOptions&) {
    const Grid g = fine_grid();  // h = 0.0025, keeps the guard satisfied at n = 64
    const MembraneParams params(1.5, 1.5);
    const std::vector<int> ladder = {4, 8, 16, 32};
    const std::vector<double> t_set = {0.25, 0.5, 1.0};
    const LadderReport rep = converge_semigroup(params, corpus_sharp("odd_step", g), ladder, t_set);
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i)
        if (rep.errors[i + 1] > rep.errors[i]) monotone = false;
    const bool small = rep.errors.back() <= 1e-2;
    SuiteResult r{"irregular-convergence", monotone && small, ""};
    std::ostringstream os;
    os << "Cauchy differences ";
    for (std::size_t i = 0; i < rep.errors.size(); ++i) os << (i ? ", " : "") << fmt(rep.errors[i]);
    os << " (monotone, last <= 1e-2)";
    r.detail = os.str();
    return r;
}

// --------------------------------------------------------------- criterion 10

SuiteResult suite_projection_convergence(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1010);
    const std::vector<int> ladder(std::begin(kDefaultLadder), std::end(kDefaultLadder));
    const std::vector<MembraneParams> params_set = {
        {0.5, 0.5}, {0.25, 0.75}, {0.75, 0.25}};
    bool ok = true;
    bool complement_exact = true;
    double worst_ratio = 0.0;
    for (int i = 0; i < 20; ++i) {
        const FunctionPair p = normalized(random_pair(g, rng));
        const MembraneParams& params = params_set[static_cast<std::size_t>(i) % 3];
        const LadderReport rep = converge_projection(params, p, ladder);
        const double ratio = rep.errors.back() / rep.errors.front();
        worst_ratio = std::max(worst_ratio, ratio);
        if (!(ratio <= 0.05)) ok = false;
        if (!bitwise_equal(project_D_weks(params, p),
                           subtract(p, project_C_skew(params, p))))
            complement_exact = false;
    }
    SuiteResult r{"projection-convergence", ok && complement_exact, ""};
    r.detail = "worst err(64)/err(1) " + fmt(worst_ratio) +
               " (need <= 0.05); P_skew + Q_weks = I " +
               (complement_exact ? "bit-exact" : "NOT exact");
    return r;
}

// --------------------------------------------------------------- criterion 11

SuiteResult suite_dirac(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1011);
    std::vector<LineFunction> corpus = {corpus_line("ratio", g), corpus_line("expabs", g),
                                        corpus_line("gauss", g), random_line(g, rng),
                                        random_line(g, rng)};
    bool ok = true;
    double worst_ratio = 0.0;
    for (const auto& phi : corpus) {
        for (double a : {0.5, 1.0}) {
            for (DiracVariant v :
                 {DiracVariant::FullLeft, DiracVariant::FullRight, DiracVariant::HalfLine}) {
                const double r1 = dirac_limit_residual(v, a, 1, phi);
                const double r64 = dirac_limit_residual(v, a, 64, phi);
                if (r1 == 0.0) continue;  // constants are reproduced exactly
                const double ratio = r64 / r1;
                worst_ratio = std::max(worst_ratio, ratio);
                if (!(ratio <= 0.1)) ok = false;
            }
        }
    }
    SuiteResult r{"dirac", ok, ""};
    r.detail = "worst residual(64)/residual(1) " + fmt(worst_ratio) + " (need <= 0.1)";
    return r;
}

// --------------------------------------------------------------- criterion 12

SuiteResult suite_conjugation(const VerifyOptions& opts) {
    const Grid g = default_grid();
    std::mt19937_64 rng(opts.seed * 1012);
    RandomOptions ov;
    ov.interface_condition = InterfaceCondition::OppositeValues;
    const double tol = 1e-9;
    Tracker worst;
    for (int i = 0; i < 20; ++i) {
        const MembraneParams& params = param_samples10()[static_cast<std::size_t>(i) % 10];

        // (i)  J^{-1} R Jpair (f1, f2) = R (f1, f2) whenever f1(0) = -f2(0)
        FunctionPair p = random_pair(g, rng);
        const double off = p.second.samples[static_cast<std::size_t>(g.center_index())] +
                           p.first.samples[static_cast<std::size_t>(g.center_index())];
        p = FunctionPair{p.first, subtract(p.second, constant_line(g, off))};
        const SharpFunction lhs = flip_J_inverse(
            line_from_sharp(restrict_pair(flip_Jpair(p)), kAlgebraicTol));
        worst.observe(sup_dist(lhs, restrict_pair(p)), tol);

        // (ii) Jpair C_D(t) Jpair = C_D(t)
        const FunctionPair q = random_pair(g, rng);
        worst.observe(
            sup_dist(flip_Jpair(cosine_pair(0.77, flip_Jpair(q))), cosine_pair(0.77, q)), tol);

        // (iii) Jpair E_skew(beta, alpha) J = E_weks(alpha, beta)
        const SharpFunction f = random_sharp(g, rng, ov);
        const FunctionPair via_skew = flip_Jpair(
            extend_skew(params.swapped(), sharp_from_line(flip_J(f, kAlgebraicTol))));
        worst.observe(sup_dist(via_skew, extend_weks(params, f)), tol);
    }
    SuiteResult r{"conjugation", worst.ok, ""};
    r.detail = "max identity residual " + fmt(worst.worst) + " (tol 1e-9)";
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "norm-bounds",      "complementarity",        "membership",
        "invariance",       "cosine-axioms",          "heat-kernel",
        "transmission",     "skew-convergence",       "irregular-convergence",
        "projection-convergence", "dirac",            "conjugation"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "norm-bounds") return suite_norm_bounds(opts);
    if (name == "complementarity") return suite_complementarity(opts);
    if (name == "membership") return suite_membership(opts);
    if (name == "invariance") return suite_invariance(opts);
    if (name == "cosine-axioms") return suite_cosine_axioms(opts);
    if (name == "heat-kernel") return suite_heat_kernel(opts);
    if (name == "transmission") return suite_transmission(opts);
    if (name == "skew-convergence") return suite_skew_convergence(opts);
    if (name == "irregular-convergence") return suite_irregular_convergence(opts);
    if (name == "projection-convergence") return suite_projection_convergence(opts);
    if (name == "dirac") return suite_dirac(opts);
    if (name == "conjugation") return suite_conjugation(opts);
    throw MembraneError("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
    return out;
}

}  // namespace membrane
