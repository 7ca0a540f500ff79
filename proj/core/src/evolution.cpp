#include "membrane/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "membrane/errors.hpp"

namespace membrane {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

/// Half-sum of the +-j shifts, out-of-range samples resolved by the limits.
LineFunction cosine_shift(const LineFunction& f, int j) {
    j = std::abs(j);
    if (j == 0) return f;
    const int n = f.grid.n_points();
    LineFunction out{f.grid, std::vector<double>(sz(n)), f.limit_neg, f.limit_pos};
    if (j >= n) {
        for (int k = 0; k < n; ++k)
            out.samples[sz(k)] = 0.5 * f.at(k + j) + 0.5 * f.at(k - j);
        return out;
    }
    for (int k = 0; k < j; ++k)
        out.samples[sz(k)] = 0.5 * f.at(k + j) + 0.5 * f.limit_neg;
    for (int k = j; k < n - j; ++k)
        out.samples[sz(k)] = 0.5 * f.samples[sz(k + j)] + 0.5 * f.samples[sz(k - j)];
    for (int k = std::max(j, n - j); k < n; ++k)
        out.samples[sz(k)] = 0.5 * f.limit_pos + 0.5 * f.at(k - j);
    return out;
}

bool integer_shift(double t, double h, int* j_out) {
    const double jr = std::abs(t) / h;
    if (jr > 2.0e9) return false;
    const long long j = std::llround(jr);
    if (std::abs(std::abs(t) - static_cast<double>(j) * h) <= 1e-9 * h) {
        *j_out = static_cast<int>(j);
        return true;
    }
    return false;
}

}  // namespace

LineFunction cosine_basic(double t, const LineFunction& f) {
    int j = 0;
    if (integer_shift(t, f.grid.spacing(), &j)) return cosine_shift(f, j);
    const int n = f.grid.n_points();
    LineFunction out{f.grid, std::vector<double>(sz(n)), f.limit_neg, f.limit_pos};
    for (int k = 0; k < n; ++k) {
        const double x = f.grid.node(k);
        out.samples[sz(k)] = 0.5 * f.value(x + t) + 0.5 * f.value(x - t);
    }
    return out;
}

FunctionPair cosine_pair(double t, const FunctionPair& p) {
    return {cosine_basic(t, p.first), cosine_basic(t, p.second)};
}

FunctionPair extension_for(const Evolution& ev, const SharpFunction& f) {
    switch (ev.kind) {
        case EvolutionKind::Free: {
            LineFunction g = line_from_sharp(f, kAlgebraicTol);
            return {g, g};
        }
        case EvolutionKind::Snapping:
            return extend_snapping(*ev.params, f);
        case EvolutionKind::Perp:
            return extend_perp(*ev.params, f);
        case EvolutionKind::Skew:
            return extend_skew(*ev.params, f);
        case EvolutionKind::Weks:
            return extend_weks(*ev.params, f);
    }
    throw MembraneError("extension_for: unknown kind");
}

SharpFunction cosine_evolve(const Evolution& ev, double t, const SharpFunction& f) {
    return restrict_pair(cosine_pair(t, extension_for(ev, f)));
}

SharpFunction semigroup_evolve(const Evolution& ev, double t, const SharpFunction& f) {
    if (!(t > 0.0)) throw NonPositiveTime("semigroup_evolve: t must be positive");
    const FunctionPair ext = extension_for(ev, f);
    const Grid& g = f.grid;
    const int n = g.n_points();
    const double h = g.spacing();

    const double span = 2.0 * std::sqrt(t * std::log(1e12)) + h;
    const int m = static_cast<int>(std::ceil(span / h));

    // e^{tA} f = (pi t)^{-1/2} integral_0^S e^{-s^2/(4t)} Cos(s) (ext) ds + tail.
    // The integrand is even in s with corners only at quadrature nodes, so the
    // composite trapezoid rule is superconvergent here; the one surviving
    // Euler-Maclaurin boundary term, from the extension's corner at the
    // membrane, is added back analytically below.
    const double norm = 1.0 / std::sqrt(std::numbers::pi * t);
    std::vector<double> acc1(sz(n), 0.0), acc2(sz(n), 0.0);
    double weight_total = 0.0;

    auto accumulate = [&](const LineFunction& src, std::vector<double>& acc, int j, double w) {
        const int lo = std::min(j, n);
        const int hi = std::max(0, n - j);
        for (int k = 0; k < lo; ++k) acc[sz(k)] += w * 0.5 * (src.at(k + j) + src.at(k - j));
        for (int k = lo; k < hi; ++k)
            acc[sz(k)] += w * 0.5 * (src.samples[sz(k + j)] + src.samples[sz(k - j)]);
        for (int k = std::max(lo, hi); k < n; ++k)
            acc[sz(k)] += w * 0.5 * (src.at(k + j) + src.at(k - j));
    };

    for (int j = 0; j <= m; ++j) {
        const double s = static_cast<double>(j) * h;
        const double trap = (j == 0 || j == m) ? 0.5 : 1.0;
        const double w = norm * h * trap * std::exp(-s * s / (4.0 * t));
        accumulate(ext.first, acc1, j, w);
        accumulate(ext.second, acc2, j, w);
        weight_total += w;
    }

    // Corner correction at the membrane node: for x = 0 the s-integrand has
    // one-sided slope W(0) * [g'(0+) - g'(0-)] / 2, and the trapezoid rule
    // misses h^2/12 of it. One-sided slopes by the second-order stencils.
    const int c = g.center_index();
    auto corner_slope_jump = [&](const LineFunction& src) {
        const double d_pos =
            (-3.0 * src.at(c) + 4.0 * src.at(c + 1) - src.at(c + 2)) / (2.0 * h);
        const double d_neg =
            (3.0 * src.at(c) - 4.0 * src.at(c - 1) + src.at(c - 2)) / (2.0 * h);
        return d_pos - d_neg;
    };
    acc1[sz(c)] += norm * (h * h / 12.0) * 0.5 * corner_slope_jump(ext.first);
    acc2[sz(c)] += norm * (h * h / 12.0) * 0.5 * corner_slope_jump(ext.second);

    FunctionPair evolved{
        LineFunction{g, std::move(acc1), weight_total * ext.first.limit_neg,
                     weight_total * ext.first.limit_pos},
        LineFunction{g, std::move(acc2), weight_total * ext.second.limit_neg,
                     weight_total * ext.second.limit_pos}};
    return restrict_pair(evolved);
}

namespace {

struct InterfaceDerivatives {
    double d1_neg, d1_pos;  // one-sided first derivatives at 0
    double d2_neg, d2_pos;  // one-sided second derivatives at 0
};

InterfaceDerivatives interface_derivatives(const SharpFunction& f) {
    if (f.grid.n_points() < 9)
        throw GridTooCoarse("interface stencils need n_points >= 9");
    const double h = f.grid.spacing();
    const double r0 = f.right_at(0), r1 = f.right_at(1), r2 = f.right_at(2), r3 = f.right_at(3);
    const double l0 = f.left_at(0), l1 = f.left_at(1), l2 = f.left_at(2), l3 = f.left_at(3);
    InterfaceDerivatives d;
    d.d1_pos = (-3.0 * r0 + 4.0 * r1 - r2) / (2.0 * h);
    d.d1_neg = (3.0 * l0 - 4.0 * l1 + l2) / (2.0 * h);
    d.d2_pos = (2.0 * r0 - 5.0 * r1 + 4.0 * r2 - r3) / (h * h);
    d.d2_neg = (2.0 * l0 - 5.0 * l1 + 4.0 * l2 - l3) / (h * h);
    return d;
}

}  // namespace

TransmissionResidual transmission_residual(const Evolution& ev, const SharpFunction& f) {
    const InterfaceDerivatives d = interface_derivatives(f);
    const double v_neg = f.value0_neg(), v_pos = f.value0_pos();
    TransmissionResidual out;
    switch (ev.kind) {
        case EvolutionKind::Free:
            out.entries = {{"value_jump", v_pos - v_neg},
                           {"slope_jump", d.d1_pos - d.d1_neg},
                           {"curvature_jump", d.d2_pos - d.d2_neg}};
            break;
        case EvolutionKind::Snapping: {
            const double jump = v_pos - v_neg;
            out.entries = {{"left_flux", d.d1_neg - ev.params->alpha() * jump},
                           {"right_flux", d.d1_pos - ev.params->beta() * jump}};
            break;
        }
        case EvolutionKind::Perp:
            out.entries = {{"opposite_values", v_neg + v_pos},
                           {"curvature_combo",
                            d.d2_pos - ev.params->alpha() * d.d1_neg -
                                ev.params->beta() * d.d1_pos},
                           {"curvature_opposite", d.d2_pos + d.d2_neg}};
            break;
        case EvolutionKind::Skew:
            out.entries = {{"value_jump", v_pos - v_neg},
                           {"flux_ratio",
                            ev.params->alpha() * d.d1_pos - ev.params->beta() * d.d1_neg},
                           {"curvature_jump", d.d2_pos - d.d2_neg}};
            break;
        case EvolutionKind::Weks:
            out.entries = {{"opposite_values", v_neg + v_pos},
                           {"flux_ratio",
                            ev.params->beta() * d.d1_pos + ev.params->alpha() * d.d1_neg},
                           {"curvature_opposite", d.d2_pos + d.d2_neg}};
            break;
    }
    for (const auto& [name, r] : out.entries) out.max_abs = std::max(out.max_abs, std::abs(r));
    return out;
}

double generator_residual(const Evolution& ev, double t, const SharpFunction& f) {
    const SharpFunction u = cosine_evolve(ev, t, f);
    const Grid& g = f.grid;
    const double h = g.spacing();
    const double inv_t2 = 2.0 / (t * t);
    const double lo = 3.0 * h;
    const double hi = std::min(10.0, g.bound() - std::abs(t) - 3.0 * h);
    const int m = g.half_size();
    double res = 0.0;
    for (int j = 1; j + 1 < m; ++j) {
        const double x = g.node(g.center_index() + j);
        if (x < lo || x > hi) continue;
        const double dr = inv_t2 * (u.right_at(j) - f.right_at(j));
        const double fddr =
            (f.right_at(j + 1) - 2.0 * f.right_at(j) + f.right_at(j - 1)) / (h * h);
        res = std::max(res, std::abs(dr - fddr));
        const double dl = inv_t2 * (u.left_at(j) - f.left_at(j));
        const double fddl =
            (f.left_at(j + 1) - 2.0 * f.left_at(j) + f.left_at(j - 1)) / (h * h);
        res = std::max(res, std::abs(dl - fddl));
    }
    return res;
}

}  // namespace membrane
