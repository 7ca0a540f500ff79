#include "membrane/extensions.hpp"

#include <algorithm>
#include <cmath>

#include "membrane/errors.hpp"
#include "membrane/kernel.hpp"

namespace membrane {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// f(-jh) for j = 0..m-1
double left_mirror(const SharpFunction& f, int j) { return f.left[f.left.size() - 1 - sz(j)]; }

}  // namespace

FunctionPair extend_snapping(const MembraneParams& params, const SharpFunction& f) {
    const Grid& g = f.grid;
    const int n = g.n_points();
    const int c = g.center_index();
    const int m = g.half_size();
    const double a = params.alpha(), b = params.beta(), s = params.sum();

    // jump profile d(y) = f(y) - f(-y) on [0, L]
    std::vector<double> d(sz(m));
    for (int j = 0; j < m; ++j) d[sz(j)] = f.right[sz(j)] - left_mirror(f, j);
    const std::vector<double> K = convolve_half(s, d, g.spacing());

    LineFunction fl{g, std::vector<double>(sz(n)), f.limit_neg,
                    (2.0 * a * f.limit_pos + (b - a) * f.limit_neg) / s};
    LineFunction fr{g, std::vector<double>(sz(n)),
                    ((a - b) * f.limit_pos + 2.0 * b * f.limit_neg) / s, f.limit_pos};
    for (int k = 0; k <= c; ++k) fl.samples[sz(k)] = f.left[sz(k)];
    for (int j = 1; j < m; ++j)
        fl.samples[sz(c + j)] = left_mirror(f, j) + 2.0 * a * K[sz(j)];
    for (int j = 0; j < m; ++j) fr.samples[sz(c + j)] = f.right[sz(j)];
    for (int j = 1; j < m; ++j)
        fr.samples[sz(c - j)] = f.right[sz(j)] - 2.0 * b * K[sz(j)];
    return {std::move(fl), std::move(fr)};
}

FunctionPair extend_perp(const MembraneParams& params, const SharpFunction& f) {
    if (std::abs(f.value0_neg() + f.value0_pos()) > kAlgebraicTol)
        throw OppositeValuesViolated("extend_perp: input must satisfy f(0-) = -f(0+)");
    const Grid& g = f.grid;
    const int n = g.n_points();
    const int c = g.center_index();
    const int m = g.half_size();
    const double a = params.alpha(), b = params.beta(), s = params.sum();
    const double f0p = f.value0_pos();

    // phi(y) = beta f(y) - alpha f(-y) on [0, L]
    std::vector<double> phi(sz(m));
    for (int j = 0; j < m; ++j) phi[sz(j)] = b * f.right[sz(j)] - a * left_mirror(f, j);
    const std::vector<double> K = convolve_half(s, phi, g.spacing());
    const double decay = std::exp(-s * g.spacing());

    LineFunction fl{g, std::vector<double>(sz(n)), f.limit_neg,
                    (a - b) / s * f.limit_neg - 2.0 * b / s * f.limit_pos};
    LineFunction fr{g, std::vector<double>(sz(n)),
                    (b - a) / s * f.limit_pos - 2.0 * a / s * f.limit_neg, f.limit_pos};
    for (int k = 0; k <= c; ++k) fl.samples[sz(k)] = f.left[sz(k)];
    for (int j = 0; j < m; ++j) fr.samples[sz(c + j)] = f.right[sz(j)];
    double e = 1.0;
    for (int j = 1; j < m; ++j) {
        e *= decay;
        fl.samples[sz(c + j)] = -left_mirror(f, j) - 2.0 * f0p * e - 2.0 * K[sz(j)];
        fr.samples[sz(c - j)] = -f.right[sz(j)] + 2.0 * f0p * e + 2.0 * K[sz(j)];
    }
    return {std::move(fl), std::move(fr)};
}

namespace detail {

FunctionPair extend_skew_any(const MembraneParams& params, const SharpFunction& f) {
    const Grid& g = f.grid;
    const int n = g.n_points();
    const int c = g.center_index();
    const int m = g.half_size();
    const double s = params.sum();
    const double cBA = (params.beta() - params.alpha()) / s;
    const double cA = 2.0 * params.alpha() / s;
    const double cB = 2.0 * params.beta() / s;
    const double cAB = (params.alpha() - params.beta()) / s;

    LineFunction fl{g, std::vector<double>(sz(n)), f.limit_neg,
                    cBA * f.limit_neg + cA * f.limit_pos};
    LineFunction fr{g, std::vector<double>(sz(n)),
                    cB * f.limit_neg + cAB * f.limit_pos, f.limit_pos};
    for (int k = 0; k <= c; ++k) fl.samples[sz(k)] = f.left[sz(k)];
    for (int j = 0; j < m; ++j) fr.samples[sz(c + j)] = f.right[sz(j)];
    for (int j = 1; j < m; ++j) {
        fl.samples[sz(c + j)] = cBA * left_mirror(f, j) + cA * f.right[sz(j)];
        fr.samples[sz(c - j)] = cB * left_mirror(f, j) + cAB * f.right[sz(j)];
    }
    return {std::move(fl), std::move(fr)};
}

FunctionPair extend_weks_any(const MembraneParams& params, const SharpFunction& f) {
    const Grid& g = f.grid;
    const int n = g.n_points();
    const int c = g.center_index();
    const int m = g.half_size();
    const double s = params.sum();
    const double cAB = (params.alpha() - params.beta()) / s;
    const double cB = 2.0 * params.beta() / s;
    const double cA = 2.0 * params.alpha() / s;
    const double cBA = (params.beta() - params.alpha()) / s;

    LineFunction fl{g, std::vector<double>(sz(n)), f.limit_neg,
                    cAB * f.limit_neg - cB * f.limit_pos};
    LineFunction fr{g, std::vector<double>(sz(n)),
                    -cA * f.limit_neg + cBA * f.limit_pos, f.limit_pos};
    for (int k = 0; k <= c; ++k) fl.samples[sz(k)] = f.left[sz(k)];
    for (int j = 0; j < m; ++j) fr.samples[sz(c + j)] = f.right[sz(j)];
    for (int j = 1; j < m; ++j) {
        fl.samples[sz(c + j)] = cAB * left_mirror(f, j) - cB * f.right[sz(j)];
        fr.samples[sz(c - j)] = -cA * left_mirror(f, j) + cBA * f.right[sz(j)];
    }
    return {std::move(fl), std::move(fr)};
}

}  // namespace detail

FunctionPair extend_skew(const MembraneParams& params, const SharpFunction& f) {
    if (std::abs(f.jump()) > kAlgebraicTol)
        throw JumpAtZero("extend_skew: input must be continuous at 0");
    return detail::extend_skew_any(params, f);
}

FunctionPair extend_weks(const MembraneParams& params, const SharpFunction& f) {
    if (std::abs(f.value0_neg() + f.value0_pos()) > kAlgebraicTol)
        throw OppositeValuesViolated("extend_weks: input must satisfy f(0-) = -f(0+)");
    return detail::extend_weks_any(params, f);
}

MembershipReport membership(SubspaceKind kind, const MembraneParams& params,
                            const FunctionPair& p, double tol) {
    const Grid& g = p.first.grid;
    const int c = g.center_index();
    const int m = g.half_size();
    const double a = params.alpha(), b = params.beta(), s = params.sum();

    auto odd_at = [&](const LineFunction& f, int j) {
        return 0.5 * f.samples[sz(c + j)] - 0.5 * f.samples[sz(c - j)];
    };
    auto even_at = [&](const LineFunction& f, int j) {
        return 0.5 * f.samples[sz(c + j)] + 0.5 * f.samples[sz(c - j)];
    };

    MembershipReport rep;
    rep.tolerance = tol;
    switch (kind) {
        case SubspaceKind::SnappingC: {
            std::vector<double> phi(sz(m));
            for (int j = 0; j < m; ++j)
                phi[sz(j)] = p.second.samples[sz(c + j)] - p.first.samples[sz(c - j)];
            const std::vector<double> K = convolve_half(s, phi, g.spacing());
            double r1 = 0.0, r2 = 0.0;
            for (int j = 0; j < m; ++j) {
                r1 = std::max(r1, std::abs(odd_at(p.first, j) - a * K[sz(j)]));
                r2 = std::max(r2, std::abs(odd_at(p.second, j) - b * K[sz(j)]));
            }
            rep.residuals = {{"psi1_odd", r1}, {"psi2_odd", r2}};
            break;
        }
        case SubspaceKind::PerpD: {
            std::vector<double> phi(sz(m));
            for (int j = 0; j < m; ++j)
                phi[sz(j)] = b * p.second.samples[sz(c + j)] - a * p.first.samples[sz(c - j)];
            const std::vector<double> K = convolve_half(s, phi, g.spacing());
            const double decay = std::exp(-s * g.spacing());
            const double psi20 = p.second.samples[sz(c)];
            double r1 = 0.0, r2 = 0.0;
            double e = 1.0;
            for (int j = 0; j < m; ++j) {
                r1 = std::max(r1, std::abs(even_at(p.second, j) - K[sz(j)] - psi20 * e));
                r2 = std::max(r2, std::abs(even_at(p.second, j) + even_at(p.first, j)));
                e *= decay;
            }
            rep.residuals = {{"psi2_even_kernel", r1}, {"psi_even_opposite", r2}};
            break;
        }
        case SubspaceKind::SkewC: {
            double r1 = 0.0, r2 = 0.0;
            for (int j = 0; j < m; ++j) {
                r1 = std::max(r1, std::abs(even_at(p.first, j) - even_at(p.second, j)));
                r2 = std::max(r2, std::abs(b * odd_at(p.first, j) - a * odd_at(p.second, j)));
            }
            rep.residuals = {{"even_match", r1}, {"odd_ratio", r2}};
            break;
        }
        case SubspaceKind::WeksD: {
            double r1 = 0.0, r2 = 0.0;
            for (int j = 0; j < m; ++j) {
                r1 = std::max(r1, std::abs(even_at(p.first, j) + even_at(p.second, j)));
                r2 = std::max(r2, std::abs(a * odd_at(p.first, j) + b * odd_at(p.second, j)));
            }
            rep.residuals = {{"even_opposite", r1}, {"odd_ratio", r2}};
            break;
        }
    }
    rep.max_residual = 0.0;
    for (const auto& [name, r] : rep.residuals) rep.max_residual = std::max(rep.max_residual, r);
    rep.pass = rep.max_residual <= tol;
    return rep;
}

}  // namespace membrane
