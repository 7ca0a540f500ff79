#include "membrane/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "membrane/errors.hpp"

namespace membrane {

PanelWeights exp_panel_weights(double a, double h) {
    const double z = a * h;
    double p0, p1;
    if (std::abs(z) < 0.5) {
        // p0(z) = sum (-1)^m (m+1)/(m+2)! z^m,  p1(z) = sum (-1)^m z^m/(m+2)!
        // (closed forms below cancel catastrophically near z = 0)
        p0 = 0.0;
        p1 = 0.0;
        double zpow = 1.0;
        double factorial = 2.0;  // (m+2)! at m = 0
        for (int m = 0; m < 18; ++m) {
            const double term = zpow / factorial;
            p1 += term;
            p0 += term * static_cast<double>(m + 1);
            zpow *= -z;
            factorial *= static_cast<double>(m + 3);
        }
    } else {
        const double e = std::exp(-z);
        p0 = (1.0 - (1.0 + z) * e) / (z * z);
        p1 = (e - 1.0 + z) / (z * z);
    }
    return {std::exp(-z), h * p0, h * p1};
}

std::vector<double> convolve_half(double a, std::span<const double> v, double h) {
    const auto [decay, w0, w1] = exp_panel_weights(a, h);
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t j = 1; j < v.size(); ++j)
        out[j] = decay * out[j - 1] + w0 * v[j - 1] + w1 * v[j];
    return out;
}

LineFunction exp_convolve(double a, const LineFunction& phi) {
    const Grid& g = phi.grid;
    const int n = g.n_points();
    const int c = g.center_index();
    const int m = g.half_size();
    const double h = g.spacing();

    // Right of 0: the recurrence as is.
    std::vector<double> rv(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) rv[static_cast<std::size_t>(j)] = phi.at(c + j);
    std::vector<double> right = convolve_half(a, rv, h);

    // Left of 0 via (e_a * phi)(-x) = -(e_{-a} * phi^T)(x).
    std::vector<double> lv(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) lv[static_cast<std::size_t>(j)] = phi.at(c - j);
    std::vector<double> leftrec = convolve_half(-a, lv, h);

    LineFunction out{g, std::vector<double>(static_cast<std::size_t>(n)), 0.0, 0.0};
    for (int j = 0; j < m; ++j) {
        out.samples[static_cast<std::size_t>(c + j)] = right[static_cast<std::size_t>(j)];
        out.samples[static_cast<std::size_t>(c - j)] = -leftrec[static_cast<std::size_t>(j)];
    }
    out.samples[static_cast<std::size_t>(c)] = 0.0;

    if (a > 0.0) {
        out.limit_pos = phi.limit_pos / a;
        out.limit_neg = out.samples.front();
    } else if (a < 0.0) {
        out.limit_neg = phi.limit_neg / a;
        out.limit_pos = out.samples.back();
    } else {
        out.limit_neg = out.samples.front();
        out.limit_pos = out.samples.back();
    }
    return out;
}

double laplace_at(const LineFunction& phi, double lambda) {
    if (!(lambda > 0.0)) throw NonPositiveLambda("laplace_at: lambda must be positive");
    const Grid& g = phi.grid;
    const double h = g.spacing();
    const int c = g.center_index();
    const int n = g.n_points();
    // Per-panel weights of e^{-lambda u} against the interpolant on [0, h]:
    // the left sample sees integral e^{-lambda u}(1 - u/h) = h p1, the right
    // one h p0 (the mirror of exp_panel_weights' orientation).
    const PanelWeights w = exp_panel_weights(lambda, h);
    const double q_left = w.w1, q_right = w.w0;
    double acc = 0.0;
    double factor = 1.0;  // e^{-lambda (x_k - 0)}
    for (int k = c; k + 1 < n; ++k) {
        acc += factor * (q_left * phi.samples[static_cast<std::size_t>(k)] +
                         q_right * phi.samples[static_cast<std::size_t>(k + 1)]);
        factor *= w.decay;
    }
    // factor is now e^{-lambda * bound}
    return acc + phi.limit_pos * factor / lambda;
}

LineFunction improper_left(double gamma, const LineFunction& psi) {
    if (!(gamma > 0.0)) throw NonPositiveGamma("improper_left: gamma must be positive");
    const Grid& g = psi.grid;
    const int n = g.n_points();
    const double h = g.spacing();
    const PanelWeights w = exp_panel_weights(gamma, h);
    LineFunction out{g, std::vector<double>(static_cast<std::size_t>(n)),
                     psi.limit_neg / gamma, psi.limit_pos / gamma};
    double rec = 0.0;
    double tail = psi.limit_neg / gamma;  // contribution of psi below the grid
    out.samples[0] = tail;
    for (int k = 1; k < n; ++k) {
        rec = w.decay * rec + w.w0 * psi.samples[static_cast<std::size_t>(k - 1)] +
              w.w1 * psi.samples[static_cast<std::size_t>(k)];
        tail *= w.decay;
        out.samples[static_cast<std::size_t>(k)] = rec + tail;
    }
    return out;
}

LineFunction improper_right(double gamma, const LineFunction& psi) {
    return reflect(improper_left(gamma, reflect(psi)));
}

double dirac_limit_residual(DiracVariant variant, double a, int n, const LineFunction& phi) {
    if (!(a > 0.0)) throw NonPositiveGamma("dirac_limit_residual: a must be positive");
    if (n < 1) throw MembraneError("dirac_limit_residual: n must be >= 1");
    const double rate = static_cast<double>(n) * a;
    const Grid& g = phi.grid;
    double res = 0.0;
    switch (variant) {
        case DiracVariant::FullLeft: {
            LineFunction I = improper_left(rate, phi);
            for (int k = 0; k < g.n_points(); ++k)
                res = std::max(res, std::abs(rate * I.samples[static_cast<std::size_t>(k)] -
                                             phi.samples[static_cast<std::size_t>(k)]));
            break;
        }
        case DiracVariant::FullRight: {
            LineFunction I = improper_right(rate, phi);
            for (int k = 0; k < g.n_points(); ++k)
                res = std::max(res, std::abs(rate * I.samples[static_cast<std::size_t>(k)] -
                                             phi.samples[static_cast<std::size_t>(k)]));
            break;
        }
        case DiracVariant::HalfLine: {
            const int c = g.center_index();
            const int m = g.half_size();
            std::vector<double> v(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = phi.at(c + j);
            std::vector<double> I = convolve_half(rate, v, g.spacing());
            const double decay = std::exp(-rate * g.spacing());
            double e = 1.0;
            for (int j = 0; j < m; ++j) {
                res = std::max(res, std::abs(rate * I[static_cast<std::size_t>(j)] +
                                             e * v[0] - v[static_cast<std::size_t>(j)]));
                e *= decay;
            }
            break;
        }
    }
    return res;
}

}  // namespace membrane
