#include "membrane/line_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace membrane {

double LineFunction::value(double x) const {
    const double b = grid.bound();
    if (x < -b) return limit_neg;
    if (x > b) return limit_pos;
    const double u = x / grid.spacing() + static_cast<double>(grid.center_index());
    int i = static_cast<int>(std::floor(u));
    i = std::clamp(i, 0, grid.n_points() - 2);
    const double w = u - static_cast<double>(i);
    const double v0 = samples[static_cast<std::size_t>(i)];
    const double v1 = samples[static_cast<std::size_t>(i) + 1];
    return (1.0 - w) * v0 + w * v1;
}

LineFunction sample_line(const Grid& grid, const std::function<double(double)>& f,
                         double limit_neg, double limit_pos) {
    LineFunction out{grid, std::vector<double>(static_cast<std::size_t>(grid.n_points())),
                     limit_neg, limit_pos};
    for (int k = 0; k < grid.n_points(); ++k)
        out.samples[static_cast<std::size_t>(k)] = f(grid.node(k));
    return out;
}

LineFunction constant_line(const Grid& grid, double c) {
    return LineFunction{grid, std::vector<double>(static_cast<std::size_t>(grid.n_points()), c),
                        c, c};
}

LineFunction zero_line(const Grid& grid) { return constant_line(grid, 0.0); }

LineFunction reflect(const LineFunction& f) {
    LineFunction out{f.grid, f.samples, f.limit_pos, f.limit_neg};
    std::reverse(out.samples.begin(), out.samples.end());
    return out;
}

ParityParts parity_parts(const LineFunction& f) {
    const int n = f.grid.n_points();
    const int c = f.grid.center_index();
    LineFunction even{f.grid, std::vector<double>(static_cast<std::size_t>(n)),
                      0.5 * f.limit_neg + 0.5 * f.limit_pos,
                      0.5 * f.limit_neg + 0.5 * f.limit_pos};
    LineFunction odd{f.grid, std::vector<double>(static_cast<std::size_t>(n)),
                     0.5 * f.limit_neg - 0.5 * f.limit_pos,
                     0.5 * f.limit_pos - 0.5 * f.limit_neg};
    // Compute the left half and mirror, so that reflect(even) == even and
    // reflect(odd) == -odd hold bit-exactly regardless of rounding.
    for (int k = 0; k <= c; ++k) {
        const double a = f.samples[static_cast<std::size_t>(k)];
        const double b = f.samples[static_cast<std::size_t>(n - 1 - k)];
        const double e = 0.5 * a + 0.5 * b;
        const double o = 0.5 * a - 0.5 * b;
        even.samples[static_cast<std::size_t>(k)] = e;
        even.samples[static_cast<std::size_t>(n - 1 - k)] = e;
        odd.samples[static_cast<std::size_t>(k)] = o;
        odd.samples[static_cast<std::size_t>(n - 1 - k)] = -o;
    }
    odd.samples[static_cast<std::size_t>(c)] = 0.0;
    return {std::move(even), std::move(odd)};
}

namespace {

template <class F>
LineFunction zip(const LineFunction& f, const LineFunction& g, F&& op) {
    require_same_grid(f.grid, g.grid);
    LineFunction out{f.grid, std::vector<double>(f.samples.size()),
                     op(f.limit_neg, g.limit_neg), op(f.limit_pos, g.limit_pos)};
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        out.samples[i] = op(f.samples[i], g.samples[i]);
    return out;
}

}  // namespace

LineFunction add(const LineFunction& f, const LineFunction& g) {
    return zip(f, g, [](double a, double b) { return a + b; });
}

LineFunction subtract(const LineFunction& f, const LineFunction& g) {
    return zip(f, g, [](double a, double b) { return a - b; });
}

LineFunction scale(double a, const LineFunction& f) {
    LineFunction out{f.grid, std::vector<double>(f.samples.size()),
                     a * f.limit_neg, a * f.limit_pos};
    for (std::size_t i = 0; i < f.samples.size(); ++i) out.samples[i] = a * f.samples[i];
    return out;
}

LineFunction negate(const LineFunction& f) { return scale(-1.0, f); }

LineFunction axpy(double a, const LineFunction& f, const LineFunction& g) {
    require_same_grid(f.grid, g.grid);
    LineFunction out{f.grid, std::vector<double>(f.samples.size()),
                     a * f.limit_neg + g.limit_neg, a * f.limit_pos + g.limit_pos};
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        out.samples[i] = a * f.samples[i] + g.samples[i];
    return out;
}

double sup_norm(const LineFunction& f) {
    double m = std::max(std::abs(f.limit_neg), std::abs(f.limit_pos));
    for (double v : f.samples) m = std::max(m, std::abs(v));
    return m;
}

double sup_abs_on(const LineFunction& f, double lo, double hi) {
    double m = 0.0;
    for (int k = 0; k < f.grid.n_points(); ++k) {
        const double x = f.grid.node(k);
        if (x < lo || x > hi) continue;
        m = std::max(m, std::abs(f.samples[static_cast<std::size_t>(k)]));
    }
    return m;
}

double sup_dist(const LineFunction& f, const LineFunction& g) {
    require_same_grid(f.grid, g.grid);
    double m = std::max(std::abs(f.limit_neg - g.limit_neg), std::abs(f.limit_pos - g.limit_pos));
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        m = std::max(m, std::abs(f.samples[i] - g.samples[i]));
    return m;
}

double sup_dist_on(const LineFunction& f, const LineFunction& g, double lo, double hi) {
    require_same_grid(f.grid, g.grid);
    double m = 0.0;
    for (int k = 0; k < f.grid.n_points(); ++k) {
        const double x = f.grid.node(k);
        if (x < lo || x > hi) continue;
        m = std::max(m, std::abs(f.samples[static_cast<std::size_t>(k)] -
                                 g.samples[static_cast<std::size_t>(k)]));
    }
    return m;
}

bool bitwise_equal(const LineFunction& f, const LineFunction& g) {
    if (f.grid != g.grid) return false;
    if (std::memcmp(&f.limit_neg, &g.limit_neg, sizeof(double)) != 0) return false;
    if (std::memcmp(&f.limit_pos, &g.limit_pos, sizeof(double)) != 0) return false;
    return std::memcmp(f.samples.data(), g.samples.data(),
                       f.samples.size() * sizeof(double)) == 0;
}

}  // namespace membrane
