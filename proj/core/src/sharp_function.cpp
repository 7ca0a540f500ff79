#include "membrane/sharp_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "membrane/errors.hpp"

namespace membrane {

SharpFunction sharp_from_line(const LineFunction& f) {
    const int m = f.grid.half_size();
    const int c = f.grid.center_index();
    SharpFunction out{f.grid,
                      std::vector<double>(f.samples.begin(), f.samples.begin() + c + 1),
                      std::vector<double>(f.samples.begin() + c, f.samples.end()),
                      f.limit_neg, f.limit_pos};
    (void)m;
    return out;
}

LineFunction line_from_sharp(const SharpFunction& f, double tol) {
    if (std::abs(f.jump()) > tol)
        throw JumpAtZero("line_from_sharp: one-sided values at 0 differ");
    const int n = f.grid.n_points();
    const int c = f.grid.center_index();
    LineFunction out{f.grid, std::vector<double>(static_cast<std::size_t>(n)),
                     f.limit_neg, f.limit_pos};
    std::copy(f.left.begin(), f.left.end(), out.samples.begin());
    std::copy(f.right.begin(), f.right.end(), out.samples.begin() + c);
    out.samples[static_cast<std::size_t>(c)] = 0.5 * f.value0_neg() + 0.5 * f.value0_pos();
    return out;
}

SharpFunction sample_sharp(const Grid& grid,
                           const std::function<double(double)>& left_fn,
                           const std::function<double(double)>& right_fn,
                           double value0_neg, double value0_pos,
                           double limit_neg, double limit_pos) {
    const int m = grid.half_size();
    SharpFunction out{grid, std::vector<double>(static_cast<std::size_t>(m)),
                      std::vector<double>(static_cast<std::size_t>(m)), limit_neg, limit_pos};
    for (int i = 0; i < m; ++i) {
        out.left[static_cast<std::size_t>(i)] = left_fn(grid.node(i));
        out.right[static_cast<std::size_t>(i)] = right_fn(grid.node(grid.center_index() + i));
    }
    out.left.back() = value0_neg;
    out.right.front() = value0_pos;
    return out;
}

namespace {

template <class F>
SharpFunction zip(const SharpFunction& f, const SharpFunction& g, F&& op) {
    require_same_grid(f.grid, g.grid);
    SharpFunction out{f.grid, std::vector<double>(f.left.size()),
                      std::vector<double>(f.right.size()),
                      op(f.limit_neg, g.limit_neg), op(f.limit_pos, g.limit_pos)};
    for (std::size_t i = 0; i < f.left.size(); ++i) out.left[i] = op(f.left[i], g.left[i]);
    for (std::size_t i = 0; i < f.right.size(); ++i) out.right[i] = op(f.right[i], g.right[i]);
    return out;
}

}  // namespace

SharpFunction add(const SharpFunction& f, const SharpFunction& g) {
    return zip(f, g, [](double a, double b) { return a + b; });
}

SharpFunction subtract(const SharpFunction& f, const SharpFunction& g) {
    return zip(f, g, [](double a, double b) { return a - b; });
}

SharpFunction scale(double a, const SharpFunction& f) {
    SharpFunction out{f.grid, std::vector<double>(f.left.size()),
                      std::vector<double>(f.right.size()), a * f.limit_neg, a * f.limit_pos};
    for (std::size_t i = 0; i < f.left.size(); ++i) out.left[i] = a * f.left[i];
    for (std::size_t i = 0; i < f.right.size(); ++i) out.right[i] = a * f.right[i];
    return out;
}

double sup_norm(const SharpFunction& f) {
    double m = std::max(std::abs(f.limit_neg), std::abs(f.limit_pos));
    for (double v : f.left) m = std::max(m, std::abs(v));
    for (double v : f.right) m = std::max(m, std::abs(v));
    return m;
}

double sup_dist(const SharpFunction& f, const SharpFunction& g) {
    require_same_grid(f.grid, g.grid);
    double m = std::max(std::abs(f.limit_neg - g.limit_neg), std::abs(f.limit_pos - g.limit_pos));
    for (std::size_t i = 0; i < f.left.size(); ++i)
        m = std::max(m, std::abs(f.left[i] - g.left[i]));
    for (std::size_t i = 0; i < f.right.size(); ++i)
        m = std::max(m, std::abs(f.right[i] - g.right[i]));
    return m;
}

double sup_dist_on(const SharpFunction& f, const SharpFunction& g, double lo, double hi) {
    require_same_grid(f.grid, g.grid);
    const int m = f.grid.half_size();
    double d = 0.0;
    for (int i = 0; i < m; ++i) {
        const double xl = f.grid.node(i);  // left-branch node
        if (xl >= lo && xl <= hi) d = std::max(d, std::abs(f.left[static_cast<std::size_t>(i)] -
                                                           g.left[static_cast<std::size_t>(i)]));
        const double xr = f.grid.node(f.grid.center_index() + i);
        if (xr >= lo && xr <= hi) d = std::max(d, std::abs(f.right[static_cast<std::size_t>(i)] -
                                                           g.right[static_cast<std::size_t>(i)]));
    }
    return d;
}

bool bitwise_equal(const SharpFunction& f, const SharpFunction& g) {
    if (f.grid != g.grid) return false;
    if (std::memcmp(&f.limit_neg, &g.limit_neg, sizeof(double)) != 0) return false;
    if (std::memcmp(&f.limit_pos, &g.limit_pos, sizeof(double)) != 0) return false;
    return std::memcmp(f.left.data(), g.left.data(), f.left.size() * sizeof(double)) == 0 &&
           std::memcmp(f.right.data(), g.right.data(), f.right.size() * sizeof(double)) == 0;
}

LineFunction flip_J(const SharpFunction& f, double tol) {
    if (std::abs(f.value0_neg() + f.value0_pos()) > tol)
        throw OppositeValuesViolated("flip_J: input must satisfy f(0-) = -f(0+)");
    const int n = f.grid.n_points();
    const int c = f.grid.center_index();
    LineFunction out{f.grid, std::vector<double>(static_cast<std::size_t>(n)),
                     -f.limit_neg, f.limit_pos};
    for (int k = 0; k < c; ++k)
        out.samples[static_cast<std::size_t>(k)] = -f.left[static_cast<std::size_t>(k)];
    for (int k = c; k < n; ++k)
        out.samples[static_cast<std::size_t>(k)] = f.right[static_cast<std::size_t>(k - c)];
    return out;
}

SharpFunction flip_J_inverse(const LineFunction& g) {
    const int c = g.grid.center_index();
    const int m = g.grid.half_size();
    SharpFunction out{g.grid, std::vector<double>(static_cast<std::size_t>(m)),
                      std::vector<double>(static_cast<std::size_t>(m)),
                      -g.limit_neg, g.limit_pos};
    for (int i = 0; i < m; ++i) {
        out.left[static_cast<std::size_t>(i)] = -g.samples[static_cast<std::size_t>(i)];
        out.right[static_cast<std::size_t>(i)] = g.samples[static_cast<std::size_t>(c + i)];
    }
    return out;
}

}  // namespace membrane
