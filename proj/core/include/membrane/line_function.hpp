#pragma once

#include <functional>
#include <vector>

#include "membrane/grid.hpp"

namespace membrane {

/// Sampled element of the space of continuous functions on the line with
/// finite limits at +-infinity. Inside [-L, L] the function is the piecewise
/// linear interpolant of the samples; beyond the grid it is constant and equal
/// to the stored limit (the tail model).
struct LineFunction {
    Grid grid;
    std::vector<double> samples;
    double limit_neg = 0.0;  ///< value at -infinity
    double limit_pos = 0.0;  ///< value at +infinity

    /// Value at node k, with out-of-range indices resolved by the tail model.
    double at(int k) const {
        if (k < 0) return limit_neg;
        if (k >= grid.n_points()) return limit_pos;
        return samples[static_cast<std::size_t>(k)];
    }

    /// Off-grid evaluation: linear interpolation inside, limits outside.
    double value(double x) const;
};

LineFunction sample_line(const Grid& grid, const std::function<double(double)>& f,
                         double limit_neg, double limit_pos);
LineFunction constant_line(const Grid& grid, double c);
LineFunction zero_line(const Grid& grid);

/// f^T(x) = f(-x): samples reversed, limits swapped. An exact involution.
LineFunction reflect(const LineFunction& f);

struct ParityParts {
    LineFunction even;  ///< f^e = (f + f^T)/2, reflection-symmetric bit-exactly
    LineFunction odd;   ///< f^o = (f - f^T)/2, antisymmetric bit-exactly
};

ParityParts parity_parts(const LineFunction& f);

LineFunction add(const LineFunction& f, const LineFunction& g);
LineFunction subtract(const LineFunction& f, const LineFunction& g);
LineFunction scale(double a, const LineFunction& f);
LineFunction negate(const LineFunction& f);
/// a*f + g
LineFunction axpy(double a, const LineFunction& f, const LineFunction& g);

/// Supremum norm over all nodes and both limit values.
double sup_norm(const LineFunction& f);

/// sup |f| over nodes with lo <= x_k <= hi (limits excluded).
double sup_abs_on(const LineFunction& f, double lo, double hi);

/// sup |f - g| over all nodes and limits.
double sup_dist(const LineFunction& f, const LineFunction& g);

/// sup |f - g| over nodes with lo <= x_k <= hi.
double sup_dist_on(const LineFunction& f, const LineFunction& g, double lo, double hi);

bool bitwise_equal(const LineFunction& f, const LineFunction& g);

}  // namespace membrane
