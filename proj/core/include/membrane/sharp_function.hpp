#pragma once

#include <vector>

#include "membrane/grid.hpp"
#include "membrane/line_function.hpp"

namespace membrane {

/// Sampled function on the line split at the membrane: separate branches for
/// [-L, 0] and [0, L] with independent one-sided values f(0-) and f(0+), plus
/// limits at +-infinity. No continuity across 0 is required.
///
/// left[i] holds the value at node (i - (m-1)) * h for i = 0..m-1 (so the last
/// entry is f(0-)); right[j] holds the value at node j * h (the first entry is
/// f(0+)); m = grid.half_size().
struct SharpFunction {
    Grid grid;
    std::vector<double> left;
    std::vector<double> right;
    double limit_neg = 0.0;
    double limit_pos = 0.0;

    double value0_neg() const { return left.back(); }
    double value0_pos() const { return right.front(); }
    double jump() const { return right.front() - left.back(); }

    /// Value at the node j*h of the right branch / -j*h of the left branch.
    double right_at(int j) const { return right[static_cast<std::size_t>(j)]; }
    double left_at(int j) const {  // j nodes to the left of 0
        return left[left.size() - 1 - static_cast<std::size_t>(j)];
    }
};

SharpFunction sharp_from_line(const LineFunction& f);

/// Merge the branches into a whole-line function; requires the one-sided
/// values at 0 to agree within tol (the node at 0 gets their average).
LineFunction line_from_sharp(const SharpFunction& f, double tol);

/// Build from separate branch callables and explicit interface values.
SharpFunction sample_sharp(const Grid& grid,
                           const std::function<double(double)>& left_fn,
                           const std::function<double(double)>& right_fn,
                           double value0_neg, double value0_pos,
                           double limit_neg, double limit_pos);

SharpFunction add(const SharpFunction& f, const SharpFunction& g);
SharpFunction subtract(const SharpFunction& f, const SharpFunction& g);
SharpFunction scale(double a, const SharpFunction& f);

double sup_norm(const SharpFunction& f);
double sup_dist(const SharpFunction& f, const SharpFunction& g);
/// sup |f - g| over nodes with lo <= x <= hi (one-sided 0 nodes both count).
double sup_dist_on(const SharpFunction& f, const SharpFunction& g, double lo, double hi);

bool bitwise_equal(const SharpFunction& f, const SharpFunction& g);

/// The isometry J between the opposite-values space {f(0-) = -f(0+)} and the
/// continuous functions: Jf = -f on the left half line, f on the right,
/// Jf(0) = f(0+). Throws OppositeValuesViolated if |f(0-) + f(0+)| > tol.
LineFunction flip_J(const SharpFunction& f, double tol);

/// Inverse of flip_J: maps a whole-line function g to the sharp function
/// equal to -g on the left branch (with value -g(0) at 0-) and g on the right.
SharpFunction flip_J_inverse(const LineFunction& g);

}  // namespace membrane
