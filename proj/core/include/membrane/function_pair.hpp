#pragma once

#include <array>

#include "membrane/line_function.hpp"
#include "membrane/sharp_function.hpp"

namespace membrane {

/// Element of the two-copy state space: a pair of whole-line functions on the
/// same grid. Extensions, projections and the Cartesian product cosine family
/// all act on these.
struct FunctionPair {
    LineFunction first;
    LineFunction second;

    FunctionPair(LineFunction f1, LineFunction f2)
        : first(std::move(f1)), second(std::move(f2)) {
        require_same_grid(first.grid, second.grid);
    }
};

using Mat2 = std::array<std::array<double, 2>, 2>;

/// The matrix action (phi1, phi2) -> (m11 phi1^T + m12 phi2^T,
///                                    m21 phi1   + m22 phi2),
/// which commutes with the Cartesian product cosine family.
FunctionPair matrix_apply(const Mat2& m, const FunctionPair& p);

/// The flip (f1, f2) -> (-f1, f2); an isometric involution.
FunctionPair flip_Jpair(const FunctionPair& p);

/// Restriction: glue the first component on the left half line with the
/// second on the right, keeping both one-sided values at 0.
SharpFunction restrict_pair(const FunctionPair& p);

FunctionPair add(const FunctionPair& p, const FunctionPair& q);
FunctionPair subtract(const FunctionPair& p, const FunctionPair& q);
FunctionPair scale(double a, const FunctionPair& p);

double sup_norm(const FunctionPair& p);
double sup_dist(const FunctionPair& p, const FunctionPair& q);
bool bitwise_equal(const FunctionPair& p, const FunctionPair& q);

}  // namespace membrane
