#pragma once

#include <cmath>

#include "membrane/errors.hpp"

namespace membrane {

/// Permeability pair (alpha, beta) of the semi-permeable membrane at 0.
/// alpha governs filtering from the left, beta from the right; both are
/// non-negative and at least one must be positive.
class MembraneParams {
public:
    MembraneParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        if (!(alpha >= 0.0) || !(beta >= 0.0) || !(alpha + beta > 0.0) ||
            !std::isfinite(alpha) || !std::isfinite(beta))
            throw DegenerateMembrane("MembraneParams: need alpha, beta >= 0 and alpha + beta > 0");
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double sum() const { return alpha_ + beta_; }

    /// gamma = sqrt(2 (alpha^2 + beta^2)); positive whenever alpha + beta > 0.
    double gamma() const { return std::sqrt(2.0 * (alpha_ * alpha_ + beta_ * beta_)); }

    /// Parameters scaled by n, used by the scaling-limit ladders.
    MembraneParams scaled(double n) const { return MembraneParams(n * alpha_, n * beta_); }

    MembraneParams swapped() const { return MembraneParams(beta_, alpha_); }

private:
    double alpha_;
    double beta_;
};

}  // namespace membrane
