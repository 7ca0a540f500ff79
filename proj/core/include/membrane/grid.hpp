#pragma once

#include <cmath>

#include "membrane/errors.hpp"

namespace membrane {

/// Uniform symmetric grid on [-L, L] with an odd number of nodes, so that 0 is
/// always a node. Nodes are x_k = (k - c) * h for k = 0..n-1, where c is the
/// index of the origin; this form keeps x_c == 0 and x_{n-1-k} == -x_k exact.
class Grid {
public:
    Grid(double half_width, int n_points)
        : half_width_(half_width), n_points_(n_points) {
        if (!(half_width > 0.0) || !std::isfinite(half_width))
            throw MembraneError("Grid: half-width must be positive and finite");
        if (n_points < 3 || n_points % 2 == 0)
            throw MembraneError("Grid: n_points must be an odd integer >= 3");
        spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
        center_ = (n_points - 1) / 2;
    }

    double half_width() const { return half_width_; }
    int n_points() const { return n_points_; }
    double spacing() const { return spacing_; }
    int center_index() const { return center_; }

    /// Number of nodes on [0, L] (the origin included).
    int half_size() const { return center_ + 1; }

    double node(int k) const { return static_cast<double>(k - center_) * spacing_; }

    /// Exact coordinate of the last node, c * h (may differ from L by rounding).
    double bound() const { return static_cast<double>(center_) * spacing_; }

    bool operator==(const Grid& o) const {
        return half_width_ == o.half_width_ && n_points_ == o.n_points_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    double half_width_;
    int n_points_;
    double spacing_;
    int center_;
};

inline void require_same_grid(const Grid& a, const Grid& b) {
    if (a != b) throw GridMismatch("operands live on different grids");
}

}  // namespace membrane
