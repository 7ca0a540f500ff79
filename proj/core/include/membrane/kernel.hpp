#pragma once

#include <span>
#include <vector>

#include "membrane/line_function.hpp"

namespace membrane {

/// Quadrature weights for one grid panel against the kernel e^{-a(x-y)}:
///   integral_0^h e^{-a(h-u)} [v0 (1-u/h) + v1 (u/h)] du = w0 v0 + w1 v1,
/// exact for the piecewise linear interpolant, any sign and stiffness of a.
struct PanelWeights {
    double decay;  ///< e^{-a h}
    double w0;     ///< weight of the left sample
    double w1;     ///< weight of the right sample
};

PanelWeights exp_panel_weights(double a, double h);

/// One-sided recurrence: given samples v_0..v_{m-1} at spacing h, returns
/// I_j = integral_0^{j h} e^{-a(j h - y)} v(y) dy for j = 0..m-1, where v is
/// the piecewise linear interpolant. I_0 = 0.
std::vector<double> convolve_half(double a, std::span<const double> v, double h);

/// Signed convolution with the exponential kernel, valid for every real x:
///   (e_a * phi)(x) = integral_0^x e^{-a(x-y)} phi(y) dy,
/// where e_a(x) = e^{-a x} and the integral is oriented (negative for x < 0
/// when the integrand is positive). Computed by the kernel-exact recurrence
/// rightward from 0 and by the mirror identity -(f*g)^T = f^T * g^T leftward,
/// so the sign symmetry holds bit-exactly.
///
/// Limits: for a > 0 the value at +infinity is phi(+inf)/a; the -infinity side
/// diverges and the stored limit falls back to the boundary sample (constant
/// tail model). Mirrored for a < 0; both sides fall back for a = 0.
LineFunction exp_convolve(double a, const LineFunction& phi);

/// Laplace transform of the right half: integral_0^inf e^{-lambda x} phi(x) dx,
/// grid quadrature on [0, L] plus the analytic tail phi(+inf) e^{-lambda L}/lambda.
double laplace_at(const LineFunction& phi, double lambda);

/// x -> integral_{-inf}^x e^{-gamma (x-y)} psi(y) dy with the constant-tail
/// model below -L; limits at +-infinity are psi(+-inf)/gamma.
LineFunction improper_left(double gamma, const LineFunction& psi);

/// x -> integral_x^{inf} e^{gamma (x-y)} psi(y) dy; the exact mirror of
/// improper_left under reflection.
LineFunction improper_right(double gamma, const LineFunction& psi);

enum class DiracVariant {
    FullLeft,   ///< n a * integral_{-inf}^x e^{-n a (x-y)} phi, sup over all nodes
    FullRight,  ///< n a * integral_x^{inf} e^{n a (x-y)} phi, sup over all nodes
    HalfLine,   ///< n a * integral_0^x ... + e^{-n a x} phi(0), sup over x >= 0
};

/// Sup-norm distance between the exponential Dirac approximation at scale n*a
/// and phi itself. Tends to 0 as n grows when phi is uniformly continuous.
double dirac_limit_residual(DiracVariant variant, double a, int n, const LineFunction& phi);

}  // namespace membrane
