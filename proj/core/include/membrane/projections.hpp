#pragma once

#include "membrane/function_pair.hpp"
#include "membrane/membrane_params.hpp"

namespace membrane {

/// The two scalar-field inputs every projection is built from:
///   k1 = alpha f1^o + beta f2^o   (odd by construction, bit-exactly),
///   k2 = f1^e - f2^e              (even by construction),
///   c  = k1^(gamma) + (gamma/2) k2^(gamma)   (Laplace transforms at gamma).
struct ProjectionInputs {
    LineFunction k1;
    LineFunction k2;
    double c;
};

ProjectionInputs projection_inputs(const MembraneParams& params, const FunctionPair& p);

/// Projection of the pair space onto the snapping-out extension subspace.
/// Uses the numerically stable improper-integral form
///   g1 = f1^e + (gamma+2 alpha)/2 * IL - (gamma-2 alpha)/2 * IR,
///   g2 = f2^e + (gamma+2 beta)/2  * IR - (gamma-2 beta)/2  * IL,
/// where IL(x) = integral_{-inf}^x e^{-gamma(x-y)} (k1/gamma - k2/2)(y) dy and
/// IR(x) = integral_x^{inf} e^{gamma(x-y)} (k1/gamma + k2/2)(y) dy.
FunctionPair project_C(const MembraneParams& params, const FunctionPair& p);

/// Complementary projection, defined as the exact nodewise complement
/// p - project_C(p), so that the direct-sum identity holds bit-exactly.
FunctionPair project_D(const MembraneParams& params, const FunctionPair& p);

/// Scaling limit of project_C: the closed form
///   (f1^e + (2 alpha/gamma^2) k1 - k2/2, f2^e + (2 beta/gamma^2) k1 + k2/2).
/// No quadrature is involved, so idempotence holds to rounding.
FunctionPair project_C_skew(const MembraneParams& params, const FunctionPair& p);

/// Complement of project_C_skew (exact nodewise complement).
FunctionPair project_D_weks(const MembraneParams& params, const FunctionPair& p);

/// The equivalent hyperbolic-kernel form of project_C, built from sinh/cosh
/// convolutions. It amplifies quadrature noise like e^{gamma |x|}, so it is
/// only suitable as a cross-check on small |x| and moderate gamma; the stable
/// form above is the production path.
FunctionPair project_C_hyperbolic(const MembraneParams& params, const FunctionPair& p);

}  // namespace membrane
