#pragma once

#include <string>
#include <utility>
#include <vector>

#include "membrane/function_pair.hpp"
#include "membrane/membrane_params.hpp"
#include "membrane/sharp_function.hpp"

namespace membrane {

/// Tolerance for data conditions at the interface (continuity / opposite
/// values): these are properties of the input, not discretization artifacts.
inline constexpr double kAlgebraicTol = 1e-9;

/// The four invariant subspaces of the pair space, each characterized by the
/// residual relations checked in membership():
///  - SnappingC: psi1^o = alpha e_{a+b}*(psi2 - psi1^T),
///               psi2^o = beta  e_{a+b}*(psi2 - psi1^T) on [0, L];
///  - PerpD:     psi2^e = e_{a+b}*(beta psi2 - alpha psi1^T) + psi2(0) e_{a+b}
///               and psi2^e = -psi1^e on [0, L];
///  - SkewC:     g1^e = g2^e and beta g1^o = alpha g2^o;
///  - WeksD:     g1^e = -g2^e and alpha g1^o = -beta g2^o.
enum class SubspaceKind { SnappingC, PerpD, SkewC, WeksD };

struct MembershipReport {
    std::vector<std::pair<std::string, double>> residuals;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Extension used by the snapping-out Brownian motion: copies f on the native
/// half lines and continues each branch across 0 by
///   fl(x) = f(-x) + 2 alpha (e_{a+b} * [f - f^T])(x),
///   fr(-x) = f(x) - 2 beta (e_{a+b} * [f - f^T])(x),   x > 0.
/// The result lies in the SnappingC subspace and its sup norm is bounded by
/// (1 + 4 max(alpha,beta)/(alpha+beta)) ||f|| <= 5 ||f||.
FunctionPair extend_snapping(const MembraneParams& params, const SharpFunction& f);

/// Extension for the complementary transmission conditions
/// f(0-) = -f(0+), f''(0+) = alpha f'(0-) + beta f'(0+); requires the input
/// to take opposite values at 0. Lands in PerpD with norm at most 5.
FunctionPair extend_perp(const MembraneParams& params, const SharpFunction& f);

/// Limit extension of the skew Brownian motion; requires continuity at 0.
FunctionPair extend_skew(const MembraneParams& params, const SharpFunction& f);

/// Limit extension of the conjugate family; requires opposite values at 0.
FunctionPair extend_weks(const MembraneParams& params, const SharpFunction& f);

MembershipReport membership(SubspaceKind kind, const MembraneParams& params,
                            const FunctionPair& p, double tol);

namespace detail {
/// The skew/weks extension formulas applied without the interface
/// admissibility check; used by the scaling ladders, where the formal limit
/// extension of a jump function is the divergence reference.
FunctionPair extend_skew_any(const MembraneParams& params, const SharpFunction& f);
FunctionPair extend_weks_any(const MembraneParams& params, const SharpFunction& f);
}  // namespace detail

}  // namespace membrane
