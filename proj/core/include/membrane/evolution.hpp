#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "membrane/extensions.hpp"
#include "membrane/function_pair.hpp"
#include "membrane/membrane_params.hpp"
#include "membrane/sharp_function.hpp"

namespace membrane {

enum class EvolutionKind { Free, Snapping, Perp, Skew, Weks };

/// An evolution family: the free whole-line one, or one of the four
/// membrane families (which carry their permeability parameters).
/// Admissibility of inputs at the interface:
///   Free and Skew need continuity at 0, Perp and Weks need opposite values,
///   Snapping accepts any sharp function.
struct Evolution {
    EvolutionKind kind;
    std::optional<MembraneParams> params;

    static Evolution free() { return {EvolutionKind::Free, std::nullopt}; }
    static Evolution snapping(MembraneParams p) { return {EvolutionKind::Snapping, p}; }
    static Evolution perp(MembraneParams p) { return {EvolutionKind::Perp, p}; }
    static Evolution skew(MembraneParams p) { return {EvolutionKind::Skew, p}; }
    static Evolution weks(MembraneParams p) { return {EvolutionKind::Weks, p}; }
};

/// The basic cosine family (C(t) f)(x) = [f(x+t) + f(x-t)] / 2 on the
/// whole-line representation; limits are unchanged. When t is an integer
/// multiple of the spacing the evaluation is a pure index shift, so no
/// interpolation error enters.
LineFunction cosine_basic(double t, const LineFunction& f);

/// Componentwise cosine family on pairs.
FunctionPair cosine_pair(double t, const FunctionPair& p);

/// The kind-specific extension used by the Kelvin formula below.
FunctionPair extension_for(const Evolution& ev, const SharpFunction& f);

/// Kelvin formula: restrict( C_pair(t) ( extend_kind(f) ) ).
SharpFunction cosine_evolve(const Evolution& ev, double t, const SharpFunction& f);

/// Heat semigroup by the Weierstrass formula,
///   e^{tA} f = (4 pi t)^{-1/2} integral e^{-s^2/(4t)} Cos(s) f ds,
/// realized by Simpson quadrature with step h over |s| <= S(t), where
/// S(t) = 2 sqrt(t ln 1e12) + h keeps the discarded Gaussian tail below 1e-12.
SharpFunction semigroup_evolve(const Evolution& ev, double t, const SharpFunction& f);

/// One-sided interface mismatches of the conditions defining the generator
/// domain of the family, by second-order one-sided stencils at 0.
struct TransmissionResidual {
    std::vector<std::pair<std::string, double>> entries;
    double max_abs = 0.0;
};

TransmissionResidual transmission_residual(const Evolution& ev, const SharpFunction& f);

/// || 2 t^{-2} (Cos(t) f - f) - f''_fd || over interior nodes away from 0,
/// with f''_fd the centered second difference on each branch. For smooth f in
/// the generator domain this decays like O(t^2) + O(h^2).
double generator_residual(const Evolution& ev, double t, const SharpFunction& f);

}  // namespace membrane
