#pragma once

#include <optional>
#include <string>
#include <vector>

#include "membrane/evolution.hpp"
#include "membrane/function_pair.hpp"
#include "membrane/membrane_params.hpp"
#include "membrane/sharp_function.hpp"

namespace membrane {

enum class Verdict { Converging, Diverging, Inconclusive };

std::string to_string(Verdict v);

/// Result of one n-ladder experiment. The rule for "converging" is fixed:
/// the error sequence must be non-increasing from the first rung with n >= 4
/// on, and the last error must be at most 5% of the first, both up to an
/// absolute slack of 1e-12 for sequences sitting on the rounding floor.
/// "Diverging" needs a witness t* at which the error stays above
/// 0.05 * |jump of f| for every rung with n >= 4; when neither holds the
/// verdict is inconclusive.
struct LadderReport {
    std::vector<int> ladder;
    std::vector<double> errors;
    std::string uniform_over;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<double> witness_t;      ///< divergence witness, when found
    std::optional<double> limit_error;    ///< distance to the named limit object
};

inline constexpr int kDefaultLadder[] = {1, 2, 4, 8, 16, 32, 64};

/// Throws ResolutionGuardViolated unless n * (alpha+beta) * h <= 1 for the
/// largest rung: beyond that the scaled exponential boundary layer is thinner
/// than a grid cell and rung errors stop being meaningful against the limit.
void check_resolution_guard(const MembraneParams& params, const Grid& grid, int n_max);

/// Errors max over t of || Cos_{n a, n b}(t) f - Cos_skew(t) f || on the sharp
/// representation. Converges for f continuous at 0; for a genuine jump the
/// limit family is taken as the formal skew extension and the error stays
/// bounded away from zero at some t (divergence witness).
LadderReport converge_cosine(const MembraneParams& params, const SharpFunction& f,
                             const std::vector<int>& ladder, const std::vector<double>& t_set);

/// Cauchy differences of the heat semigroups: errors[i] is
/// max over t of || u_{2 n_i}(t) - u_{n_i}(t) || with u_n = e^{t A_{n a, n b}} f;
/// each rung's partner is its double, so the last rung consults 2 * n_last.
/// Converges for every admissible f, jumps included, on t sets inside (0, inf).
/// For f continuous at 0, limit_error reports the distance of the largest
/// iterate to the skew semigroup.
LadderReport converge_semigroup(const MembraneParams& params, const SharpFunction& f,
                                const std::vector<int>& ladder,
                                const std::vector<double>& t_set);

/// Convergence of the complementary families toward the conjugate limit
/// family (the one with the roles of alpha and beta reversed, realized here
/// through the weks extension). Requires f(0-) = -f(0+).
LadderReport converge_perp(const MembraneParams& params, const SharpFunction& f,
                           const std::vector<int>& ladder, const std::vector<double>& t_set);

/// || project_C(n a, n b, p) - project_C_skew(a, b, p) || per rung. The
/// complementary projections converge identically since both are exact
/// complements of these.
LadderReport converge_projection(const MembraneParams& params, const FunctionPair& p,
                                 const std::vector<int>& ladder);

}  // namespace membrane
