#include "membrane/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "membrane/errors.hpp"
#include "membrane/projections.hpp"

namespace membrane {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Converging: return "converging";
        case Verdict::Diverging: return "diverging";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

void check_resolution_guard(const MembraneParams& params, const Grid& grid, int n_max) {
    if (static_cast<double>(n_max) * params.sum() * grid.spacing() > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "resolution guard: n*(alpha+beta)*h = "
            << static_cast<double>(n_max) * params.sum() * grid.spacing()
            << " > 1; refine the grid or shorten the ladder";
        throw ResolutionGuardViolated(msg.str());
    }
}

namespace {

std::string describe_t_set(const std::vector<double>& t_set) {
    std::ostringstream os;
    os << "t in {";
    for (std::size_t i = 0; i < t_set.size(); ++i) os << (i ? ", " : "") << t_set[i];
    os << "}";
    return os.str();
}

// Absolute slack so that error sequences sitting on the rounding floor
// (including exact zeros) still count as converged.
constexpr double kFloorSlack = 1e-12;

bool converging_rule(const std::vector<int>& ladder, const std::vector<double>& errors) {
    if (errors.empty()) return false;
    if (!(errors.back() <= 0.05 * errors.front() + kFloorSlack)) return false;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i)
        if (ladder[i] >= 4 && errors[i + 1] > errors[i] + kFloorSlack) return false;
    return true;
}

void validate_ladder(const std::vector<int>& ladder) {
    if (ladder.empty()) throw MembraneError("ladder must not be empty");
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (ladder[i] < 1) throw MembraneError("ladder entries must be >= 1");
        if (i > 0 && ladder[i] <= ladder[i - 1])
            throw MembraneError("ladder must be strictly increasing");
    }
}

}  // namespace

LadderReport converge_cosine(const MembraneParams& params, const SharpFunction& f,
                             const std::vector<int>& ladder,
                             const std::vector<double>& t_set) {
    validate_ladder(ladder);
    check_resolution_guard(params, f.grid, ladder.back());
    const FunctionPair ref = detail::extend_skew_any(params, f);

    LadderReport rep;
    rep.ladder = ladder;
    rep.uniform_over = describe_t_set(t_set);
    // err[i][j]: rung i, time j
    std::vector<std::vector<double>> per_t(ladder.size());
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const FunctionPair ext =
            extend_snapping(params.scaled(static_cast<double>(ladder[i])), f);
        const FunctionPair delta = subtract(ext, ref);
        double worst = 0.0;
        per_t[i].reserve(t_set.size());
        for (double t : t_set) {
            const double e = sup_norm(restrict_pair(cosine_pair(t, delta)));
            per_t[i].push_back(e);
            worst = std::max(worst, e);
        }
        rep.errors.push_back(worst);
    }

    if (converging_rule(ladder, rep.errors)) {
        rep.verdict = Verdict::Converging;
        return rep;
    }
    // Divergence witness: some t* where the error never falls below
    // 0.05 * |jump| from n = 4 on.
    const double delta_floor = 0.05 * std::abs(f.jump());
    if (delta_floor > 0.0) {
        for (std::size_t j = 0; j < t_set.size(); ++j) {
            bool witness = true;
            bool any = false;
            for (std::size_t i = 0; i < ladder.size(); ++i) {
                if (ladder[i] < 4) continue;
                any = true;
                if (per_t[i][j] < delta_floor) {
                    witness = false;
                    break;
                }
            }
            if (any && witness) {
                rep.verdict = Verdict::Diverging;
                rep.witness_t = t_set[j];
                return rep;
            }
        }
    }
    rep.verdict = Verdict::Inconclusive;
    return rep;
}

LadderReport converge_semigroup(const MembraneParams& params, const SharpFunction& f,
                                const std::vector<int>& ladder,
                                const std::vector<double>& t_set) {
    validate_ladder(ladder);
    for (double t : t_set)
        if (!(t > 0.0)) throw NonPositiveTime("converge_semigroup: t_set must lie in (0, inf)");
    check_resolution_guard(params, f.grid, 2 * ladder.back());

    auto iterate = [&](int n) {
        std::vector<SharpFunction> us;
        us.reserve(t_set.size());
        const Evolution ev = Evolution::snapping(params.scaled(static_cast<double>(n)));
        for (double t : t_set) us.push_back(semigroup_evolve(ev, t, f));
        return us;
    };

    LadderReport rep;
    rep.ladder = ladder;
    rep.uniform_over = describe_t_set(t_set);

    std::vector<SharpFunction> prev = iterate(ladder.front());
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const std::vector<SharpFunction> next = iterate(2 * ladder[i]);
        double worst = 0.0;
        for (std::size_t j = 0; j < t_set.size(); ++j)
            worst = std::max(worst, sup_dist(next[j], prev[j]));
        rep.errors.push_back(worst);
        if (i + 1 < ladder.size()) {
            if (ladder[i + 1] == 2 * ladder[i]) {
                prev = next;
            } else {
                prev = iterate(ladder[i + 1]);
            }
        } else if (std::abs(f.jump()) <= kAlgebraicTol) {
            const Evolution skew = Evolution::skew(params);
            double lim = 0.0;
            for (std::size_t j = 0; j < t_set.size(); ++j)
                lim = std::max(lim, sup_dist(next[j], semigroup_evolve(skew, t_set[j], f)));
            rep.limit_error = lim;
        }
    }
    rep.verdict = converging_rule(ladder, rep.errors) ? Verdict::Converging
                                                      : Verdict::Inconclusive;
    return rep;
}

LadderReport converge_perp(const MembraneParams& params, const SharpFunction& f,
                           const std::vector<int>& ladder,
                           const std::vector<double>& t_set) {
    validate_ladder(ladder);
    check_resolution_guard(params, f.grid, ladder.back());
    const FunctionPair ref = extend_weks(params, f);  // also checks admissibility

    LadderReport rep;
    rep.ladder = ladder;
    rep.uniform_over = describe_t_set(t_set);
    for (int n : ladder) {
        const FunctionPair ext = extend_perp(params.scaled(static_cast<double>(n)), f);
        const FunctionPair delta = subtract(ext, ref);
        double worst = 0.0;
        for (double t : t_set)
            worst = std::max(worst, sup_norm(restrict_pair(cosine_pair(t, delta))));
        rep.errors.push_back(worst);
    }
    rep.verdict = converging_rule(ladder, rep.errors) ? Verdict::Converging
                                                      : Verdict::Inconclusive;
    return rep;
}

LadderReport converge_projection(const MembraneParams& params, const FunctionPair& p,
                                 const std::vector<int>& ladder) {
    validate_ladder(ladder);
    check_resolution_guard(params, p.first.grid, ladder.back());
    const FunctionPair ref = project_C_skew(params, p);

    LadderReport rep;
    rep.ladder = ladder;
    rep.uniform_over = "projection (no time parameter)";
    for (int n : ladder) {
        const FunctionPair pc = project_C(params.scaled(static_cast<double>(n)), p);
        rep.errors.push_back(sup_dist(pc, ref));
    }
    rep.verdict = converging_rule(ladder, rep.errors) ? Verdict::Converging
                                                      : Verdict::Inconclusive;
    return rep;
}

}  // namespace membrane
