#include <doctest.h>

#include <cmath>
#include <random>

#include "membrane/corpus.hpp"
#include "membrane/errors.hpp"
#include "membrane/evolution.hpp"
#include "membrane/extensions.hpp"
#include "test_helpers.hpp"

using namespace membrane;
using namespace membrane::testing;

TEST_CASE("basic cosine family pointwise") {
    const Grid& g = grid30();
    const LineFunction f = gauss_line(g);

    SUBCASE("t = 0 is the identity, bitwise") {
        CHECK(bitwise_equal(cosine_basic(0.0, f), f));
    }
    SUBCASE("time symmetry is bitwise") {
        for (double t : {1.0, 0.437}) {
            CHECK(bitwise_equal(cosine_basic(-t, f), cosine_basic(t, f)));
        }
    }
    SUBCASE("a gaussian at t = 1 matches the direct formula") {
        const LineFunction u = cosine_basic(1.0, f);
        double worst = 0.0;
        for (int k = 0; k < g.n_points(); ++k) {
            const double x = g.node(k);
            const double expect = 0.5 * (std::exp(-(x + 1.0) * (x + 1.0)) +
                                         std::exp(-(x - 1.0) * (x - 1.0)));
            worst = std::max(worst, std::abs(u.samples[static_cast<std::size_t>(k)] - expect));
        }
        CHECK(worst <= 1e-13);  // shift-exact evaluation, rounding only
    }
    SUBCASE("limits are unchanged") {
        const LineFunction h = corpus_line("atan", g);
        const LineFunction u = cosine_basic(2.3, h);
        CHECK(u.limit_neg == h.limit_neg);
        CHECK(u.limit_pos == h.limit_pos);
    }
}

TEST_CASE("d'Alembert equation for the basic family against the 4-term oracle") {
    const Grid& g = grid30();
    std::mt19937_64 rng(51);
    const LineFunction f = random_line(g, rng);
    const double window = g.half_width() - 3.0;
    for (const auto& [s, t] : {std::pair{0.3, 0.7}, {0.53, 0.21}}) {
        // direct evaluation: C(s)C(t)f(x) = [f(x+s+t)+f(x+s-t)+f(x-s+t)+f(x-s-t)]/4
        const LineFunction composed = cosine_basic(s, cosine_basic(t, f));
        double worst = 0.0;
        for (int k = 0; k < g.n_points(); ++k) {
            const double x = g.node(k);
            if (std::abs(x) > window) continue;
            const double oracle = 0.25 * (f.value(x + s + t) + f.value(x + s - t) +
                                          f.value(x - s + t) + f.value(x - s - t));
            worst = std::max(worst,
                             std::abs(composed.samples[static_cast<std::size_t>(k)] - oracle));
        }
        CHECK(worst <= eps_disc(g));
        const LineFunction lhs =
            add(cosine_basic(t + s, f), cosine_basic(t - s, f));
        CHECK(sup_dist_on(lhs, scale(2.0, composed), -window, window) <= 3.0 * eps_disc(g));
    }
}

TEST_CASE("pair evolution is componentwise") {
    const Grid& g = grid30();
    std::mt19937_64 rng(52);
    const FunctionPair p = random_pair(g, rng);
    const FunctionPair u = cosine_pair(0.8, p);
    CHECK(bitwise_equal(u.first, cosine_basic(0.8, p.first)));
    CHECK(bitwise_equal(u.second, cosine_basic(0.8, p.second)));
}

TEST_CASE("membrane cosine families") {
    const Grid& g = grid30();
    const MembraneParams params(1.0, 2.0);

    SUBCASE("free kind on continuous data reduces to the basic family") {
        const SharpFunction f = corpus_sharp("expabs", g);
        const SharpFunction u = cosine_evolve(Evolution::free(), 0.9, f);
        const LineFunction direct = cosine_basic(0.9, corpus_line("expabs", g));
        CHECK(sup_dist(u, restrict_pair({direct, direct})) == 0.0);
    }
    SUBCASE("snapping on even continuous data collapses to the basic family") {
        const SharpFunction f = corpus_sharp("gauss", g);
        const SharpFunction u = cosine_evolve(Evolution::snapping(MembraneParams(0.7, 0.7)),
                                              1.3, f);
        const LineFunction direct = cosine_basic(1.3, corpus_line("gauss", g));
        CHECK(sup_dist(u, restrict_pair({direct, direct})) <= 1e-15);
    }
    SUBCASE("admissibility is enforced per kind") {
        const SharpFunction step = corpus_sharp("step", g);
        CHECK_THROWS_AS(cosine_evolve(Evolution::free(), 1.0, step), JumpAtZero);
        CHECK_THROWS_AS(cosine_evolve(Evolution::skew(params), 1.0, step), JumpAtZero);
        CHECK_THROWS_AS(cosine_evolve(Evolution::perp(params), 1.0, step),
                        OppositeValuesViolated);
        CHECK_NOTHROW(cosine_evolve(Evolution::snapping(params), 1.0, step));
    }
    SUBCASE("equiboundedness of the snapping family") {
        std::mt19937_64 rng(53);
        for (int i = 0; i < 20; ++i) {
            const SharpFunction f = random_sharp(g, rng);
            for (double t : {0.5, 1.0, 3.0})
                CHECK(sup_norm(cosine_evolve(Evolution::snapping(params), t, f)) <=
                      5.0 * sup_norm(f));
        }
    }
}

TEST_CASE("weks family is the conjugated swapped skew family") {
    const Grid& g = grid30();
    std::mt19937_64 rng(54);
    RandomOptions ov;
    ov.interface_condition = InterfaceCondition::OppositeValues;
    const MembraneParams params(1.0, 3.0);
    const SharpFunction f = random_sharp(g, rng, ov);
    for (double t : {0.5, 1.7}) {
        const SharpFunction lhs = cosine_evolve(Evolution::weks(params), t, f);
        const SharpFunction skew_of_J = cosine_evolve(
            Evolution::skew(params.swapped()), t, sharp_from_line(flip_J(f, 1e-9)));
        const SharpFunction rhs = flip_J_inverse(line_from_sharp(skew_of_J, 1e-7));
        CHECK(sup_dist(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("heat semigroup by the gaussian integral") {
    const Grid& g = grid30();

    SUBCASE("free semigroup on a gaussian matches the closed form") {
        const double s0 = 0.5;
        const SharpFunction f = sample_sharp(
            g, [&](double x) { return std::exp(-x * x / (4.0 * s0)); },
            [&](double x) { return std::exp(-x * x / (4.0 * s0)); }, 1.0, 1.0, 0.0, 0.0);
        for (double t : {0.1, 1.0}) {
            const SharpFunction u = semigroup_evolve(Evolution::free(), t, f);
            const double amp = std::sqrt(s0 / (s0 + t));
            double worst = 0.0;
            for (int j = 0; j < g.half_size(); ++j) {
                const double x = g.node(g.center_index() + j);
                const double expect = amp * std::exp(-x * x / (4.0 * (s0 + t)));
                worst = std::max(worst, std::abs(u.right_at(j) - expect));
                worst = std::max(worst, std::abs(u.left_at(j) - expect));
            }
            CHECK(worst <= 1e-6);
        }
    }
    SUBCASE("small times approach the identity monotonically") {
        const SharpFunction f = corpus_sharp("gauss", g);
        double prev = 1e300;
        for (double t : {0.2, 0.1, 0.05, 0.025}) {
            const double dist = sup_dist(semigroup_evolve(Evolution::free(), t, f), f);
            CHECK(dist < prev);
            prev = dist;
        }
        CHECK(prev <= 0.05);
    }
    SUBCASE("constants are fixed points of the snapping semigroup") {
        const MembraneParams params(1.0, 2.0);
        const SharpFunction one = constant_sharp(g, 1.0);
        const SharpFunction u = semigroup_evolve(Evolution::snapping(params), 0.7, one);
        CHECK(sup_dist(u, one) <= 1e-9);
    }
    SUBCASE("the semigroup property holds within quadrature accuracy") {
        const MembraneParams params(1.0, 2.0);
        const SharpFunction f = corpus_sharp("step", g);
        const Evolution ev = Evolution::snapping(params);
        for (const auto& [t, s] : {std::pair{0.2, 0.2}, {0.2, 0.5}, {0.5, 0.5}}) {
            const SharpFunction once = semigroup_evolve(ev, t + s, f);
            const SharpFunction twice = semigroup_evolve(ev, t, semigroup_evolve(ev, s, f));
            // re-extending the evolved field costs O(h^2) consistency error
            CHECK(sup_dist(once, twice) <= 1e-4);
        }
    }
    SUBCASE("contraction and positivity") {
        std::mt19937_64 rng(55);
        RandomOptions nn;
        nn.nonnegative = true;
        const MembraneParams params(1.0, 2.0);
        for (int i = 0; i < 5; ++i) {
            const SharpFunction f = random_sharp(g, rng, nn);
            for (const Evolution& ev :
                 {Evolution::snapping(params), Evolution::free(), Evolution::skew(params)}) {
                SharpFunction fin = f;
                if (ev.kind != EvolutionKind::Snapping) {
                    // continuity at 0 for the free/skew domains
                    fin.left.back() = fin.right.front();
                }
                const SharpFunction u = semigroup_evolve(ev, 0.5, fin);
                CHECK(sup_norm(u) <= sup_norm(fin) + 1e-8);
                double min_u = 1e300;
                for (double v : u.left) min_u = std::min(min_u, v);
                for (double v : u.right) min_u = std::min(min_u, v);
                CHECK(min_u >= -1e-8);
            }
        }
    }
    SUBCASE("non-positive times are rejected") {
        CHECK_THROWS_AS(semigroup_evolve(Evolution::free(), 0.0, corpus_sharp("gauss", g)),
                        NonPositiveTime);
    }
}

TEST_CASE("interface residuals of the transmission conditions") {
    const Grid& g = grid30();
    const MembraneParams params(1.0, 2.0);

    SUBCASE("constants satisfy every condition set") {
        const SharpFunction one = constant_sharp(g, 1.0);
        for (const Evolution& ev :
             {Evolution::free(), Evolution::snapping(params), Evolution::skew(params)}) {
            CHECK(transmission_residual(ev, one).max_abs <= 1e-12);
        }
    }
    SUBCASE("engineered snapping-domain data has near-zero residuals") {
        // jump j with one-sided slopes alpha j and beta j by construction
        const SharpFunction f = snapping_domain_sharp(g, params.alpha(), params.beta(), 0.8);
        const TransmissionResidual res = transmission_residual(Evolution::snapping(params), f);
        CHECK(res.max_abs <= 5e-3);
    }
    SUBCASE("evolved step data satisfies the snapping conditions") {
        const SharpFunction u =
            semigroup_evolve(Evolution::snapping(params), 0.5, corpus_sharp("step", g));
        CHECK(transmission_residual(Evolution::snapping(params), u).max_abs <= 5e-3);
    }
    SUBCASE("grids too coarse for the stencils are rejected") {
        const Grid tiny(1.0, 7);
        CHECK_THROWS_AS(transmission_residual(Evolution::free(), constant_sharp(tiny, 1.0)),
                        GridTooCoarse);
    }
}

TEST_CASE("second-order generator residuals") {
    const Grid& g = grid30();

    SUBCASE("free kind on a gaussian decays like t^2") {
        const SharpFunction f = corpus_sharp("gauss", g);
        const double r02 = generator_residual(Evolution::free(), 0.2, f);
        const double r01 = generator_residual(Evolution::free(), 0.1, f);
        const double r005 = generator_residual(Evolution::free(), 0.05, f);
        CHECK(r01 / r02 == doctest::Approx(0.25).epsilon(0.6));
        CHECK(r005 / r01 == doctest::Approx(0.25).epsilon(0.6));
    }
    SUBCASE("constants have vanishing residual") {
        CHECK(generator_residual(Evolution::free(), 0.1, constant_sharp(g, 2.0)) <= 1e-10);
    }
    SUBCASE("snapping-domain data behaves like the free case") {
        const MembraneParams params(1.0, 2.0);
        const SharpFunction f = snapping_domain_sharp(g, params.alpha(), params.beta(), 0.8);
        const double r_snap = generator_residual(Evolution::snapping(params), 0.1, f);
        const double r_free = generator_residual(Evolution::free(), 0.1, corpus_sharp("gauss", g));
        CHECK(r_snap <= 10.0 * r_free);
    }
}

TEST_CASE("cosine axioms hold for every membrane family") {
    const Grid& g = grid30();
    const MembraneParams params(0.5, 1.5);
    std::mt19937_64 rng(56);
    RandomOptions ov;
    ov.interface_condition = InterfaceCondition::OppositeValues;
    const double window = g.half_width() - 3.0;
    const double tol = 3.0 * eps_disc(g);

    struct Case {
        Evolution ev;
        SharpFunction f;
    };
    const Case cases[] = {
        {Evolution::snapping(params), corpus_sharp("step", g)},
        {Evolution::perp(params), corpus_sharp("odd_step", g)},
        {Evolution::skew(params), corpus_sharp("ratio", g)},
        {Evolution::weks(params), random_sharp(g, rng, ov)},
    };
    for (const auto& c : cases) {
        CHECK(bitwise_equal(cosine_evolve(c.ev, 0.0, c.f), c.f));
        const SharpFunction lhs =
            add(cosine_evolve(c.ev, 1.1 + 0.7, c.f), cosine_evolve(c.ev, 1.1 - 0.7, c.f));
        const SharpFunction rhs =
            scale(2.0, cosine_evolve(c.ev, 0.7, cosine_evolve(c.ev, 1.1, c.f)));
        CHECK(sup_dist_on(lhs, rhs, -window, window) <= tol);
    }
}
