#include <doctest.h>

#include <cmath>
#include <random>

#include "membrane/corpus.hpp"
#include "membrane/errors.hpp"
#include "membrane/evolution.hpp"
#include "membrane/extensions.hpp"
#include "membrane/function_pair.hpp"
#include "test_helpers.hpp"

using namespace membrane;
using namespace membrane::testing;

TEST_CASE("grid puts a node exactly at the origin and mirrors exactly") {
    const Grid g(30.0, 6001);
    CHECK(g.spacing() == doctest::Approx(0.01));
    CHECK(g.node(g.center_index()) == 0.0);
    for (int k : {0, 17, 1234, 2999})
        CHECK(g.node(g.n_points() - 1 - k) == -g.node(k));
    CHECK_THROWS_AS(Grid(30.0, 6000), MembraneError);  // even
    CHECK_THROWS_AS(Grid(30.0, 1), MembraneError);
    CHECK_THROWS_AS(Grid(-1.0, 11), MembraneError);
}

TEST_CASE("reflect fixes even functions and maps e_a to e_{-a}") {
    const Grid& g = grid30();
    const LineFunction gauss = gauss_line(g);
    CHECK(bitwise_equal(reflect(gauss), gauss));

    const LineFunction ea = exp_line(g, 0.7);
    const LineFunction r = reflect(ea);
    const LineFunction e_neg = exp_line(g, -0.7);
    // e_a(-x) = e^{ax} and the grid mirrors exactly, so this is sample-exact
    CHECK(sup_dist(r, e_neg) == 0.0);

    LineFunction f = constant_line(g, 0.0);
    f.limit_neg = 2.0;
    f.limit_pos = 5.0;
    const LineFunction rf = reflect(f);
    CHECK(rf.limit_neg == 5.0);
    CHECK(rf.limit_pos == 2.0);
}

TEST_CASE("reflect is a bit-exact involution") {
    std::mt19937_64 rng(11);
    const LineFunction f = random_line(grid30(), rng);
    CHECK(bitwise_equal(reflect(reflect(f)), f));
}

TEST_CASE("parity parts of an odd function") {
    const LineFunction f = corpus_line("ratio", grid30());
    const ParityParts p = parity_parts(f);
    CHECK(sup_norm(p.even) == 0.0);
    CHECK(sup_dist(p.odd, f) == 0.0);
}

TEST_CASE("parity parts of e_a match cosh and -sinh pointwise") {
    // e^{-ax} = cosh(ax) - sinh(ax)
    const Grid& g = grid10();
    const double a = 0.4;
    const ParityParts p = parity_parts(exp_line(g, a));
    double worst_e = 0.0, worst_o = 0.0;
    for (int k = 0; k < g.n_points(); ++k) {
        const double x = g.node(k);
        worst_e = std::max(worst_e,
                           std::abs(p.even.samples[static_cast<std::size_t>(k)] -
                                    std::cosh(a * x)));
        worst_o = std::max(worst_o,
                           std::abs(p.odd.samples[static_cast<std::size_t>(k)] +
                                    std::sinh(a * x)));
    }
    // pure rounding, relative to cosh(4) ~ 27
    CHECK(worst_e <= 1e-12);
    CHECK(worst_o <= 1e-12);
}

TEST_CASE("parity parts of a constant") {
    const LineFunction one = constant_line(grid30(), 1.0);
    const ParityParts p = parity_parts(one);
    CHECK(sup_dist(p.even, one) == 0.0);
    CHECK(sup_norm(p.odd) == 0.0);
}

TEST_CASE("parity identities are bit-exact on the random corpus") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        const LineFunction f = random_line(grid30(), rng);
        const ParityParts p = parity_parts(f);
        CHECK(bitwise_equal(reflect(p.even), p.even));
        CHECK(bitwise_equal(reflect(p.odd), negate(p.odd)));
        CHECK(bitwise_equal(add(p.even, p.odd), f));  // float-quantized samples
    }
}

TEST_CASE("basic cosine family commutes with reflection and parity") {
    const Grid& g = grid30();
    std::mt19937_64 rng(13);
    const LineFunction f = random_line(g, rng);
    const double tol = eps_disc(g);
    for (double t : {0.37, 1.0}) {
        CHECK(sup_dist(reflect(cosine_basic(t, f)), cosine_basic(t, reflect(f))) <= tol);
        const ParityParts pf = parity_parts(f);
        const ParityParts pc = parity_parts(cosine_basic(t, f));
        CHECK(sup_dist(pc.even, cosine_basic(t, pf.even)) <= tol);
        CHECK(sup_dist(pc.odd, cosine_basic(t, pf.odd)) <= tol);
    }
}

TEST_CASE("restriction of pairs") {
    const Grid& g = grid30();
    const LineFunction gauss = gauss_line(g);
    const SharpFunction s = restrict_pair({gauss, gauss});
    CHECK(s.value0_neg() == s.value0_pos());
    CHECK(sup_dist(s, corpus_sharp("gauss", g)) == 0.0);

    const SharpFunction st = restrict_pair({constant_line(g, 1.0), constant_line(g, 2.0)});
    CHECK(st.value0_neg() == 1.0);
    CHECK(st.value0_pos() == 2.0);
    CHECK(st.limit_neg == 1.0);
    CHECK(st.limit_pos == 2.0);
}

TEST_CASE("restrict is a bit-exact right inverse of every extension") {
    const Grid& g = grid30();
    std::mt19937_64 rng(14);
    const MembraneParams params(1.0, 2.0);
    RandomOptions any, cont, ov;
    cont.interface_condition = InterfaceCondition::Continuous;
    ov.interface_condition = InterfaceCondition::OppositeValues;

    const SharpFunction f = random_sharp(g, rng, any);
    CHECK(bitwise_equal(restrict_pair(extend_snapping(params, f)), f));
    const SharpFunction fo = random_sharp(g, rng, ov);
    CHECK(bitwise_equal(restrict_pair(extend_perp(params, fo)), fo));
    const SharpFunction fc = random_sharp(g, rng, cont);
    CHECK(bitwise_equal(restrict_pair(extend_skew(params, fc)), fc));
    CHECK(bitwise_equal(restrict_pair(extend_weks(params, fo)), fo));
}

TEST_CASE("matrix action on pairs") {
    const Grid& g = grid30();
    std::mt19937_64 rng(15);
    const FunctionPair p = random_pair(g, rng);

    SUBCASE("the identity matrix transposes the first component") {
        const FunctionPair q = matrix_apply({{{1.0, 0.0}, {0.0, 1.0}}}, p);
        CHECK(sup_dist(q.first, reflect(p.first)) == 0.0);
        CHECK(sup_dist(q.second, p.second) == 0.0);
    }
    SUBCASE("the equal-permeability matrix kills equal components") {
        const Mat2 m_sharp = {{{-0.5, 0.5}, {0.5, 0.5}}};
        const FunctionPair q = matrix_apply(m_sharp, {p.first, p.first});
        CHECK(sup_norm(q.first) == 0.0);
        CHECK(sup_dist(q.second, p.first) == 0.0);
    }
    SUBCASE("alpha = 1, beta = 0 specialization") {
        // (1/(a-b)) [[b, -1], [a, -1]] at a = 1, b = 0
        const Mat2 m = {{{0.0, -1.0}, {1.0, -1.0}}};
        const FunctionPair q = matrix_apply(m, p);
        CHECK(sup_dist(q.first, negate(reflect(p.second))) == 0.0);
        CHECK(sup_dist(q.second, subtract(p.first, p.second)) == 0.0);
    }
    SUBCASE("matrix action commutes with the product cosine family") {
        const Mat2 m = {{{0.3, -1.2}, {2.0, 0.7}}};
        for (double t : {0.41, 1.0}) {
            const FunctionPair lhs = matrix_apply(m, cosine_pair(t, p));
            const FunctionPair rhs = cosine_pair(t, matrix_apply(m, p));
            CHECK(sup_dist(lhs, rhs) <= eps_disc(g));
        }
    }
}

TEST_CASE("flip operator J on sharp functions") {
    const Grid& g = grid30();
    const SharpFunction odd_step = corpus_sharp("odd_step", g);
    const LineFunction j = flip_J(odd_step, 1e-9);
    CHECK(sup_dist(j, constant_line(g, 1.0)) == 0.0);

    const SharpFunction step = corpus_sharp("step", g);
    CHECK_THROWS_AS(flip_J(step, 1e-9), OppositeValuesViolated);

    std::mt19937_64 rng(16);
    RandomOptions ov;
    ov.interface_condition = InterfaceCondition::OppositeValues;
    const SharpFunction f = random_sharp(g, rng, ov);
    CHECK(sup_norm(flip_J(f, 1e-9)) == sup_norm(f));  // isometry
    CHECK(bitwise_equal(flip_J_inverse(flip_J(f, 1e-9)), f));
}

TEST_CASE("pair flip is a bit-exact involution and isometry") {
    std::mt19937_64 rng(17);
    const FunctionPair p = random_pair(grid30(), rng);
    CHECK(bitwise_equal(flip_Jpair(flip_Jpair(p)), p));
    CHECK(sup_norm(flip_Jpair(p)) == sup_norm(p));
}

TEST_CASE("sup norm and algebra basics") {
    const Grid& g = grid30();
    CHECK(sup_norm(zero_line(g)) == 0.0);
    CHECK(sup_norm(constant_line(g, -3.5)) == 3.5);

    std::mt19937_64 rng(18);
    const LineFunction f = random_line(g, rng);
    CHECK(sup_norm(add(f, negate(f))) == 0.0);

    LineFunction with_limits = constant_line(g, 0.25);
    with_limits.limit_pos = 9.0;  // sup norm must see the limit values
    CHECK(sup_norm(with_limits) == 9.0);

    const Grid other(30.0, 6003);
    CHECK_THROWS_AS(add(f, zero_line(other)), GridMismatch);
    CHECK_THROWS_AS(sup_dist(f, zero_line(other)), GridMismatch);
}
