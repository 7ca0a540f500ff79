#include "membrane/projections.hpp"

#include <cmath>

#include "membrane/kernel.hpp"

namespace membrane {

ProjectionInputs projection_inputs(const MembraneParams& params, const FunctionPair& p) {
    const ParityParts p1 = parity_parts(p.first);
    const ParityParts p2 = parity_parts(p.second);
    LineFunction k1 = axpy(params.alpha(), p1.odd, scale(params.beta(), p2.odd));
    LineFunction k2 = subtract(p1.even, p2.even);
    const double gamma = params.gamma();
    const double c = laplace_at(k1, gamma) + 0.5 * gamma * laplace_at(k2, gamma);
    return {std::move(k1), std::move(k2), c};
}

FunctionPair project_C(const MembraneParams& params, const FunctionPair& p) {
    const double gamma = params.gamma();
    const ProjectionInputs in = projection_inputs(params, p);
    // psi_minus = k1/gamma - k2/2; its reflection is -(k1/gamma + k2/2).
    const LineFunction psi_minus = axpy(1.0 / gamma, in.k1, scale(-0.5, in.k2));
    const LineFunction il = improper_left(gamma, psi_minus);
    const LineFunction ir = negate(reflect(il));

    const ParityParts p1 = parity_parts(p.first);
    const ParityParts p2 = parity_parts(p.second);
    const double a = params.alpha(), b = params.beta();
    LineFunction g1 = add(p1.even, axpy(0.5 * (gamma + 2.0 * a), il,
                                        scale(-0.5 * (gamma - 2.0 * a), ir)));
    LineFunction g2 = add(p2.even, axpy(0.5 * (gamma + 2.0 * b), ir,
                                        scale(-0.5 * (gamma - 2.0 * b), il)));
    return {std::move(g1), std::move(g2)};
}

FunctionPair project_D(const MembraneParams& params, const FunctionPair& p) {
    return subtract(p, project_C(params, p));
}

FunctionPair project_C_skew(const MembraneParams& params, const FunctionPair& p) {
    const ProjectionInputs in = projection_inputs(params, p);
    const ParityParts p1 = parity_parts(p.first);
    const ParityParts p2 = parity_parts(p.second);
    const double g2inv = 1.0 / (params.gamma() * params.gamma());
    LineFunction g1 = add(p1.even, axpy(2.0 * params.alpha() * g2inv, in.k1,
                                        scale(-0.5, in.k2)));
    LineFunction g2 = add(p2.even, axpy(2.0 * params.beta() * g2inv, in.k1,
                                        scale(0.5, in.k2)));
    return {std::move(g1), std::move(g2)};
}

FunctionPair project_D_weks(const MembraneParams& params, const FunctionPair& p) {
    return subtract(p, project_C_skew(params, p));
}

FunctionPair project_C_hyperbolic(const MembraneParams& params, const FunctionPair& p) {
    const double gamma = params.gamma();
    const double a = params.alpha(), b = params.beta();
    const ProjectionInputs in = projection_inputs(params, p);

    // k * sinh_gamma and k * cosh_gamma from the two one-sided exponentials.
    auto conv_sinh = [&](const LineFunction& k) {
        return scale(0.5, subtract(exp_convolve(-gamma, k), exp_convolve(gamma, k)));
    };
    auto conv_cosh = [&](const LineFunction& k) {
        return scale(0.5, add(exp_convolve(-gamma, k), exp_convolve(gamma, k)));
    };
    const LineFunction k1_sinh = conv_sinh(in.k1);
    const LineFunction k1_cosh = conv_cosh(in.k1);
    const LineFunction k2_sinh = conv_sinh(in.k2);
    const LineFunction k2_cosh = conv_cosh(in.k2);

    const ParityParts p1 = parity_parts(p.first);
    const ParityParts p2 = parity_parts(p.second);
    const Grid& g = p.first.grid;

    auto hyper = [&](double coeff_sinh, double coeff_cosh) {
        return sample_line(
            g,
            [&](double x) {
                return in.c * (coeff_sinh * std::sinh(gamma * x) +
                               coeff_cosh * std::cosh(gamma * x));
            },
            0.0, 0.0);
    };

    // g1 = f1^e + c(2a/g sinh - cosh) - (2a/g k1 - g/2 k2)*sinh + (k1 - a k2)*cosh
    LineFunction g1 = add(p1.even, hyper(2.0 * a / gamma, -1.0));
    g1 = add(g1, axpy(-2.0 * a / gamma, k1_sinh, scale(0.5 * gamma, k2_sinh)));
    g1 = add(g1, axpy(1.0, k1_cosh, scale(-a, k2_cosh)));

    // g2 = f2^e + c(2b/g sinh + cosh) - (2b/g k1 + g/2 k2)*sinh - (k1 + b k2)*cosh
    LineFunction g2 = add(p2.even, hyper(2.0 * b / gamma, 1.0));
    g2 = add(g2, axpy(-2.0 * b / gamma, k1_sinh, scale(-0.5 * gamma, k2_sinh)));
    g2 = add(g2, axpy(-1.0, k1_cosh, scale(-b, k2_cosh)));

    return {std::move(g1), std::move(g2)};
}

}  // namespace membrane
