#include "membrane/corpus.hpp"

#include <cmath>
#include <numbers>

#include "membrane/errors.hpp"

namespace membrane {

std::vector<std::string> corpus_names() {
    return {"gauss", "expabs", "atan", "ratio", "step", "odd_step", "const"};
}

SharpFunction step_sharp(const Grid& grid, double left_value, double right_value) {
    return sample_sharp(
        grid, [=](double) { return left_value; }, [=](double) { return right_value; },
        left_value, right_value, left_value, right_value);
}

SharpFunction constant_sharp(const Grid& grid, double c) { return step_sharp(grid, c, c); }

namespace {

SharpFunction continuous_sharp(const Grid& grid, const std::function<double(double)>& f,
                               double limit_neg, double limit_pos) {
    return sample_sharp(grid, f, f, f(0.0), f(0.0), limit_neg, limit_pos);
}

}  // namespace

SharpFunction corpus_sharp(const std::string& name, const Grid& grid) {
    const double half_pi = std::numbers::pi / 2.0;
    if (name == "gauss")
        return continuous_sharp(grid, [](double x) { return std::exp(-x * x); }, 0.0, 0.0);
    if (name == "expabs")
        return continuous_sharp(grid, [](double x) { return std::exp(-std::abs(x)); }, 0.0, 0.0);
    if (name == "atan")
        return continuous_sharp(grid, [](double x) { return std::atan(x); }, -half_pi, half_pi);
    if (name == "ratio")
        return continuous_sharp(grid, [](double x) { return x / (1.0 + std::abs(x)); }, -1.0, 1.0);
    if (name == "step") return step_sharp(grid, 1.0, 2.0);
    if (name == "odd_step") return step_sharp(grid, -1.0, 1.0);
    if (name == "const") return constant_sharp(grid, 1.0);
    throw MembraneError("unknown corpus function: " + name);
}

LineFunction corpus_line(const std::string& name, const Grid& grid) {
    return line_from_sharp(corpus_sharp(name, grid), 1e300);
}

namespace {

double quantize(double v) { return static_cast<double>(static_cast<float>(v)); }

struct Bump {
    double amplitude, center, width;
};

std::vector<Bump> random_bumps(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> amp(-1.5, 1.5);
    std::uniform_real_distribution<double> pos(-10.0, 10.0);
    std::uniform_real_distribution<double> wid(0.8, 4.0);
    std::vector<Bump> bumps(3);
    for (auto& b : bumps) b = {amp(rng), pos(rng), wid(rng)};
    return bumps;
}

double eval_bumps(const std::vector<Bump>& bumps, double x) {
    double v = 0.0;
    for (const auto& b : bumps) {
        const double u = (x - b.center) / b.width;
        v += b.amplitude * std::exp(-u * u);
    }
    return v;
}

}  // namespace

SharpFunction random_sharp(const Grid& grid, std::mt19937_64& rng, const RandomOptions& opts) {
    std::uniform_real_distribution<double> base(-1.0, 1.0);
    const auto left_bumps = random_bumps(rng);
    const auto right_bumps = random_bumps(rng);
    double c_left = base(rng), c_right = base(rng);

    auto raw_left = [&](double x) { return c_left + eval_bumps(left_bumps, x); };
    auto raw_right = [&](double x) { return c_right + eval_bumps(right_bumps, x); };

    double shift_left = 0.0;
    if (opts.interface_condition == InterfaceCondition::Continuous)
        shift_left = raw_right(0.0) - raw_left(0.0);
    else if (opts.interface_condition == InterfaceCondition::OppositeValues)
        shift_left = -raw_right(0.0) - raw_left(0.0);

    double lift = 0.0;
    if (opts.nonnegative) {
        // enough to dominate three bumps of amplitude <= 1.5 plus the constants
        lift = 7.0;
        if (opts.interface_condition == InterfaceCondition::OppositeValues)
            throw MembraneError("random_sharp: nonnegative opposite-values function must be 0");
    }

    SharpFunction out = sample_sharp(
        grid, [&](double x) { return raw_left(x) + shift_left + lift; },
        [&](double x) { return raw_right(x) + lift; },
        raw_left(0.0) + shift_left + lift, raw_right(0.0) + lift,
        c_left + shift_left + lift, c_right + lift);

    for (auto& v : out.left) v = quantize(v);
    for (auto& v : out.right) v = quantize(v);
    out.limit_neg = quantize(out.limit_neg);
    out.limit_pos = quantize(out.limit_pos);
    if (opts.interface_condition == InterfaceCondition::OppositeValues)
        out.left.back() = -out.right.front();  // exact after quantization
    else if (opts.interface_condition == InterfaceCondition::Continuous)
        out.left.back() = out.right.front();
    return out;
}

LineFunction random_line(const Grid& grid, std::mt19937_64& rng) {
    RandomOptions opts;
    opts.interface_condition = InterfaceCondition::Continuous;
    return line_from_sharp(random_sharp(grid, rng, opts), 0.0);
}

FunctionPair random_pair(const Grid& grid, std::mt19937_64& rng) {
    LineFunction f1 = random_line(grid, rng);
    LineFunction f2 = random_line(grid, rng);
    return {std::move(f1), std::move(f2)};
}

SharpFunction snapping_domain_sharp(const Grid& grid, double alpha, double beta, double jump) {
    // base even bump + slope shaping sigma(x) = x e^{-x^2} with sigma'(0) = 1
    auto sigma = [](double x) { return x * std::exp(-x * x); };
    auto left = [&](double x) { return std::exp(-x * x) + alpha * jump * sigma(x); };
    auto right = [&](double x) { return std::exp(-x * x) + jump + beta * jump * sigma(x); };
    return sample_sharp(grid, left, right, left(0.0), right(0.0), 0.0, jump);
}

}  // namespace membrane
