#pragma once

#include <random>
#include <string>
#include <vector>

#include "membrane/function_pair.hpp"
#include "membrane/sharp_function.hpp"

namespace membrane {

/// Named test functions. "step" takes the two plateau values as parameters;
/// "odd_step" is step(-1, 1) and "const" a single plateau. All of them are
/// flat near the grid boundary (their limits match the boundary samples up to
/// a few 1e-9), except "atan", whose tails still move at |x| = 30.
///  gauss      e^{-x^2}
///  expabs     e^{-|x|}
///  atan       arctan(x)
///  ratio      x / (1 + |x|)   (Lipschitz, odd)
///  step       jL for x < 0, jR for x > 0
///  odd_step   step(-1, 1)
///  const      constant c
std::vector<std::string> corpus_names();

SharpFunction corpus_sharp(const std::string& name, const Grid& grid);
SharpFunction step_sharp(const Grid& grid, double left_value, double right_value);
SharpFunction constant_sharp(const Grid& grid, double c);

/// Whole-line versions of the continuous corpus entries (steps are merged
/// through the midpoint at 0).
LineFunction corpus_line(const std::string& name, const Grid& grid);

enum class InterfaceCondition {
    Any,            ///< independent one-sided values at 0
    Continuous,     ///< f(0-) = f(0+)
    OppositeValues  ///< f(0-) = -f(0+)
};

struct RandomOptions {
    InterfaceCondition interface_condition = InterfaceCondition::Any;
    bool nonnegative = false;
};

/// Seeded random member of the sharp space: a few Gaussian bumps per branch
/// on top of branch constants, flat near the boundary, with samples quantized
/// to float precision so that the halving-based parity identities are exact.
SharpFunction random_sharp(const Grid& grid, std::mt19937_64& rng,
                           const RandomOptions& opts = {});

/// Seeded random continuous whole-line function (same construction).
LineFunction random_line(const Grid& grid, std::mt19937_64& rng);

FunctionPair random_pair(const Grid& grid, std::mt19937_64& rng);

/// Smooth function in the snapping generator domain: jump j at 0 with
/// one-sided slopes f'(0-) = alpha j, f'(0+) = beta j.
SharpFunction snapping_domain_sharp(const Grid& grid, double alpha, double beta, double jump);

}  // namespace membrane
