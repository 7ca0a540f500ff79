#pragma once

#include <stdexcept>
#include <string>

namespace membrane {

/// Base class for all library errors.
class MembraneError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two functions that should live on the same grid do not.
class GridMismatch : public MembraneError {
public:
    using MembraneError::MembraneError;
};

/// alpha + beta <= 0: the membrane carries no transmission at all.
class DegenerateMembrane : public MembraneError {
public:
    using MembraneError::MembraneError;
};

/// An operation required f(0-) = -f(0+) and the input violates it.
class OppositeValuesViolated : public MembraneError {
public:
    using MembraneError::MembraneError;
};

/// An operation required continuity at 0 and the input has a jump.
class JumpAtZero : public MembraneError {
public:
    using MembraneError::MembraneError;
};

class NonPositiveLambda : public MembraneError {
public:
    using MembraneError::MembraneError;
};

class NonPositiveGamma : public MembraneError {
public:
    using MembraneError::MembraneError;
};

class NonPositiveTime : public MembraneError {
public:
    using MembraneError::MembraneError;
};

/// Interface stencils need at least a few nodes on each side of 0.
class GridTooCoarse : public MembraneError {
public:
    using MembraneError::MembraneError;
};

/// Ladder rung too stiff for the grid: n * (alpha + beta) * h must stay <= 1.
class ResolutionGuardViolated : public MembraneError {
public:
    using MembraneError::MembraneError;
};

/// Malformed CSV input.
class CsvFormatError : public MembraneError {
public:
    using MembraneError::MembraneError;
};

}  // namespace membrane
