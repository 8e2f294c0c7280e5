// Domain error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hcb/numeric.hpp"

namespace hcb {

/// The unfolded ray meets a face of dimension <= d-2: two (or more) integer
/// hyperplanes are crossed at exactly the same time. The billiard map is
/// undefined there, so tracing stops with this error.
class TieAtEdge : public std::runtime_error {
public:
    TieAtEdge(Rational time, std::vector<int> axes)
        : std::runtime_error("tie at t=" + to_string(time)),
          time_(std::move(time)),
          axes_(std::move(axes)) {}

    const Rational& time() const { return time_; }
    const std::vector<int>& axes() const { return axes_; }

private:
    Rational time_;
    std::vector<int> axes_;
};

/// Some direction component is zero; callers must project first.
class ZeroComponent : public std::invalid_argument {
public:
    explicit ZeroComponent(int axis)
        : std::invalid_argument("direction component is zero on axis " + std::to_string(axis)),
          axis_(axis) {}
    int axis() const { return axis_; }

private:
    int axis_;
};

/// Special-word classification at length n needs stored lengths up to n+2.
class InsufficientDepth : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every sampled segment of the diagonal hits an intermediate lattice face:
/// the face pair is overlaid by shorter diagonals.
class DegenerateDiagonal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Face pair is not ordered in the positive-orthant sense.
class NotComparable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DuplicateLine : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonPositiveValue : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hcb
