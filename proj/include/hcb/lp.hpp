// Exact linear feasibility over the rationals by Fourier-Motzkin elimination,
// with witness recovery. Intended for small variable counts.
#pragma once

#include <optional>
#include <vector>

#include "hcb/numeric.hpp"

namespace hcb {

/// sum_i coeff[i] * x_i < rhs (strict) or <= rhs.
struct LinearConstraint {
    std::vector<Rational> coeff;
    Rational rhs;
    bool strict = true;
};

/// Feasibility of the conjunction; returns a satisfying point when one exists.
std::optional<std::vector<Rational>> fourier_motzkin(int nvars,
                                                     std::vector<LinearConstraint> constraints);

}  // namespace hcb
