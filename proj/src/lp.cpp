#include "hcb/lp.hpp"

#include <stdexcept>

namespace hcb {

namespace {

// Bound on x_j of the form x_j >= / > (resp. <= / <) offset + sum coeff[i] x_i.
struct Bound {
    std::vector<Rational> coeff;  // indices < j only
    Rational offset;
    bool strict = true;
};

struct Stage {
    std::vector<Bound> lowers, uppers;
};

Rational eval(const Bound& b, const std::vector<Rational>& x) {
    Rational v = b.offset;
    for (std::size_t i = 0; i < b.coeff.size(); ++i)
        if (b.coeff[i] != 0) v += b.coeff[i] * x[i];
    return v;
}

}  // namespace

std::optional<std::vector<Rational>> fourier_motzkin(int nvars,
                                                     std::vector<LinearConstraint> constraints) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
    for (const auto& c : constraints)
        if (static_cast<int>(c.coeff.size()) != nvars)
            throw std::invalid_argument("constraint width mismatch");

    std::vector<Stage> stages(static_cast<std::size_t>(nvars));
    for (int j = nvars - 1; j >= 0; --j) {
        std::vector<LinearConstraint> rest;
        Stage& stage = stages[static_cast<std::size_t>(j)];
        for (auto& c : constraints) {
            const Rational& a = c.coeff[static_cast<std::size_t>(j)];
            if (a == 0) {
                rest.push_back(std::move(c));
                continue;
            }
            // a*x_j + sum_{i<j} c_i x_i (<|<=) rhs
            Bound b;
            b.coeff.resize(static_cast<std::size_t>(j));
            for (int i = 0; i < j; ++i) b.coeff[static_cast<std::size_t>(i)] = -c.coeff[static_cast<std::size_t>(i)] / a;
            b.offset = c.rhs / a;
            b.strict = c.strict;
            if (a > 0)
                stage.uppers.push_back(std::move(b));
            else
                stage.lowers.push_back(std::move(b));
        }
        // Each (lower, upper) pair forces lower < upper on the remaining vars.
        for (const auto& lo : stage.lowers) {
            for (const auto& up : stage.uppers) {
                LinearConstraint c;
                c.coeff.assign(static_cast<std::size_t>(nvars), Rational(0));
                for (int i = 0; i < j; ++i)
                    c.coeff[static_cast<std::size_t>(i)] =
                        lo.coeff[static_cast<std::size_t>(i)] - up.coeff[static_cast<std::size_t>(i)];
                c.rhs = up.offset - lo.offset;
                c.strict = lo.strict || up.strict;
                rest.push_back(std::move(c));
            }
        }
        constraints = std::move(rest);
    }

    for (const auto& c : constraints) {
        if (c.strict ? !(Rational(0) < c.rhs) : !(Rational(0) <= c.rhs)) return std::nullopt;
    }

    std::vector<Rational> x(static_cast<std::size_t>(nvars), Rational(0));
    for (int j = 0; j < nvars; ++j) {
        const Stage& stage = stages[static_cast<std::size_t>(j)];
        bool has_lo = !stage.lowers.empty(), has_up = !stage.uppers.empty();
        Rational lo, up;
        bool lo_strict = false, up_strict = false;
        for (const auto& b : stage.lowers) {
            Rational v = eval(b, x);
            if (&b == &stage.lowers.front() || v > lo || (v == lo && b.strict)) {
                lo = v;
                lo_strict = b.strict;
            }
        }
        for (const auto& b : stage.uppers) {
            Rational v = eval(b, x);
            if (&b == &stage.uppers.front() || v < up || (v == up && b.strict)) {
                up = v;
                up_strict = b.strict;
            }
        }
        Rational& xj = x[static_cast<std::size_t>(j)];
        if (has_lo && has_up) {
            if (lo < up)
                xj = (lo + up) / 2;
            else if (lo == up && !lo_strict && !up_strict)
                xj = lo;
            else
                throw std::logic_error("empty interval after feasible elimination");
        } else if (has_lo) {
            xj = lo_strict ? lo + 1 : lo;
        } else if (has_up) {
            xj = up_strict ? up - 1 : up;
        } else {
            xj = 0;
        }
    }
    return x;
}

}  // namespace hcb
