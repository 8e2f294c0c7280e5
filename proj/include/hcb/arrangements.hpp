// Exact region counting for line arrangements in the plane, plus the Euler
// alternating-sum identity for the hypercube boundary complex.
#pragma once

#include <cstdint>
#include <vector>

#include "hcb/errors.hpp"
#include "hcb/numeric.hpp"

namespace hcb {

/// Line a*x + b*y = c with integer coefficients, normalized so that
/// gcd(a,b,c) = 1 and the first nonzero of (a,b) is positive.
struct Line2D {
    BigInt a, b, c;

    static Line2D make(const Rational& a, const Rational& b, const Rational& c);
    static Line2D make(long long a, long long b, long long c);

    friend bool operator==(const Line2D& u, const Line2D& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c;
    }
    friend bool operator<(const Line2D& u, const Line2D& v);
};

/// Number of connected components of R^2 minus the union of the lines.
/// Incremental insertion: each new line contributes one region per piece it
/// is cut into by its intersection points with earlier lines.
/// Throws DuplicateLine when two lines normalize to the same triple.
long long count_regions_2d(const std::vector<Line2D>& lines);

/// Face counts N_0..N_{d-1} of the boundary complex of the d-cube.
struct CellCount {
    std::vector<BigInt> N;
};

CellCount hypercube_boundary_cells(int d);

struct EulerReport {
    BigInt lhs;  // sum (-1)^i N_i
    BigInt rhs;  // 1 - (-1)^d
    bool equal = false;
};

EulerReport euler_check_hypercube(int d);

struct GrowthTrialRow {
    int trial = 0;
    int n = 0;
    long long regions = 0;
    double ratio = 0.0;  // regions / n^2
};

struct GrowthReport {
    std::vector<GrowthTrialRow> rows;
    double max_ratio = 0.0;
};

/// Random rational line families of sizes up to n_max; reports the region
/// count to n^2 ratio series. Deterministic per seed.
GrowthReport region_growth_check(int n_max, int trials, std::uint64_t seed);

}  // namespace hcb
