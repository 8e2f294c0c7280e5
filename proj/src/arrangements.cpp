#include "hcb/arrangements.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

namespace hcb {

Line2D Line2D::make(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0) throw std::invalid_argument("degenerate line: a = b = 0");
    BigInt l = lcm(lcm(denominator(a), denominator(b)), denominator(c));
    BigInt ia = numerator(a) * (l / denominator(a));
    BigInt ib = numerator(b) * (l / denominator(b));
    BigInt ic = numerator(c) * (l / denominator(c));
    BigInt g = gcd(gcd(abs(ia), abs(ib)), abs(ic));
    if (g > 1) {
        ia /= g;
        ib /= g;
        ic /= g;
    }
    int lead = (ia != 0) ? ia.sign() : ib.sign();
    if (lead < 0) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return Line2D{std::move(ia), std::move(ib), std::move(ic)};
}

Line2D Line2D::make(long long a, long long b, long long c) {
    return make(Rational(a), Rational(b), Rational(c));
}

bool operator<(const Line2D& u, const Line2D& v) {
    return std::tie(u.a, u.b, u.c) < std::tie(v.a, v.b, v.c);
}

long long count_regions_2d(const std::vector<Line2D>& lines) {
    {
        std::set<Line2D> seen;
        for (const auto& l : lines)
            if (!seen.insert(l).second) throw DuplicateLine("duplicate line in arrangement");
    }
    long long regions = 1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        // Intersection points of line i with the earlier lines, deduplicated.
        std::set<std::pair<Rational, Rational>> points;
        for (std::size_t j = 0; j < i; ++j) {
            BigInt det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (det == 0) continue;  // parallel
            Rational x = make_rational(lines[i].c * lines[j].b - lines[j].c * lines[i].b, det);
            Rational y = make_rational(lines[i].a * lines[j].c - lines[j].a * lines[i].c, det);
            points.emplace(std::move(x), std::move(y));
        }
        regions += static_cast<long long>(points.size()) + 1;
    }
    return regions;
}

CellCount hypercube_boundary_cells(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    CellCount cc;
    cc.N.resize(static_cast<std::size_t>(d));
    // N_i = C(d, i) * 2^{d-i}: choose the free axes, then a side per fixed axis.
    BigInt binom = 1;
    for (int i = 0; i <= d - 1; ++i) {
        if (i > 0) binom = binom * (d - i + 1) / i;
        BigInt sides = BigInt(1) << (d - i);
        cc.N[static_cast<std::size_t>(i)] = binom * sides;
    }
    return cc;
}

EulerReport euler_check_hypercube(int d) {
    CellCount cc = hypercube_boundary_cells(d);
    EulerReport r;
    r.lhs = 0;
    for (int i = 0; i < d; ++i) {
        if (i % 2 == 0)
            r.lhs += cc.N[static_cast<std::size_t>(i)];
        else
            r.lhs -= cc.N[static_cast<std::size_t>(i)];
    }
    r.rhs = (d % 2 == 0) ? 0 : 2;
    r.equal = r.lhs == r.rhs;
    return r;
}

GrowthReport region_growth_check(int n_max, int trials, std::uint64_t seed) {
    if (n_max < 2 || trials < 1) throw std::invalid_argument("bad growth check arguments");
    GrowthReport report;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<long long> coef(-19, 19);
        std::vector<Line2D> lines;
        while (static_cast<int>(lines.size()) < n_max) {
            long long a = coef(rng), b = coef(rng), c = coef(rng);
            if (a == 0 && b == 0) continue;
            Line2D l = Line2D::make(a, b, c);
            if (std::find(lines.begin(), lines.end(), l) != lines.end()) continue;
            lines.push_back(std::move(l));
            int n = static_cast<int>(lines.size());
            if (n < 2) continue;
            long long regions = count_regions_2d(lines);
            GrowthTrialRow row;
            row.trial = trial;
            row.n = n;
            row.regions = regions;
            row.ratio = static_cast<double>(regions) / (static_cast<double>(n) * n);
            report.max_ratio = std::max(report.max_ratio, row.ratio);
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace hcb
