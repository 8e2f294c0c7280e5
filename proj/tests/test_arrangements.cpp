#include <doctest.h>

#include "hcb/arrangements.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace hcb;

TEST_CASE("region counts on the standard small cases") {
    CHECK(count_regions_2d({}) == 1);
    // three lines in general position: the triangle picture
    std::vector<Line2D> general = {Line2D::make(1, 0, 0), Line2D::make(0, 1, 0),
                                   Line2D::make(1, 1, 3)};
    CHECK(count_regions_2d(general) == 7);
    // three concurrent lines through the origin
    std::vector<Line2D> concurrent = {Line2D::make(1, 0, 0), Line2D::make(0, 1, 0),
                                      Line2D::make(1, 1, 0)};
    CHECK(count_regions_2d(concurrent) == 6);
    // stripes
    std::vector<Line2D> parallel;
    for (long long k = 1; k <= 20; ++k) parallel.push_back(Line2D::make(1, 0, k));
    CHECK(count_regions_2d(parallel) == 21);
}

TEST_CASE("duplicate lines are rejected, including unnormalized ones") {
    std::vector<Line2D> dup = {Line2D::make(1, 2, 3), Line2D::make(2, 4, 6)};
    CHECK_THROWS_AS(count_regions_2d(dup), DuplicateLine);
}

TEST_CASE("general position formula 1 + n + n(n-1)/2") {
    // tangents to the parabola y = x^2: y = 2k x - k^2, no two parallel,
    // no three concurrent
    std::vector<Line2D> lines;
    for (long long k = 1; k <= 20; ++k) {
        lines.push_back(Line2D::make(Rational(2 * k), Rational(-1), Rational(k * k)));
        long long n = static_cast<long long>(lines.size());
        CHECK(count_regions_2d(lines) == 1 + n + n * (n - 1) / 2);
    }
}

TEST_CASE("insertion order never changes the count") {
    std::vector<Line2D> lines = {
        Line2D::make(1, 0, 0),  Line2D::make(0, 1, 0),  Line2D::make(1, 1, 0),
        Line2D::make(1, -1, 2), Line2D::make(1, 0, 5),  Line2D::make(0, 1, 5),
        Line2D::make(2, 3, 7),  Line2D::make(1, 1, 4)};
    long long expected = count_regions_2d(lines);
    std::mt19937_64 rng(5150);
    for (int shuffle = 0; shuffle < 100; ++shuffle) {
        std::shuffle(lines.begin(), lines.end(), rng);
        CHECK(count_regions_2d(lines) == expected);
    }
}

TEST_CASE("sandwich bound and point-location agreement on random arrangements") {
    std::mt19937_64 rng(99173);
    std::uniform_int_distribution<long long> coef(-6, 6);
    for (int it = 0; it < 60; ++it) {
        std::vector<Line2D> lines;
        int target = 2 + static_cast<int>(rng() % 7);
        while (static_cast<int>(lines.size()) < target) {
            long long a = coef(rng), b = coef(rng), c = coef(rng);
            if (a == 0 && b == 0) continue;
            Line2D l = Line2D::make(a, b, c);
            if (std::find(lines.begin(), lines.end(), l) != lines.end()) continue;
            lines.push_back(std::move(l));
        }
        long long n = static_cast<long long>(lines.size());
        long long fast = count_regions_2d(lines);
        CHECK(fast >= n + 1);
        CHECK(fast <= 1 + n + n * (n - 1) / 2);
        CHECK(fast == oracle::regions_by_point_location(lines));
    }
}

TEST_CASE("hypercube boundary cell counts and Euler identity") {
    auto c3 = hypercube_boundary_cells(3);
    CHECK(c3.N[0] == 8);
    CHECK(c3.N[1] == 12);
    CHECK(c3.N[2] == 6);
    auto e3 = euler_check_hypercube(3);
    CHECK(e3.lhs == 2);
    CHECK(e3.rhs == 2);
    CHECK(e3.equal);
    auto e2 = euler_check_hypercube(2);
    CHECK(e2.lhs == 0);
    CHECK(e2.equal);
    for (int d = 1; d <= 8; ++d) CHECK(euler_check_hypercube(d).equal);
}

TEST_CASE("random growth ratios stay within the combinatorial cap") {
    auto rep = region_growth_check(20, 5, 1234);
    CHECK(!rep.rows.empty());
    for (const auto& row : rep.rows) {
        long long n = row.n;
        CHECK(row.regions >= n + 1);
        CHECK(row.regions <= 1 + n + n * (n - 1) / 2);
    }
    // max regions = 1 + n + n(n-1)/2, so the n^2 ratio is at most 1 (n = 2)
    // and approaches 1/2 from above as n grows
    CHECK(rep.max_ratio <= 1.0);
    CHECK(rep.rows.back().ratio < 0.65);
    auto rep2 = region_growth_check(20, 5, 1234);
    REQUIRE(rep.rows.size() == rep2.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
        CHECK(rep.rows[i].regions == rep2.rows[i].regions);
}
