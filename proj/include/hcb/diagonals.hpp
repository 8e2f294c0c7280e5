// Generalized diagonals of the cubic tesselation: ordered pairs of
// (d-2)-dimensional faces joined by unobstructed orbit segments. Provides
// enumeration at fixed combinatorial length, the three defining equation
// shapes, word sampling inside a diagonal, and the joint checks against the
// language module.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hcb/errors.hpp"
#include "hcb/language.hpp"
#include "hcb/numeric.hpp"

namespace hcb {

/// A face of the unit-cube tesselation: the listed axes are pinned to integer
/// levels, every other axis ranges over (cell, cell+1).
struct Face {
    int d = 0;
    std::vector<std::pair<int, long long>> fixed;      // (axis, level), sorted by axis
    std::vector<std::pair<int, long long>> free_cell;  // (axis, base cell), sorted by axis

    int dim() const { return d - static_cast<int>(fixed.size()); }

    static Face make(int d, std::vector<std::pair<int, long long>> fixed,
                     std::vector<std::pair<int, long long>> free_cells = {});

    /// The codimension-2 face of [0,1]^d pinned to level 0 on the two axes.
    static Face base(int d, int axis_a, int axis_b);

    bool is_fixed(int axis) const;
    long long level_of(int axis) const;  // fixed level
    long long cell_of(int axis) const;   // free base cell

    friend bool operator==(const Face& a, const Face& b) {
        return a.d == b.d && a.fixed == b.fixed && a.free_cell == b.free_cell;
    }
    friend bool operator<(const Face& a, const Face& b);
};

enum class DiagonalKind {
    Type1,  // endpoints share their fixed axes, hence a common hyperplane; gcd filter applies
    Type2,
};

struct Diagonal {
    Face A, B;
    long long n = 0;  // combinatorial length
    DiagonalKind kind = DiagonalKind::Type2;
    bool positive = true;
};

enum class EqVariant { F, G, H };

/// Defining equation of a diagonal after permuting A's fixed axes to the last
/// two coordinates:
///   F: n*omega_i = p*omega_j
///   G: m_i + n*omega_i/omega_j = p
///   H: omega_j*m_i - omega_i*m_j = n*omega_i + p*omega_j
struct DiagonalEquation {
    EqVariant variant = EqVariant::F;
    long long n = 0, p = 0;
    int i = 0, j = 0;           // B's fixed axes after normalization
    std::vector<int> perm;      // axis permutation applied (new index = perm[old])
};

/// Number of unit-hyperplane crossings along any segment from A to B,
/// endpoint crossings included: the sum of integer parts of a defining point
/// of B (A pinned at level 0). Throws NotComparable when B has a negative
/// level or cell.
long long combinatorial_length(const Face& A, const Face& B);

/// All positive diagonals of combinatorial length n with initial face in the
/// unit cube: B-levels >= 1, free cells >= 0, same-axes pairs filtered by
/// gcd(level, level) = 1 (overlaid pairs removed). Deterministic order.
std::vector<Diagonal> enumerate_diagonals(long long n, int d);

DiagonalEquation diagonal_equation(const Face& A, const Face& B);

struct DiagonalCount {
    long long n = 0;
    long long count = 0;
    double ratio = 0.0;  // count / n^{d-1}
};

DiagonalCount count_diagonals(long long n, int d);

struct WordSampleConfig {
    int grid = 6;  // sample points per free coordinate
    std::uint64_t seed = 1;
};

/// Distinct interior codes of sampled segments joining the relative interiors
/// of A and B: the n-2 crossings strictly between the endpoint faces of a
/// clean (tie-free except at the arrival face) positive segment. Throws
/// DegenerateDiagonal when no sampled segment is clean.
std::set<std::string> words_in_diagonal(const Diagonal& g, const WordSampleConfig& cfg = {});

struct BudgetReport {
    long long n = 0;
    long long distinct_words = 0;   // X: words appearing across Diag(n)
    long long bispecial_count = 0;  // bispecial words of length n-2
    long long index_sum = 0;        // sum of i(v) over those bispecials
    bool lower_ok = false;          // X <= sum
    bool upper_ok = false;          // sum <= d^2 X
    long long degenerate_diagonals = 0;
};

/// Words collected across Diag(n) against the Cassaigne indices of the
/// bispecial words of length n-2 from the language set.
BudgetReport bispecial_diagonal_budget(long long n, int d, const LanguageSet& ls,
                                       const WordSampleConfig& cfg = {});

struct ProjectionCoverage {
    int len = 0;
    long long language_words = 0;
    long long covered = 0;
    bool full = false;
};

struct ProjectionReport {
    long long n = 0;
    int d = 0;
    std::vector<ProjectionCoverage> coverage;  // lengths 0..n-2
    int max_full_len = -1;
    bool projections_inside_lower = true;  // every projected word lies in the lower language
};

/// Projects the words of each axis-sharing diagonal along the shared axis and
/// compares against the (d-1)-cube language: projections must land inside it,
/// and together they must cover it up to length n-2.
ProjectionReport projection_surjectivity_check(long long n, int d, const LanguageSet& lower,
                                               const WordSampleConfig& cfg = {});

}  // namespace hcb
