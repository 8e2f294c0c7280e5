// The billiard language of the d-cube: sampled enumeration with a refinement
// schedule and stability certification, complexity tables and differences,
// special/bispecial classification with the Cassaigne index, directional
// complexity, and log-log growth fits.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hcb/errors.hpp"
#include "hcb/geometry.hpp"
#include "hcb/word.hpp"

namespace hcb {

/// Factorial extendable word sets, one set per length 0..n_max.
/// Words are stored as digit strings over {0,...,d-1}.
struct LanguageSet {
    int d = 0;
    int n_max = 0;
    std::vector<std::unordered_set<std::string>> levels;

    bool contains(const std::string& w) const {
        auto n = w.size();
        return n < levels.size() && levels[n].count(w) > 0;
    }
    long long count(int n) const {
        if (n < 0 || n > n_max) return 0;
        return static_cast<long long>(levels[static_cast<std::size_t>(n)].size());
    }
};

/// p(n), s(n) = p(n+1) - p(n), and s2(n) = s(n+1) - s(n).
struct LanguageTable {
    int n_max = 0;
    std::vector<long long> p;  // index 0..n_max, p[0] = 1

    bool has(int n) const { return n >= 0 && n <= n_max; }
    long long s(int n) const { return p[static_cast<std::size_t>(n + 1)] - p[static_cast<std::size_t>(n)]; }
    long long s2(int n) const { return s(n + 1) - s(n); }
};

struct SpecialStats {
    BilliardWord word;
    int m_l = 0, m_r = 0, m_b = 0;
    int index() const { return m_b - m_r - m_l + 1; }  // Cassaigne index i(v)
    bool left_special() const { return m_l >= 2; }
    bool right_special() const { return m_r >= 2; }
    bool bispecial() const { return left_special() && right_special(); }
};

/// Sampling plan for the enumerator. The schedule lists (grid denominator Q,
/// direction height bound D) refinement rounds, strictly increasing in both.
struct EnumerationConfig {
    std::vector<std::pair<int, int>> schedule;
    int stable_rounds = 2;  // consecutive unchanged refinements required per n
    bool lp_refine = false;
    int lp_max_len = 12;   // lengths covered by the witness search
    int lp_grid = 5;       // start-point grid denominator for the witness search
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency
    int tie_retries = 4;

    static EnumerationConfig auto_for(int d, int n_max);
    void validate() const;
};

struct LengthStat {
    int n = 0;
    long long count = 0;
    bool stable = false;
};

struct StabilityReport {
    std::vector<LengthStat> lengths;  // n = 1..n_max
    int rounds_run = 0;
    bool stable_all = false;
    long long samples = 0;
    long long ties_retried = 0;
    long long samples_skipped = 0;
    long long lp_candidates_tested = 0;
    long long lp_words_added = 0;

    bool stable_at(int n) const { return lengths[static_cast<std::size_t>(n - 1)].stable; }
};

struct EnumerationResult {
    LanguageSet lang;
    LanguageTable table;
    StabilityReport report;
};

/// Samples trajectories from face grids against positive-orthant coprime
/// integer directions, closes under factors, and repeats along the schedule
/// until the per-length counts stop changing. Counts that never stabilize are
/// returned as lower bounds with stable = false (no exception).
EnumerationResult enumerate_language(int d, int n_max, const EnumerationConfig& cfg);

LanguageTable complexity_table(const LanguageSet& ls);

/// Extension statistics for every stored word of length n.
/// Requires lengths n+1 and n+2 in the set (InsufficientDepth otherwise).
std::vector<SpecialStats> classify_special(const LanguageSet& ls, int n);

std::vector<SpecialStats> bispecial_words(const LanguageSet& ls, int n);

struct CassaigneReport {
    long long lhs = 0;  // s(n+1) - s(n)
    long long rhs = 0;  // sum of i(v) over bispecial words of length n
    bool equal = false;
};

/// The second difference of the complexity against the bispecial index sum.
/// Inequality signals enumeration incompleteness, so it is reported, not thrown.
CassaigneReport cassaigne_check(const LanguageSet& ls, int n);

struct DirectionalResult {
    DirectionQ omega;
    std::vector<long long> p_dir;  // index 0..n_max, p_dir[0] = 1
    long long horizon = 0;
    bool generic = true;            // no tie within the horizon on any start
    bool point_independent = true;  // all starts produced identical factor sets
    int samples_used = 0;
    int samples_skipped = 0;
};

/// Factor counts of the coded trajectories with fixed direction, unioned over
/// the start points. horizon = 0 picks a guard value from n_max and d.
DirectionalResult directional_complexity(const DirectionQ& omega, const std::vector<PointQ>& starts,
                                         int n_max, long long horizon = 0);

/// Deterministic interior start points with prime denominators.
std::vector<PointQ> default_directional_starts(int d, int count, std::uint64_t seed);

enum class FitTarget { P, S, S2 };

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS of log-space residuals
};

/// Least-squares slope of log(value) against log(n) on [n_lo, n_hi].
/// Throws NonPositiveValue if a value in the window is missing or <= 0.
FitResult exponent_fit(const LanguageTable& table, int n_lo, int n_hi, FitTarget target);

/// The same fit on raw (n, value) points.
FitResult loglog_fit(const std::vector<std::pair<int, long long>>& points);

/// Searches for a positive direction realizing `word` from start m, deciding
/// the crossing-order chain exactly in the reciprocal variables u_a = 1/omega_a.
/// The returned direction is verified by retracing.
std::optional<DirectionQ> witness_direction(const std::string& word, int d, const PointQ& m);

}  // namespace hcb
