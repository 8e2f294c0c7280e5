// Independent reference computations for the test suite. Everything here is
// deliberately written from scratch (plain loops, no library tracing or
// counting code) so the main implementation is checked against a second path.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hcb/arrangements.hpp"
#include "hcb/numeric.hpp"

namespace oracle {

/// Crossing code of the ray (m_num[i]/m_den[i]) + t * w, first n letters.
/// Returns nullopt when two crossings coincide within the first n.
std::optional<std::string> trace(const std::vector<long long>& m_num,
                                 const std::vector<long long>& m_den,
                                 const std::vector<long long>& w, int n);

/// Euler totient by direct gcd counting.
long long totient(long long n);

/// Square-billiard complexity closed form: 1 + sum_{i<=n} (n+1-i) phi(i).
long long square_complexity(int n);

/// Exhaustive dense sampling of the square language until two refinement
/// rungs agree; returns p(1..n_max).
std::vector<long long> square_language_counts(int n_max);

/// Factor sets of the square language from dense sampling at height bound D.
std::vector<std::set<std::string>> square_language_sets(int n_max, int height);

/// Region count of a line arrangement by slab point location: one probe point
/// per slab cell, regions distinguished by exact sign vectors.
long long regions_by_point_location(const std::vector<hcb::Line2D>& lines);

/// A face-pair candidate for the diagonal oracle, canonically encoded.
struct FacePair {
    std::vector<std::pair<int, long long>> a_fixed;
    std::vector<std::pair<int, long long>> b_fixed;
    std::vector<std::pair<int, long long>> b_cells;
    auto operator<=>(const FacePair&) const = default;
};

/// Brute-force segment-visibility enumeration of positive diagonals of
/// combinatorial length n: a pair qualifies when some all-positive segment
/// between relative interiors crosses its n hyperplanes with the only
/// simultaneous pair at the arrival face.
std::set<FacePair> visible_diagonals(long long n, int d);

}  // namespace oracle
