// Exact tracing of unfolded billiard rays through the unit-cube tesselation:
// crossing events, trajectory coding, folding back to the cube, and the
// reflection / projection symmetries of the coding.
#pragma once

#include <utility>
#include <vector>

#include "hcb/errors.hpp"
#include "hcb/numeric.hpp"
#include "hcb/word.hpp"

namespace hcb {

/// A point with exact rational coordinates. Cube points live in [0,1]^d,
/// unfolded points are unconstrained.
struct PointQ {
    std::vector<Rational> c;

    PointQ() = default;
    explicit PointQ(std::vector<Rational> coords) : c(std::move(coords)) {}

    int dim() const { return static_cast<int>(c.size()); }
    const Rational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    bool in_unit_cube() const;

    friend bool operator==(const PointQ& a, const PointQ& b) { return a.c == b.c; }
};

/// A billiard direction in (Q*)^d, stored as an integer vector with
/// gcd 1 across components. All components are nonzero.
struct DirectionQ {
    std::vector<BigInt> c;

    int dim() const { return static_cast<int>(c.size()); }
    const BigInt& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    /// Canonicalizes an integer vector: rejects zero components, divides by
    /// the common gcd.
    static DirectionQ from_bigints(std::vector<BigInt> v);
    static DirectionQ from_ints(const std::vector<long long>& v);

    /// Clears denominators of a rational vector and canonicalizes.
    static DirectionQ from_rationals(const std::vector<Rational>& v);

    bool all_positive() const;

    /// Octant representative: componentwise absolute value.
    DirectionQ octant_abs() const;

    friend bool operator==(const DirectionQ& a, const DirectionQ& b) { return a.c == b.c; }
};

/// One crossing of an integer hyperplane x_axis = level by the unfolded ray,
/// at exact time > 0.
struct CrossingEvent {
    Rational time;
    int axis = 0;
    long long level = 0;
};

/// Streams the crossings of the ray m + t*omega, t > 0, in strictly
/// increasing time order. Crossing times per axis form the arithmetic
/// progression (level - m_a)/omega_a; the scan merges them exactly.
///
/// Throws ZeroComponent on construction if some omega_a = 0, and TieAtEdge
/// from next() when two axes cross at the same instant.
class CrossingScan {
public:
    CrossingScan(const PointQ& m, const DirectionQ& omega);

    CrossingEvent next();

    /// Time of the upcoming crossing without consuming it.
    Rational peek_time() const;

private:
    int d_;
    // Next crossing on axis a happens at num_[a]/den_[a], den_ > 0; the
    // numerator advances by step_[a] per crossing on that axis.
    std::vector<BigInt> num_, den_, step_;
    std::vector<long long> level_;
    std::vector<int> level_step_;
};

/// First n crossings of the ray from m (in the closed cube) along omega.
std::vector<CrossingEvent> crossings(const PointQ& m, const DirectionQ& omega, int n);

/// Coding of the ray: letter i is the axis of the i-th crossing.
BilliardWord trace_word(const PointQ& m, const DirectionQ& omega, int n);

/// Folds an unfolded point back into [0,1]^d. Coordinates with even integer
/// part keep their fractional part, odd ones are mirrored. Returns the folded
/// point and the vector of integer parts.
std::pair<PointQ, std::vector<BigInt>> fold(const PointQ& unfolded);

/// Erases the letters of `axis` and relabels the remaining alphabet to
/// {0,...,d-2}, preserving axis order. An all-`axis` word projects to the
/// empty word (flagged by the caller via empty(), not an error).
BilliardWord project_word(const BilliardWord& v, int axis);

PointQ project_point(const PointQ& m, int axis);
DirectionQ project_direction(const DirectionQ& omega, int axis);

/// Mirror in the face x_axis = 1/2 plane symmetry: m_axis -> 1 - m_axis,
/// omega_axis -> -omega_axis. The trace word is invariant under this map.
std::pair<PointQ, DirectionQ> reflect(const PointQ& m, const DirectionQ& omega, int axis);

}  // namespace hcb
