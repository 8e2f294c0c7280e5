#include "hcb/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace hcb {

bool PointQ::in_unit_cube() const {
    for (const auto& x : c)
        if (x < 0 || x > 1) return false;
    return true;
}

DirectionQ DirectionQ::from_bigints(std::vector<BigInt> v) {
    if (v.empty()) throw std::invalid_argument("empty direction");
    BigInt g = 0;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] == 0) throw ZeroComponent(static_cast<int>(a));
        g = gcd(g, abs(v[a]));
    }
    if (g > 1)
        for (auto& x : v) x /= g;
    DirectionQ w;
    w.c = std::move(v);
    return w;
}

DirectionQ DirectionQ::from_ints(const std::vector<long long>& v) {
    std::vector<BigInt> b(v.begin(), v.end());
    return from_bigints(std::move(b));
}

DirectionQ DirectionQ::from_rationals(const std::vector<Rational>& v) {
    BigInt common_den = 1;
    for (const auto& q : v) common_den = lcm(common_den, denominator(q));
    std::vector<BigInt> ints;
    ints.reserve(v.size());
    for (const auto& q : v) ints.push_back(numerator(q) * (common_den / denominator(q)));
    return from_bigints(std::move(ints));
}

bool DirectionQ::all_positive() const {
    return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x > 0; });
}

DirectionQ DirectionQ::octant_abs() const {
    DirectionQ w;
    w.c.reserve(c.size());
    for (const auto& x : c) w.c.push_back(abs(x));
    return w;
}

CrossingScan::CrossingScan(const PointQ& m, const DirectionQ& omega) : d_(m.dim()) {
    if (omega.dim() != d_) throw std::invalid_argument("point/direction dimension mismatch");
    if (d_ < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!m.in_unit_cube()) throw std::invalid_argument("start point must lie in [0,1]^d");
    num_.resize(static_cast<std::size_t>(d_));
    den_.resize(static_cast<std::size_t>(d_));
    step_.resize(static_cast<std::size_t>(d_));
    level_.resize(static_cast<std::size_t>(d_));
    level_step_.resize(static_cast<std::size_t>(d_));
    for (int a = 0; a < d_; ++a) {
        const BigInt& w = omega[a];
        if (w == 0) throw ZeroComponent(a);
        const BigInt& p = numerator(m[a]);
        const BigInt& q = denominator(m[a]);
        std::size_t i = static_cast<std::size_t>(a);
        if (w > 0) {
            BigInt k0 = floor_rat(m[a]) + 1;  // first level strictly above m_a
            num_[i] = k0 * q - p;
            den_[i] = q * w;
            level_[i] = k0.convert_to<long long>();
            level_step_[i] = 1;
        } else {
            BigInt k0 = ceil_rat(m[a]) - 1;  // first level strictly below m_a
            num_[i] = p - k0 * q;
            den_[i] = q * -w;
            level_[i] = k0.convert_to<long long>();
            level_step_[i] = -1;
        }
        step_[i] = q;
    }
}

Rational CrossingScan::peek_time() const {
    std::size_t best = 0;
    for (std::size_t a = 1; a < static_cast<std::size_t>(d_); ++a)
        if (num_[a] * den_[best] < num_[best] * den_[a]) best = a;
    return Rational(num_[best], den_[best]);
}

CrossingEvent CrossingScan::next() {
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t a = 1; a < static_cast<std::size_t>(d_); ++a) {
        BigInt lhs = num_[a] * den_[best];
        BigInt rhs = num_[best] * den_[a];
        if (lhs < rhs) {
            best = a;
            tie = false;
        } else if (lhs == rhs) {
            tie = true;
        }
    }
    if (tie) {
        Rational t(num_[best], den_[best]);
        std::vector<int> axes;
        for (std::size_t a = 0; a < static_cast<std::size_t>(d_); ++a)
            if (num_[a] * den_[best] == num_[best] * den_[a]) axes.push_back(static_cast<int>(a));
        throw TieAtEdge(t, axes);
    }
    CrossingEvent e;
    e.time = Rational(num_[best], den_[best]);
    e.axis = static_cast<int>(best);
    e.level = level_[best];
    num_[best] += step_[best];
    level_[best] += level_step_[best];
    return e;
}

std::vector<CrossingEvent> crossings(const PointQ& m, const DirectionQ& omega, int n) {
    if (n < 1) throw std::invalid_argument("crossing count must be >= 1");
    CrossingScan scan(m, omega);
    std::vector<CrossingEvent> events;
    events.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) events.push_back(scan.next());
    return events;
}

BilliardWord trace_word(const PointQ& m, const DirectionQ& omega, int n) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
    CrossingScan scan(m, omega);
    std::string letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('0' + scan.next().axis));
    return BilliardWord(m.dim(), std::move(letters));
}

std::pair<PointQ, std::vector<BigInt>> fold(const PointQ& unfolded) {
    PointQ q;
    q.c.reserve(unfolded.c.size());
    std::vector<BigInt> parities;
    parities.reserve(unfolded.c.size());
    for (const auto& x : unfolded.c) {
        BigInt f = floor_rat(x);
        Rational frac = x - Rational(f);
        q.c.push_back((f % 2 == 0) ? frac : Rational(1) - frac);
        parities.push_back(f);
    }
    return {std::move(q), std::move(parities)};
}

BilliardWord project_word(const BilliardWord& v, int axis) {
    if (v.dim() < 2) throw std::invalid_argument("projection needs dimension >= 2");
    if (axis < 0 || axis >= v.dim()) throw std::invalid_argument("projection axis out of range");
    std::string letters;
    letters.reserve(v.str().size());
    for (char c : v.str()) {
        int a = c - '0';
        if (a == axis) continue;
        letters.push_back(static_cast<char>('0' + (a > axis ? a - 1 : a)));
    }
    return BilliardWord(v.dim() - 1, std::move(letters));
}

PointQ project_point(const PointQ& m, int axis) {
    PointQ r;
    for (int a = 0; a < m.dim(); ++a)
        if (a != axis) r.c.push_back(m[a]);
    return r;
}

DirectionQ project_direction(const DirectionQ& omega, int axis) {
    std::vector<BigInt> v;
    for (int a = 0; a < omega.dim(); ++a)
        if (a != axis) v.push_back(omega[a]);
    return DirectionQ::from_bigints(std::move(v));
}

std::pair<PointQ, DirectionQ> reflect(const PointQ& m, const DirectionQ& omega, int axis) {
    PointQ m2 = m;
    m2[axis] = Rational(1) - m[axis];
    std::vector<BigInt> w = omega.c;
    w[static_cast<std::size_t>(axis)] = -w[static_cast<std::size_t>(axis)];
    DirectionQ o2;
    o2.c = std::move(w);  // already coprime, negation preserves that
    return {std::move(m2), std::move(o2)};
}

}  // namespace hcb
