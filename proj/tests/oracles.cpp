#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

struct Frac {
    long long num = 0, den = 1;  // den > 0
};

int cmp(const Frac& a, const Frac& b) {
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

long long floor_ll(long long p, long long q) {
    long long f = p / q;
    if (p % q != 0 && (p < 0) != (q < 0)) --f;
    return f;
}

}  // namespace

std::optional<std::string> trace(const std::vector<long long>& m_num,
                                 const std::vector<long long>& m_den,
                                 const std::vector<long long>& w, int n) {
    int d = static_cast<int>(w.size());
    struct Ev {
        Frac t;
        int axis;
    };
    std::vector<Ev> evs;
    for (int a = 0; a < d; ++a) {
        long long p = m_num[static_cast<std::size_t>(a)], q = m_den[static_cast<std::size_t>(a)];
        long long ww = w[static_cast<std::size_t>(a)];
        if (ww == 0) throw std::invalid_argument("oracle trace needs nonzero components");
        long long fl = floor_ll(p, q);
        long long cl = (p % q == 0) ? fl : fl + 1;
        for (int j = 0; j <= n; ++j) {
            long long k = ww > 0 ? fl + 1 + j : cl - 1 - j;
            Frac t{k * q - p, q * ww};
            if (t.den < 0) {
                t.num = -t.num;
                t.den = -t.den;
            }
            evs.push_back({t, a});
        }
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& x, const Ev& y) { return cmp(x.t, y.t) < 0; });
    if (static_cast<int>(evs.size()) < n + 1) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (cmp(evs[static_cast<std::size_t>(i)].t, evs[static_cast<std::size_t>(i + 1)].t) == 0)
            return std::nullopt;
    std::string out;
    for (int i = 0; i < n; ++i) out.push_back(static_cast<char>('0' + evs[static_cast<std::size_t>(i)].axis));
    return out;
}

long long totient(long long n) {
    long long c = 0;
    for (long long m = 1; m <= n; ++m)
        if (std::gcd(m, n) == 1) ++c;
    return c;
}

long long square_complexity(int n) {
    long long p = 1;
    for (int i = 1; i <= n; ++i) p += static_cast<long long>(n + 1 - i) * totient(i);
    return p;
}

std::vector<std::set<std::string>> square_language_sets(int n_max, int height) {
    std::vector<std::set<std::string>> sets(static_cast<std::size_t>(n_max) + 1);
    int Q = height;
    for (long long a = 1; a <= height; ++a) {
        for (long long b = 1; b <= height; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (int face = 0; face < 2; ++face) {
                for (long long j = 0; j < Q; ++j) {
                    std::vector<long long> mn = {0, 0}, md = {1, 1};
                    mn[static_cast<std::size_t>(1 - face)] = j;
                    md[static_cast<std::size_t>(1 - face)] = Q;
                    auto code = trace(mn, md, {a, b}, n_max);
                    if (!code) continue;
                    for (int len = 1; len <= n_max; ++len)
                        for (std::size_t pos = 0; pos + static_cast<std::size_t>(len) <= code->size(); ++pos)
                            sets[static_cast<std::size_t>(len)].insert(code->substr(pos, static_cast<std::size_t>(len)));
                }
            }
        }
    }
    return sets;
}

std::vector<long long> square_language_counts(int n_max) {
    int base = 2 * (n_max + 2);
    std::vector<long long> prev;
    for (int height = base;; height += std::max(4, base / 4)) {
        auto sets = square_language_sets(n_max, height);
        std::vector<long long> counts;
        for (int nn = 1; nn <= n_max; ++nn)
            counts.push_back(static_cast<long long>(sets[static_cast<std::size_t>(nn)].size()));
        if (!prev.empty() && prev == counts) return counts;
        prev = std::move(counts);
        if (height > 8 * base) throw std::runtime_error("square language oracle failed to settle");
    }
}

long long regions_by_point_location(const std::vector<hcb::Line2D>& lines) {
    using hcb::BigInt;
    using hcb::Rational;
    // Slab boundaries: intersection abscissae plus the x of every vertical line.
    std::set<Rational> xs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].b == 0) xs.insert(hcb::make_rational(lines[i].c, lines[i].a));
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            BigInt det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
            if (det == 0) continue;
            xs.insert(hcb::make_rational(lines[i].c * lines[j].b - lines[j].c * lines[i].b, det));
        }
    }
    std::vector<Rational> probe_xs;
    if (xs.empty()) {
        probe_xs.emplace_back(0);
    } else {
        auto it = xs.begin();
        probe_xs.push_back(*it - 1);
        for (auto next = std::next(it); next != xs.end(); ++it, ++next)
            probe_xs.push_back((*it + *next) / 2);
        probe_xs.push_back(*xs.rbegin() + 1);
    }
    std::set<std::vector<int>> signatures;
    for (const auto& px : probe_xs) {
        std::set<Rational> ys;
        for (const auto& l : lines)
            if (l.b != 0) ys.insert((Rational(l.c) - Rational(l.a) * px) / Rational(l.b));
        std::vector<Rational> probe_ys;
        if (ys.empty()) {
            probe_ys.emplace_back(0);
        } else {
            auto it = ys.begin();
            probe_ys.push_back(*it - 1);
            for (auto next = std::next(it); next != ys.end(); ++it, ++next)
                probe_ys.push_back((*it + *next) / 2);
            probe_ys.push_back(*ys.rbegin() + 1);
        }
        for (const auto& py : probe_ys) {
            std::vector<int> sig;
            sig.reserve(lines.size());
            bool on_line = false;
            for (const auto& l : lines) {
                Rational v = Rational(l.a) * px + Rational(l.b) * py - Rational(l.c);
                if (v == 0) {
                    on_line = true;
                    break;
                }
                sig.push_back(v > 0 ? 1 : -1);
            }
            if (!on_line) signatures.insert(std::move(sig));
        }
    }
    return static_cast<long long>(signatures.size());
}

namespace {

/// Exact crossing profile of the segment a -> b (rational endpoints, all
/// components of b-a positive): counts interior crossings, detects interior
/// ties, and identifies the axes crossing exactly at arrival.
struct SegmentProfile {
    bool interior_tie = false;
    long long interior = 0;
    std::vector<int> arrival_axes;
};

SegmentProfile profile_segment(const std::vector<hcb::Rational>& a,
                               const std::vector<hcb::Rational>& b) {
    using hcb::Rational;
    int d = static_cast<int>(a.size());
    std::vector<std::pair<Rational, int>> events;
    for (int axis = 0; axis < d; ++axis) {
        Rational w = b[static_cast<std::size_t>(axis)] - a[static_cast<std::size_t>(axis)];
        hcb::BigInt k = hcb::floor_rat(a[static_cast<std::size_t>(axis)]) + 1;
        while (true) {
            Rational t = (Rational(k) - a[static_cast<std::size_t>(axis)]) / w;
            if (t > 1) break;
            events.emplace_back(t, axis);
            ++k;
        }
    }
    std::sort(events.begin(), events.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SegmentProfile prof;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].first == Rational(1)) {
            prof.arrival_axes.push_back(events[i].second);
            continue;
        }
        ++prof.interior;
        if (i + 1 < events.size() && events[i].first == events[i + 1].first &&
            events[i + 1].first != Rational(1))
            prof.interior_tie = true;
    }
    std::sort(prof.arrival_axes.begin(), prof.arrival_axes.end());
    return prof;
}

}  // namespace

std::set<FacePair> visible_diagonals(long long n, int d) {
    std::set<FacePair> out;
    std::vector<std::pair<int, int>> axis_pairs;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) axis_pairs.emplace_back(a, b);

    const std::vector<std::pair<long long, long long>> a_offsets = {{1, 7}, {3, 7}, {6, 7}};
    const std::vector<std::pair<long long, long long>> b_offsets = {{1, 11}, {6, 11}, {10, 11}};

    for (const auto& [a1, a2] : axis_pairs) {
        for (const auto& [b1, b2] : axis_pairs) {
            std::vector<int> free_axes;
            for (int a = 0; a < d; ++a)
                if (a != b1 && a != b2) free_axes.push_back(a);
            int f = static_cast<int>(free_axes.size());
            // all (l1, l2, cells...) >= 0 summing to n
            std::vector<long long> parts(static_cast<std::size_t>(2 + f), 0);
            std::function<void(std::size_t, long long)> assign = [&](std::size_t i, long long left) {
                if (i + 1 == parts.size()) {
                    parts[i] = left;
                } else {
                    for (long long v = 0; v <= left; ++v) {
                        parts[i] = v;
                        assign(i + 1, left - v);
                    }
                    return;
                }
                long long l1 = parts[0], l2 = parts[1];
                // sample segments between relative interiors
                bool qualifies = false;
                std::vector<int> b_fixed_axes = {b1, b2};
                int a_free_count = d - 2;
                std::vector<int> a_free;
                for (int a = 0; a < d; ++a)
                    if (a != a1 && a != a2) a_free.push_back(a);
                std::vector<std::size_t> ai(static_cast<std::size_t>(a_free_count), 0);
                std::vector<std::size_t> bi(static_cast<std::size_t>(f), 0);
                auto adv = [](std::vector<std::size_t>& idx, std::size_t base) {
                    for (auto& v : idx) {
                        if (++v < base) return true;
                        v = 0;
                    }
                    return false;
                };
                bool amore = true;
                for (; amore && !qualifies; amore = adv(ai, a_offsets.size())) {
                    std::vector<hcb::Rational> pa(static_cast<std::size_t>(d), hcb::Rational(0));
                    for (std::size_t k = 0; k < a_free.size(); ++k)
                        pa[static_cast<std::size_t>(a_free[k])] =
                            hcb::Rational(a_offsets[ai[k]].first, a_offsets[ai[k]].second);
                    std::fill(bi.begin(), bi.end(), 0);
                    bool bmore = true;
                    for (; bmore && !qualifies; bmore = adv(bi, b_offsets.size())) {
                        std::vector<hcb::Rational> pb(static_cast<std::size_t>(d), hcb::Rational(0));
                        pb[static_cast<std::size_t>(b1)] = l1;
                        pb[static_cast<std::size_t>(b2)] = l2;
                        for (std::size_t k = 0; k < free_axes.size(); ++k)
                            pb[static_cast<std::size_t>(free_axes[k])] =
                                hcb::Rational(parts[2 + k]) +
                                hcb::Rational(b_offsets[bi[k]].first, b_offsets[bi[k]].second);
                        bool positive = true;
                        for (int axis = 0; axis < d && positive; ++axis)
                            positive = pb[static_cast<std::size_t>(axis)] >
                                       pa[static_cast<std::size_t>(axis)];
                        if (!positive) continue;
                        auto prof = profile_segment(pa, pb);
                        if (prof.interior_tie) continue;
                        if (prof.interior != n - 2) continue;
                        if (prof.arrival_axes != b_fixed_axes) continue;
                        qualifies = true;
                    }
                }
                if (qualifies) {
                    FacePair fp;
                    fp.a_fixed = {{a1, 0}, {a2, 0}};
                    fp.b_fixed = {{b1, l1}, {b2, l2}};
                    for (std::size_t k = 0; k < free_axes.size(); ++k)
                        fp.b_cells.emplace_back(free_axes[k], parts[2 + k]);
                    std::sort(fp.b_cells.begin(), fp.b_cells.end());
                    out.insert(std::move(fp));
                }
            };
            assign(0, n);
        }
    }
    return out;
}

}  // namespace oracle
