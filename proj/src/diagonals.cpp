#include "hcb/diagonals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "hcb/geometry.hpp"

namespace hcb {

namespace {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long q = 2; q * q <= v; ++q)
        if (v % q == 0) return false;
    return true;
}

long long next_prime_above(long long v) {
    long long p = v + 1;
    while (!is_prime(p)) ++p;
    return p;
}

std::vector<int> sorted_axes(const std::vector<std::pair<int, long long>>& entries) {
    std::vector<int> axes;
    axes.reserve(entries.size());
    for (const auto& [axis, value] : entries) axes.push_back(axis);
    return axes;
}

}  // namespace

Face Face::make(int d, std::vector<std::pair<int, long long>> fixed,
                std::vector<std::pair<int, long long>> free_cells) {
    Face f;
    f.d = d;
    f.fixed = std::move(fixed);
    std::sort(f.fixed.begin(), f.fixed.end());
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (const auto& [axis, level] : f.fixed) {
        if (axis < 0 || axis >= d || seen[static_cast<std::size_t>(axis)])
            throw std::invalid_argument("bad fixed axis in face");
        seen[static_cast<std::size_t>(axis)] = true;
    }
    std::map<int, long long> cells;
    for (const auto& [axis, cell] : free_cells) {
        if (axis < 0 || axis >= d || seen[static_cast<std::size_t>(axis)])
            throw std::invalid_argument("bad free axis in face");
        cells[axis] = cell;
    }
    for (int a = 0; a < d; ++a)
        if (!seen[static_cast<std::size_t>(a)]) f.free_cell.emplace_back(a, cells.count(a) ? cells[a] : 0);
    return f;
}

Face Face::base(int d, int axis_a, int axis_b) {
    return make(d, {{axis_a, 0}, {axis_b, 0}});
}

bool Face::is_fixed(int axis) const {
    for (const auto& [a, l] : fixed)
        if (a == axis) return true;
    return false;
}

long long Face::level_of(int axis) const {
    for (const auto& [a, l] : fixed)
        if (a == axis) return l;
    throw std::invalid_argument("axis not fixed");
}

long long Face::cell_of(int axis) const {
    for (const auto& [a, c] : free_cell)
        if (a == axis) return c;
    throw std::invalid_argument("axis not free");
}

bool operator<(const Face& a, const Face& b) {
    return std::tie(a.d, a.fixed, a.free_cell) < std::tie(b.d, b.fixed, b.free_cell);
}

long long combinatorial_length(const Face& A, const Face& B) {
    if (A.d != B.d) throw std::invalid_argument("face dimension mismatch");
    for (const auto& [axis, level] : A.fixed)
        if (level != 0) throw std::invalid_argument("initial face must sit at level 0");
    for (const auto& [axis, cell] : A.free_cell)
        if (cell != 0) throw std::invalid_argument("initial face must lie in the unit cube");
    long long n = 0;
    for (const auto& [axis, level] : B.fixed) {
        if (level < 0) throw NotComparable("terminal face lies on the negative side");
        n += level;
    }
    for (const auto& [axis, cell] : B.free_cell) {
        if (cell < 0) throw NotComparable("terminal face lies on the negative side");
        n += cell;
    }
    return n;
}

std::vector<Diagonal> enumerate_diagonals(long long n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("bad diagonal enumeration arguments");
    std::vector<Diagonal> out;
    std::vector<std::pair<int, int>> axis_pairs;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) axis_pairs.emplace_back(a, b);

    for (const auto& [a1, a2] : axis_pairs) {
        Face A = Face::base(d, a1, a2);
        for (const auto& [b1, b2] : axis_pairs) {
            bool same_axes = (b1 == a1 && b2 == a2);
            std::vector<int> free_axes;
            for (int a = 0; a < d; ++a)
                if (a != b1 && a != b2) free_axes.push_back(a);
            // levels l1, l2 >= 1 on the fixed axes, cells >= 0 elsewhere
            for (long long l1 = 1; l1 <= n - 1; ++l1) {
                for (long long l2 = 1; l2 <= n - l1; ++l2) {
                    if (same_axes && std::gcd(l1, l2) != 1) continue;
                    long long rest = n - l1 - l2;
                    // distribute `rest` over the free axes
                    std::vector<long long> cells(free_axes.size(), 0);
                    std::function<void(std::size_t, long long)> place = [&](std::size_t i,
                                                                            long long left) {
                        if (i + 1 == cells.size()) {
                            cells[i] = left;
                            Diagonal g;
                            g.A = A;
                            std::vector<std::pair<int, long long>> cell_list;
                            for (std::size_t k = 0; k < free_axes.size(); ++k)
                                cell_list.emplace_back(free_axes[k], cells[k]);
                            g.B = Face::make(d, {{b1, l1}, {b2, l2}}, cell_list);
                            g.n = n;
                            g.kind = same_axes ? DiagonalKind::Type1 : DiagonalKind::Type2;
                            g.positive = true;
                            out.push_back(std::move(g));
                            return;
                        }
                        for (long long c = 0; c <= left; ++c) {
                            cells[i] = c;
                            place(i + 1, left - c);
                        }
                    };
                    if (cells.empty()) {
                        if (rest == 0) {
                            Diagonal g;
                            g.A = A;
                            g.B = Face::make(d, {{b1, l1}, {b2, l2}}, {});
                            g.n = n;
                            g.kind = same_axes ? DiagonalKind::Type1 : DiagonalKind::Type2;
                            g.positive = true;
                            out.push_back(std::move(g));
                        }
                    } else {
                        place(0, rest);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Diagonal& x, const Diagonal& y) {
        return std::tie(x.A, x.B) < std::tie(y.A, y.B);
    });
    return out;
}

DiagonalEquation diagonal_equation(const Face& A, const Face& B) {
    int d = A.d;
    if (A.fixed.size() != 2 || B.fixed.size() != 2)
        throw std::invalid_argument("diagonal equations need codimension-2 faces");
    auto a_axes = sorted_axes(A.fixed);
    // Permutation sending A's fixed axes to (d-2, d-1), order-preserving elsewhere.
    DiagonalEquation eq;
    eq.perm.assign(static_cast<std::size_t>(d), -1);
    eq.perm[static_cast<std::size_t>(a_axes[0])] = d - 2;
    eq.perm[static_cast<std::size_t>(a_axes[1])] = d - 1;
    int next = 0;
    for (int a = 0; a < d; ++a)
        if (eq.perm[static_cast<std::size_t>(a)] == -1) eq.perm[static_cast<std::size_t>(a)] = next++;

    int i = eq.perm[static_cast<std::size_t>(B.fixed[0].first)];
    int j = eq.perm[static_cast<std::size_t>(B.fixed[1].first)];
    long long li = B.fixed[0].second, lj = B.fixed[1].second;
    if (i > j) {
        std::swap(i, j);
        std::swap(li, lj);
    }
    eq.i = i;
    eq.j = j;
    eq.n = li;
    eq.p = lj;
    int in_last_two = (i >= d - 2 ? 1 : 0) + (j >= d - 2 ? 1 : 0);
    eq.variant = in_last_two == 2 ? EqVariant::F : (in_last_two == 1 ? EqVariant::G : EqVariant::H);
    return eq;
}

DiagonalCount count_diagonals(long long n, int d) {
    DiagonalCount c;
    c.n = n;
    c.count = static_cast<long long>(enumerate_diagonals(n, d).size());
    double denom = 1.0;
    for (int k = 0; k < d - 1; ++k) denom *= static_cast<double>(n);
    c.ratio = static_cast<double>(c.count) / denom;
    return c;
}

std::set<std::string> words_in_diagonal(const Diagonal& g, const WordSampleConfig& cfg) {
    if (!g.positive || g.n < 2) throw std::invalid_argument("word sampling needs a positive diagonal of length >= 2");
    int d = g.A.d;
    int grid = std::max(2, cfg.grid);
    long long pa = next_prime_above(std::max<long long>(g.n, grid + 1));
    long long pb = next_prime_above(pa);

    auto offsets = [](long long prime, int count) {
        std::vector<long long> r;
        if (count < 1) count = 1;
        for (int i = 0; i < count; ++i) {
            long long v = 1 + ((prime - 2) * i) / std::max(1, count - 1);
            if (r.empty() || r.back() != v) r.push_back(v);
        }
        return r;
    };

    const auto a_free = g.A.free_cell;
    const auto b_free = g.B.free_cell;
    auto a_offsets = offsets(pa, grid);
    auto b_offsets = offsets(pb, grid);

    // Axis-sorted fixed data of B, for endpoint identification.
    std::vector<int> b_axes = sorted_axes(g.B.fixed);

    std::set<std::string> words;
    bool any_clean = false;

    // Enumerate assignments of offsets to the free coordinates of A and B.
    std::size_t a_vars = a_free.size(), b_vars = b_free.size();
    std::vector<std::size_t> a_idx(a_vars, 0), b_idx(b_vars, 0);
    auto advance = [](std::vector<std::size_t>& idx, std::size_t base) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (++idx[k] < base) return true;
            idx[k] = 0;
        }
        return false;  // wrapped around (or no free coordinates at all)
    };

    bool a_more = true;
    for (; a_more; a_more = advance(a_idx, a_offsets.size())) {
        PointQ a;
        a.c.assign(static_cast<std::size_t>(d), Rational(0));
        for (std::size_t k = 0; k < a_vars; ++k)
            a[a_free[k].first] =
                Rational(a_free[k].second) + Rational(a_offsets[a_idx[k]], pa);
        bool b_more = true;
        std::fill(b_idx.begin(), b_idx.end(), 0);
        for (; b_more; b_more = advance(b_idx, b_offsets.size())) {
            PointQ b;
            b.c.assign(static_cast<std::size_t>(d), Rational(0));
            for (const auto& [axis, level] : g.B.fixed) b[axis] = Rational(level);
            for (std::size_t k = 0; k < b_vars; ++k)
                b[b_free[k].first] =
                    Rational(b_free[k].second) + Rational(b_offsets[b_idx[k]], pb);

            std::vector<Rational> w(static_cast<std::size_t>(d));
            bool positive_dir = true;
            for (int axis = 0; axis < d && positive_dir; ++axis) {
                w[static_cast<std::size_t>(axis)] = b[axis] - a[axis];
                positive_dir = w[static_cast<std::size_t>(axis)] > 0;
            }
            if (!positive_dir) continue;

            DirectionQ omega = DirectionQ::from_rationals(w);
            Rational lambda = w[0] / Rational(omega[0]);  // b = a + lambda * omega

            std::string code;
            bool clean = false;
            try {
                CrossingScan scan(a, omega);
                while (true) {
                    CrossingEvent e = scan.next();
                    if (e.time >= lambda) break;  // single crossing at the arrival face: not a diagonal endpoint
                    code.push_back(static_cast<char>('0' + e.axis));
                }
            } catch (const TieAtEdge& tie) {
                if (Rational(tie.time()) == lambda && tie.axes() == b_axes)
                    clean = true;  // the simultaneous pair is exactly the arrival face
            }
            if (!clean) continue;
            if (static_cast<long long>(code.size()) != g.n - 2)
                throw std::logic_error("interior crossing count mismatch in diagonal sampling");
            any_clean = true;
            words.insert(std::move(code));
        }
    }
    if (!any_clean)
        throw DegenerateDiagonal("no tie-free segment between the faces: pair is overlaid");
    return words;
}

BudgetReport bispecial_diagonal_budget(long long n, int d, const LanguageSet& ls,
                                       const WordSampleConfig& cfg) {
    if (n < 2) throw std::invalid_argument("budget needs n >= 2");
    if (ls.d != d || ls.n_max < n) throw InsufficientDepth("language set too shallow for budget");
    BudgetReport r;
    r.n = n;
    std::set<std::string> all_words;
    for (const auto& g : enumerate_diagonals(n, d)) {
        try {
            auto w = words_in_diagonal(g, cfg);
            all_words.insert(w.begin(), w.end());
        } catch (const DegenerateDiagonal&) {
            ++r.degenerate_diagonals;
        }
    }
    r.distinct_words = static_cast<long long>(all_words.size());
    auto bis = bispecial_words(ls, static_cast<int>(n) - 2);
    r.bispecial_count = static_cast<long long>(bis.size());
    r.index_sum = 0;
    for (const auto& st : bis) r.index_sum += st.index();
    r.lower_ok = r.distinct_words <= r.index_sum;
    r.upper_ok = r.index_sum <= static_cast<long long>(d) * d * r.distinct_words;
    return r;
}

ProjectionReport projection_surjectivity_check(long long n, int d, const LanguageSet& lower,
                                               const WordSampleConfig& cfg) {
    if (d < 3) throw std::invalid_argument("projection check needs d >= 3");
    if (lower.d != d - 1) throw std::invalid_argument("lower language has wrong dimension");
    ProjectionReport rep;
    rep.n = n;
    rep.d = d;
    std::map<int, std::set<std::string>> projected;
    for (const auto& g : enumerate_diagonals(n, d)) {
        // Diagonals whose endpoints share exactly one pinned axis project onto
        // a (d-1)-cube billiard along that axis.
        std::vector<int> a_axes = sorted_axes(g.A.fixed), b_axes = sorted_axes(g.B.fixed);
        std::vector<int> shared;
        std::set_intersection(a_axes.begin(), a_axes.end(), b_axes.begin(), b_axes.end(),
                              std::back_inserter(shared));
        if (shared.size() != 1) continue;
        int axis = shared[0];
        std::set<std::string> words;
        try {
            words = words_in_diagonal(g, cfg);
        } catch (const DegenerateDiagonal&) {
            continue;
        }
        for (const auto& w : words) {
            BilliardWord pw = project_word(BilliardWord(d, w), axis);
            if (pw.size() <= lower.n_max && !lower.contains(pw.str()))
                rep.projections_inside_lower = false;
            projected[pw.size()].insert(pw.str());
        }
    }
    for (int len = 0; len <= static_cast<int>(n) - 2; ++len) {
        ProjectionCoverage cov;
        cov.len = len;
        if (len > lower.n_max) break;
        cov.language_words = lower.count(len);
        const auto& got = projected[len];
        long long covered = 0;
        for (const auto& w : lower.levels[static_cast<std::size_t>(len)])
            if (got.count(w)) ++covered;
        cov.covered = covered;
        cov.full = covered == cov.language_words;
        rep.coverage.push_back(cov);
    }
    rep.max_full_len = -1;
    for (const auto& cov : rep.coverage) {
        if (!cov.full) break;
        rep.max_full_len = cov.len;
    }
    return rep;
}

}  // namespace hcb
