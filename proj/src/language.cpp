#include "hcb/language.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "hcb/lp.hpp"

namespace hcb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr int kRetryPrimes[] = {101, 103, 107, 109};

/// Positive integer vectors in [1,D]^d with gcd 1 across components,
/// lexicographically ordered.
std::vector<std::vector<long long>> positive_directions(int d, int height) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(static_cast<std::size_t>(d), 1);
    while (true) {
        long long g = 0;
        for (long long x : cur) g = std::gcd(g, x);
        if (g == 1) out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == height) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) cur[static_cast<std::size_t>(j)] = 1;
    }
    return out;
}

std::string trace_letters(const PointQ& m, const DirectionQ& omega, int n) {
    CrossingScan scan(m, omega);
    std::string letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('0' + scan.next().axis));
    return letters;
}

struct SampleCounters {
    std::atomic<long long> samples{0}, ties{0}, skipped{0};
};

/// Traces every (face grid point, direction) pair at one refinement level and
/// returns the distinct full-length codes.
std::unordered_set<std::string> sample_round(int d, int n_max, int Q, int D,
                                             const EnumerationConfig& cfg, SampleCounters& ctr) {
    auto dirs = positive_directions(d, D);
    int workers = cfg.workers > 0 ? cfg.workers
                                  : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<int>(workers, std::max<std::size_t>(dirs.size(), 1));

    // Grid tuples for the d-1 free coordinates of a face.
    long long grid_points = 1;
    for (int i = 0; i < d - 1; ++i) grid_points *= Q;

    std::mutex merge_mutex;
    std::unordered_set<std::string> pool;
    auto work = [&](std::size_t lo, std::size_t hi) {
        std::unordered_set<std::string> local;
        for (std::size_t di = lo; di < hi; ++di) {
            DirectionQ omega = DirectionQ::from_ints(dirs[di]);
            for (int face = 0; face < d; ++face) {
                for (long long gp = 0; gp < grid_points; ++gp) {
                    PointQ m;
                    m.c.assign(static_cast<std::size_t>(d), Rational(0));
                    long long rem = gp;
                    for (int i = 0, coord = 0; i < d; ++i) {
                        if (i == face) continue;
                        m[i] = Rational(rem % Q, Q);
                        rem /= Q;
                        ++coord;
                    }
                    ctr.samples.fetch_add(1, std::memory_order_relaxed);
                    bool done = false;
                    for (int attempt = 0; attempt <= cfg.tie_retries && !done; ++attempt) {
                        PointQ mm = m;
                        if (attempt > 0) {
                            // Deterministic in-cell nudge away from the tie.
                            int R = kRetryPrimes[(attempt - 1) % 4];
                            std::uint64_t h = splitmix64(cfg.seed ^ splitmix64(di) ^
                                                         splitmix64(static_cast<std::uint64_t>(
                                                             (gp << 8) | static_cast<long long>(
                                                                             face * 16 + attempt))));
                            for (int i = 0; i < d; ++i) {
                                if (i == face) continue;
                                long long r = 1 + static_cast<long long>(h % static_cast<std::uint64_t>(R - 1));
                                h = splitmix64(h);
                                mm[i] = m[i] + Rational(r, static_cast<long long>(Q) * R);
                            }
                        }
                        try {
                            local.insert(trace_letters(mm, omega, n_max));
                            done = true;
                        } catch (const TieAtEdge&) {
                            ctr.ties.fetch_add(1, std::memory_order_relaxed);
                        }
                    }
                    if (!done) ctr.skipped.fetch_add(1, std::memory_order_relaxed);
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        pool.merge(local);
    };

    std::vector<std::thread> threads;
    std::size_t chunk = (dirs.size() + static_cast<std::size_t>(workers) - 1) /
                        static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = std::min(dirs.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(work, lo, hi);
    }
    for (auto& t : threads) t.join();
    return pool;
}

/// Rebuilds the per-length sets from generator words: level n_max first, then
/// each lower level as the prefixes and suffixes of the level above.
void close_under_factors(LanguageSet& ls, const std::unordered_set<std::string>& full_pool,
                         const std::vector<std::unordered_set<std::string>>& extras) {
    ls.levels.assign(static_cast<std::size_t>(ls.n_max) + 1, {});
    ls.levels[0].insert("");
    auto& top = ls.levels[static_cast<std::size_t>(ls.n_max)];
    top = full_pool;
    for (const auto& w : extras[static_cast<std::size_t>(ls.n_max)]) top.insert(w);
    for (int n = ls.n_max - 1; n >= 1; --n) {
        auto& cur = ls.levels[static_cast<std::size_t>(n)];
        const auto& above = ls.levels[static_cast<std::size_t>(n + 1)];
        cur.reserve(above.size() + extras[static_cast<std::size_t>(n)].size());
        for (const auto& w : above) {
            cur.insert(w.substr(0, static_cast<std::size_t>(n)));
            cur.insert(w.substr(1, static_cast<std::size_t>(n)));
        }
        for (const auto& w : extras[static_cast<std::size_t>(n)]) cur.insert(w);
    }
}

/// Grid start points on the d faces {x_a = 0} used by the witness search.
std::vector<PointQ> lp_start_points(int d, int Q) {
    std::vector<PointQ> pts;
    long long grid_points = 1;
    for (int i = 0; i < d - 1; ++i) grid_points *= Q;
    for (int face = 0; face < d; ++face) {
        for (long long gp = 0; gp < grid_points; ++gp) {
            PointQ m;
            m.c.assign(static_cast<std::size_t>(d), Rational(0));
            long long rem = gp;
            for (int i = 0; i < d; ++i) {
                if (i == face) continue;
                m[i] = Rational(rem % Q, Q);
                rem /= Q;
            }
            pts.push_back(std::move(m));
        }
    }
    return pts;
}

}  // namespace

EnumerationConfig EnumerationConfig::auto_for(int d, int n_max) {
    EnumerationConfig cfg;
    if (d == 2) {
        // Direction cells for words of length n are cut by slopes of height
        // <= ~2(n+2); two rounds past that bound certify stability.
        int full = 2 * (n_max + 2) + 2;
        int a = std::max(6, full / 4);
        int b = std::max(a + 1, full / 2);
        int c = std::max(b + 1, full);
        int e = c + std::max(1, full / 8);
        cfg.schedule = {{a, a}, {b, b}, {c, c}, {e, e}};
    } else {
        int rounds = 6;
        for (int k = 0; k < rounds; ++k)
            cfg.schedule.emplace_back(6 + 2 * k, 8 + 4 * k);
    }
    return cfg;
}

void EnumerationConfig::validate() const {
    if (schedule.empty()) throw std::invalid_argument("empty refinement schedule");
    for (const auto& [Q, D] : schedule)
        if (Q < 1 || D < 1) throw std::invalid_argument("schedule entries must be >= 1");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i].first <= schedule[i - 1].first ||
            schedule[i].second <= schedule[i - 1].second)
            throw std::invalid_argument("schedule must increase strictly in both coordinates");
    if (stable_rounds < 1) throw std::invalid_argument("stable_rounds must be >= 1");
    if (lp_grid < 1) throw std::invalid_argument("lp_grid must be >= 1");
}

EnumerationResult enumerate_language(int d, int n_max, const EnumerationConfig& cfg_in) {
    if (d < 2) throw std::invalid_argument("language enumeration needs d >= 2");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    EnumerationConfig cfg = cfg_in;
    if (cfg.schedule.empty()) cfg = EnumerationConfig::auto_for(d, n_max);
    cfg.validate();

    EnumerationResult result;
    LanguageSet& ls = result.lang;
    ls.d = d;
    ls.n_max = n_max;
    StabilityReport& report = result.report;

    std::unordered_set<std::string> full_pool;
    std::vector<std::unordered_set<std::string>> extras(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::vector<long long>> history;  // per round, counts for n = 1..n_max
    SampleCounters ctr;

    std::vector<PointQ> lp_points;
    if (cfg.lp_refine) lp_points = lp_start_points(d, cfg.lp_grid);

    for (std::size_t round = 0; round < cfg.schedule.size(); ++round) {
        auto [Q, D] = cfg.schedule[round];
        auto pool = sample_round(d, n_max, Q, D, cfg, ctr);
        for (auto& w : pool) full_pool.insert(w);
        close_under_factors(ls, full_pool, extras);

        if (cfg.lp_refine) {
            // Witness search for unseen one-letter extensions of stored words.
            int top = std::min(cfg.lp_max_len, n_max);
            for (int n = 2; n <= top; ++n) {
                std::vector<std::string> candidates;
                for (const auto& w : ls.levels[static_cast<std::size_t>(n - 1)]) {
                    for (int x = 0; x < d; ++x) {
                        std::string cand = w + static_cast<char>('0' + x);
                        if (!ls.levels[static_cast<std::size_t>(n)].count(cand))
                            candidates.push_back(std::move(cand));
                    }
                }
                std::sort(candidates.begin(), candidates.end());
                for (const auto& cand : candidates) {
                    ++report.lp_candidates_tested;
                    for (const auto& m : lp_points) {
                        auto omega = witness_direction(cand, d, m);
                        if (!omega) continue;
                        ++report.lp_words_added;
                        extras[static_cast<std::size_t>(n)].insert(cand);
                        for (int len = 1; len < n; ++len)
                            for (int pos = 0; pos + len <= n; ++pos)
                                extras[static_cast<std::size_t>(len)].insert(
                                    cand.substr(static_cast<std::size_t>(pos),
                                                static_cast<std::size_t>(len)));
                        break;
                    }
                }
            }
            close_under_factors(ls, full_pool, extras);
        }

        std::vector<long long> counts;
        counts.reserve(static_cast<std::size_t>(n_max));
        for (int n = 1; n <= n_max; ++n) counts.push_back(ls.count(n));
        history.push_back(std::move(counts));
        report.rounds_run = static_cast<int>(round) + 1;

        bool all_stable = history.size() > static_cast<std::size_t>(cfg.stable_rounds);
        if (all_stable) {
            for (std::size_t k = history.size() - static_cast<std::size_t>(cfg.stable_rounds);
                 k < history.size() && all_stable; ++k)
                all_stable = history[k] == history[k - 1];
        }
        if (all_stable) break;
    }

    report.samples = ctr.samples.load();
    report.ties_retried = ctr.ties.load();
    report.samples_skipped = ctr.skipped.load();
    report.lengths.resize(static_cast<std::size_t>(n_max));
    bool enough_rounds = history.size() > static_cast<std::size_t>(cfg.stable_rounds);
    report.stable_all = enough_rounds;
    for (int n = 1; n <= n_max; ++n) {
        LengthStat st;
        st.n = n;
        st.count = history.back()[static_cast<std::size_t>(n - 1)];
        st.stable = enough_rounds;
        if (enough_rounds) {
            for (std::size_t k = history.size() - static_cast<std::size_t>(cfg.stable_rounds);
                 k < history.size(); ++k)
                if (history[k][static_cast<std::size_t>(n - 1)] !=
                    history[k - 1][static_cast<std::size_t>(n - 1)])
                    st.stable = false;
        }
        report.stable_all = report.stable_all && st.stable;
        report.lengths[static_cast<std::size_t>(n - 1)] = st;
    }

    result.table = complexity_table(ls);
    return result;
}

LanguageTable complexity_table(const LanguageSet& ls) {
    if (ls.levels.empty()) throw std::invalid_argument("empty language set");
    LanguageTable t;
    t.n_max = ls.n_max;
    t.p.resize(static_cast<std::size_t>(ls.n_max) + 1);
    t.p[0] = 1;
    for (int n = 1; n <= ls.n_max; ++n) t.p[static_cast<std::size_t>(n)] = ls.count(n);
    return t;
}

std::vector<SpecialStats> classify_special(const LanguageSet& ls, int n) {
    if (n < 0 || n + 2 > ls.n_max)
        throw InsufficientDepth("classification at length " + std::to_string(n) +
                                " needs stored lengths up to " + std::to_string(n + 2));
    std::vector<std::string> words(ls.levels[static_cast<std::size_t>(n)].begin(),
                                   ls.levels[static_cast<std::size_t>(n)].end());
    std::sort(words.begin(), words.end());
    std::vector<SpecialStats> out;
    out.reserve(words.size());
    for (const auto& w : words) {
        SpecialStats st;
        st.word = BilliardWord(ls.d, w);
        for (int u = 0; u < ls.d; ++u) {
            std::string uw = static_cast<char>('0' + u) + w;
            if (ls.contains(uw)) ++st.m_l;
            std::string wu = w + static_cast<char>('0' + u);
            if (ls.contains(wu)) ++st.m_r;
            for (int x = 0; x < ls.d; ++x) {
                std::string uwx = uw + static_cast<char>('0' + x);
                if (ls.contains(uwx)) ++st.m_b;
            }
        }
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<SpecialStats> bispecial_words(const LanguageSet& ls, int n) {
    auto all = classify_special(ls, n);
    std::vector<SpecialStats> out;
    for (auto& st : all)
        if (st.bispecial()) out.push_back(std::move(st));
    return out;
}

CassaigneReport cassaigne_check(const LanguageSet& ls, int n) {
    if (n < 0 || n + 2 > ls.n_max)
        throw InsufficientDepth("cassaigne check at n needs lengths up to n+2");
    CassaigneReport r;
    long long p0 = ls.count(n), p1 = ls.count(n + 1), p2 = ls.count(n + 2);
    r.lhs = p2 - 2 * p1 + p0;
    r.rhs = 0;
    for (const auto& st : bispecial_words(ls, n)) r.rhs += st.index();
    r.equal = r.lhs == r.rhs;
    return r;
}

DirectionalResult directional_complexity(const DirectionQ& omega, const std::vector<PointQ>& starts,
                                         int n_max, long long horizon) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (starts.empty()) throw std::invalid_argument("need at least one start point");
    int d = omega.dim();
    DirectionalResult res;
    res.omega = omega;
    if (horizon <= 0) {
        // Rare factors live in thin phase cells; several multiples of the
        // expected count per window length are needed before unions settle.
        long long expected = (d == 2) ? n_max + 2
                                      : static_cast<long long>(n_max) * n_max + n_max + 2;
        horizon = 4 * (n_max + 1) * expected;
    }
    res.horizon = horizon;
    std::vector<std::vector<std::unordered_set<std::string>>> per_start;
    for (const auto& m : starts) {
        std::string code;
        try {
            code = trace_letters(m, omega, static_cast<int>(horizon));
        } catch (const TieAtEdge&) {
            res.generic = false;
            ++res.samples_skipped;
            continue;
        }
        std::vector<std::unordered_set<std::string>> factors(static_cast<std::size_t>(n_max) + 1);
        for (int n = 1; n <= n_max; ++n)
            for (std::size_t pos = 0; pos + static_cast<std::size_t>(n) <= code.size(); ++pos)
                factors[static_cast<std::size_t>(n)].insert(code.substr(pos, static_cast<std::size_t>(n)));
        per_start.push_back(std::move(factors));
        ++res.samples_used;
    }
    res.p_dir.assign(static_cast<std::size_t>(n_max) + 1, 0);
    res.p_dir[0] = 1;
    if (per_start.empty()) return res;
    for (int n = 1; n <= n_max; ++n) {
        std::unordered_set<std::string> all;
        for (const auto& f : per_start)
            all.insert(f[static_cast<std::size_t>(n)].begin(), f[static_cast<std::size_t>(n)].end());
        for (const auto& f : per_start)
            if (f[static_cast<std::size_t>(n)].size() != all.size()) res.point_independent = false;
        res.p_dir[static_cast<std::size_t>(n)] = static_cast<long long>(all.size());
    }
    return res;
}

std::vector<PointQ> default_directional_starts(int d, int count, std::uint64_t seed) {
    constexpr long long P = 9973;  // prime denominator, avoids grid resonances
    std::vector<PointQ> pts;
    std::uint64_t h = splitmix64(seed);
    for (int k = 0; k < count; ++k) {
        PointQ m;
        m.c.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            h = splitmix64(h);
            m.c.emplace_back(1 + static_cast<long long>(h % (P - 1)), P);
        }
        pts.push_back(std::move(m));
    }
    return pts;
}

FitResult loglog_fit(const std::vector<std::pair<int, long long>>& points) {
    if (points.size() < 2) throw std::invalid_argument("fit needs at least two points");
    std::vector<double> xs, ys;
    for (const auto& [n, v] : points) {
        if (n < 1 || v <= 0) throw NonPositiveValue("fit values must be positive");
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(v)));
    }
    double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (r.intercept + r.slope * xs[i]);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / n);
    return r;
}

FitResult exponent_fit(const LanguageTable& table, int n_lo, int n_hi, FitTarget target) {
    if (n_lo < 1 || n_hi <= n_lo) throw std::invalid_argument("bad fit window");
    std::vector<std::pair<int, long long>> points;
    for (int n = n_lo; n <= n_hi; ++n) {
        long long v = 0;
        switch (target) {
            case FitTarget::P:
                if (!table.has(n)) throw NonPositiveValue("p(n) missing in fit window");
                v = table.p[static_cast<std::size_t>(n)];
                break;
            case FitTarget::S:
                if (!table.has(n + 1)) throw NonPositiveValue("s(n) missing in fit window");
                v = table.s(n);
                break;
            case FitTarget::S2:
                if (!table.has(n + 2)) throw NonPositiveValue("s2(n) missing in fit window");
                v = table.s2(n);
                break;
        }
        if (v <= 0) throw NonPositiveValue("fit target must be positive on the window");
        points.emplace_back(n, v);
    }
    return loglog_fit(points);
}

std::optional<DirectionQ> witness_direction(const std::string& word, int d, const PointQ& m) {
    if (word.empty() || m.dim() != d) return std::nullopt;
    int n = static_cast<int>(word.size());
    // Crossing times in u-space (u_a = 1/omega_a > 0) are c*u_a with c the
    // distance from m_a to the crossed level; the word fixes the level order.
    std::vector<long long> used(static_cast<std::size_t>(d), 0);
    std::vector<Rational> coef(static_cast<std::size_t>(n));
    std::vector<int> axis_of(static_cast<std::size_t>(n));
    std::vector<BigInt> base(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) base[static_cast<std::size_t>(a)] = floor_rat(m[a]) + 1;
    for (int k = 0; k < n; ++k) {
        int a = word[static_cast<std::size_t>(k)] - '0';
        if (a < 0 || a >= d) return std::nullopt;
        Rational level(base[static_cast<std::size_t>(a)] + used[static_cast<std::size_t>(a)]);
        coef[static_cast<std::size_t>(k)] = level - m[a];
        axis_of[static_cast<std::size_t>(k)] = a;
        ++used[static_cast<std::size_t>(a)];
    }
    std::vector<LinearConstraint> cons;
    auto zero_row = [&] { return std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)); };
    for (int a = 0; a < d; ++a) {
        LinearConstraint c;  // -u_a < 0
        c.coeff = zero_row();
        c.coeff[static_cast<std::size_t>(a)] = -1;
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    for (int k = 0; k + 1 < n; ++k) {
        LinearConstraint c;  // c_k u_{a_k} - c_{k+1} u_{a_{k+1}} < 0
        c.coeff = zero_row();
        c.coeff[static_cast<std::size_t>(axis_of[static_cast<std::size_t>(k)])] +=
            coef[static_cast<std::size_t>(k)];
        c.coeff[static_cast<std::size_t>(axis_of[static_cast<std::size_t>(k + 1)])] -=
            coef[static_cast<std::size_t>(k + 1)];
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    // Each axis' next unused crossing must land after the final event.
    for (int a = 0; a < d; ++a) {
        Rational next_c =
            Rational(base[static_cast<std::size_t>(a)] + used[static_cast<std::size_t>(a)]) - m[a];
        LinearConstraint c;  // c_n u_{a_n} - next_c u_a < 0
        c.coeff = zero_row();
        c.coeff[static_cast<std::size_t>(axis_of[static_cast<std::size_t>(n - 1)])] +=
            coef[static_cast<std::size_t>(n - 1)];
        c.coeff[static_cast<std::size_t>(a)] -= next_c;
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    auto u = fourier_motzkin(d, std::move(cons));
    if (!u) return std::nullopt;
    std::vector<Rational> omega_rat;
    omega_rat.reserve(static_cast<std::size_t>(d));
    for (const auto& ua : *u) omega_rat.push_back(Rational(1) / ua);
    DirectionQ omega = DirectionQ::from_rationals(omega_rat);
    try {
        if (trace_letters(m, omega, n) != word) return std::nullopt;
    } catch (const TieAtEdge&) {
        return std::nullopt;
    }
    return omega;
}

}  // namespace hcb
