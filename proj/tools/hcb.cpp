// hcb: exact hypercube billiard words from the command line.
//
// Subcommands wrap the library operations one to one: trace, language,
// directional, diagonals, numtheory, arrangements, fit. Outputs are CSV (with
// a header row and '#'-prefixed config echo) or JSON; both embed the config
// and its content hash so a result file identifies the run that made it.
// Wall-clock timing goes to stderr, keeping payloads byte-identical across
// reruns with the same config and seed.
//
// Exit codes: 0 ok, 1 a requested check failed, 2 geometric degeneracy,
// 3 usage or bad input, 4 enumeration did not stabilize.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hcb/arrangements.hpp"
#include "hcb/diagonals.hpp"
#include "hcb/geometry.hpp"
#include "hcb/io.hpp"
#include "hcb/language.hpp"
#include "hcb/numtheory.hpp"

using json = nlohmann::ordered_json;
using namespace hcb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 3;
constexpr int kExitUnstable = 4;

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;  // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path,
                    "output file (relative paths resolve against $HCB_OUTPUT_DIR)");
}

std::string resolve_out_path(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    const char* base = std::getenv("HCB_OUTPUT_DIR");
    if (p.is_relative() && base && *base) p = std::filesystem::path(base) / p;
    return p.string();
}

void write_payload(const OutputOptions& opts, const std::string& payload) {
    std::string path = resolve_out_path(opts.out_path);
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << payload;
}

/// CSV payload: '#' config lines, a header row, then the rows.
std::string csv_payload(const json& config, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows,
                        const std::vector<std::string>& extra_comments = {}) {
    std::ostringstream out;
    std::string cfg = config.dump();
    out << "# config: " << cfg << "\n";
    out << "# config_hash: " << git_blob_sha1(cfg) << "\n";
    for (const auto& line : extra_comments) out << "# " << line << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << csv_field(header[i]);
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
    }
    return out.str();
}

std::string json_payload(const json& config, const json& results, const json& checks) {
    json doc;
    doc["config"] = config;
    doc["config_hash"] = git_blob_sha1(config.dump());
    doc["results"] = results;
    if (!checks.is_null()) doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~Stopwatch() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "# duration_ms=" << ms << "\n";
    }
};

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::vector<std::pair<int, int>> parse_schedule(const std::string& text) {
    std::vector<std::pair<int, int>> schedule;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("schedule entries are Q:D");
        schedule.emplace_back(std::stoi(token.substr(0, colon)),
                              std::stoi(token.substr(colon + 1)));
    }
    return schedule;
}

// ---- trace ----

struct TraceArgs {
    int d = 2;
    std::string m, omega;
    int n = 1;
    OutputOptions out;
};

int run_trace(const TraceArgs& a) {
    PointQ m = parse_point(a.m);
    DirectionQ omega = parse_direction(a.omega);
    if (m.dim() != a.d || omega.dim() != a.d)
        throw std::invalid_argument("vector length does not match --d");
    json config = {{"command", "trace"}, {"d", a.d}, {"m", a.m}, {"omega", a.omega}, {"n", a.n}};
    auto events = crossings(m, omega, a.n);  // TieAtEdge propagates to main()
    std::string word;
    for (const auto& e : events) word.push_back(static_cast<char>('0' + e.axis));
    if (a.out.format == "json") {
        json rows = json::array();
        for (const auto& e : events)
            rows.push_back({{"time", to_string(e.time)}, {"axis", e.axis}, {"level", e.level}});
        write_payload(a.out, json_payload(config, {{"word", word}, {"crossings", rows}}, nullptr));
    } else {
        std::vector<std::vector<std::string>> rows;
        int index = 1;
        for (const auto& e : events)
            rows.push_back({std::to_string(index++), to_string(e.time), std::to_string(e.axis),
                            std::to_string(e.level)});
        write_payload(a.out, csv_payload(config, {"index", "time", "axis", "level"}, rows,
                                         {"word: " + word}));
    }
    return kExitOk;
}

// ---- language ----

struct LanguageArgs {
    int d = 2;
    int n = 4;
    std::string schedule;
    int stable_rounds = 2;
    bool lp = false;
    int lp_max_len = 12;
    int lp_grid = 5;
    std::uint64_t seed = 1;
    int workers = 0;
    OutputOptions out;
};

int run_language(const LanguageArgs& a) {
    EnumerationConfig cfg;
    if (!a.schedule.empty())
        cfg.schedule = parse_schedule(a.schedule);
    else
        cfg = EnumerationConfig::auto_for(a.d, a.n);
    cfg.stable_rounds = a.stable_rounds;
    cfg.lp_refine = a.lp;
    cfg.lp_max_len = a.lp_max_len;
    cfg.lp_grid = a.lp_grid;
    cfg.seed = a.seed;
    cfg.workers = a.workers;

    json sched = json::array();
    for (auto [Q, D] : cfg.schedule) sched.push_back({{"Q", Q}, {"D", D}});
    json config = {{"command", "language"},
                   {"d", a.d},
                   {"n_max", a.n},
                   {"schedule", sched},
                   {"stable_rounds", cfg.stable_rounds},
                   {"lp_refine", cfg.lp_refine},
                   {"lp_max_len", cfg.lp_max_len},
                   {"lp_grid", cfg.lp_grid},
                   {"seed", cfg.seed},
                   {"workers", cfg.workers}};

    auto res = enumerate_language(a.d, a.n, cfg);
    const auto& t = res.table;

    // Per-length rows; special-word statistics where the depth allows.
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    bool checks_ok = true;
    json jchecks = json::array();
    for (int n = 1; n <= a.n; ++n) {
        std::string s_str, s2_str, nbis_str, sumi_str;
        if (n + 1 <= a.n) s_str = std::to_string(t.s(n));
        if (n + 2 <= a.n) s2_str = std::to_string(t.s2(n));
        if (n + 2 <= a.n) {
            long long sum = 0, count = 0;
            for (const auto& st : bispecial_words(res.lang, n)) {
                sum += st.index();
                ++count;
            }
            nbis_str = std::to_string(count);
            sumi_str = std::to_string(sum);
            bool n_stable = res.report.stable_at(n) && res.report.stable_at(n + 1) &&
                            res.report.stable_at(n + 2);
            auto cas = cassaigne_check(res.lang, n);
            jchecks.push_back({{"n", n},
                               {"cassaigne_lhs", cas.lhs},
                               {"cassaigne_rhs", cas.rhs},
                               {"equal", cas.equal},
                               {"stable", n_stable}});
            if (n_stable && !cas.equal) checks_ok = false;
        }
        bool stable = res.report.stable_at(n);
        rows.push_back({std::to_string(n), std::to_string(t.p[static_cast<std::size_t>(n)]), s_str,
                        s2_str, nbis_str, sumi_str, stable ? "1" : "0"});
        json r = {{"n", n}, {"p", t.p[static_cast<std::size_t>(n)]}};
        if (!s_str.empty()) r["s"] = t.s(n);
        if (!s2_str.empty()) r["s2"] = t.s2(n);
        if (!nbis_str.empty()) {
            r["n_bispecial"] = std::stoll(nbis_str);
            r["sum_i"] = std::stoll(sumi_str);
        }
        r["stable"] = stable;
        jrows.push_back(std::move(r));
    }

    json stability = {{"rounds_run", res.report.rounds_run},
                      {"stable_all", res.report.stable_all},
                      {"samples", res.report.samples},
                      {"ties_retried", res.report.ties_retried},
                      {"samples_skipped", res.report.samples_skipped},
                      {"lp_candidates_tested", res.report.lp_candidates_tested},
                      {"lp_words_added", res.report.lp_words_added}};

    if (a.out.format == "json") {
        write_payload(a.out, json_payload(config, {{"table", jrows}, {"stability", stability}},
                                          {{"cassaigne", jchecks}, {"all_equal", checks_ok}}));
    } else {
        write_payload(a.out,
                      csv_payload(config, {"n", "p", "s", "s2", "n_bispecial", "sum_i", "stable"},
                                  rows,
                                  {"stable_all: " + std::string(res.report.stable_all ? "1" : "0")}));
    }
    if (!res.report.stable_all) return kExitUnstable;
    return checks_ok ? kExitOk : kExitCheckFailed;
}

// ---- directional ----

struct DirectionalArgs {
    int d = 2;
    std::string omega;
    int n = 10;
    int samples = 8;
    long long horizon = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> starts;
    OutputOptions out;
};

int run_directional(const DirectionalArgs& a) {
    DirectionQ omega = parse_direction(a.omega);
    if (omega.dim() != a.d) throw std::invalid_argument("omega length does not match --d");
    std::vector<PointQ> starts;
    for (const auto& s : a.starts) {
        PointQ m = parse_point(s);
        if (m.dim() != a.d) throw std::invalid_argument("start point length does not match --d");
        starts.push_back(std::move(m));
    }
    if (starts.empty()) starts = default_directional_starts(a.d, a.samples, a.seed);
    json config = {{"command", "directional"},
                   {"d", a.d},
                   {"omega", a.omega},
                   {"n_max", a.n},
                   {"samples", static_cast<int>(starts.size())},
                   {"horizon", a.horizon},
                   {"seed", a.seed}};
    auto res = directional_complexity(omega, starts, a.n, a.horizon);
    if (res.samples_used == 0) {
        std::cerr << "every start point hit an edge\n";
        return kExitDegenerate;
    }

    if (a.out.format == "json") {
        json rows = json::array();
        for (int n = 1; n <= a.n; ++n)
            rows.push_back({{"n", n}, {"p_dir", res.p_dir[static_cast<std::size_t>(n)]}});
        json results = {{"table", rows},
                        {"horizon", res.horizon},
                        {"generic", res.generic},
                        {"point_independent", res.point_independent},
                        {"samples_used", res.samples_used},
                        {"samples_skipped", res.samples_skipped}};
        write_payload(a.out, json_payload(config, results, nullptr));
    } else {
        std::vector<std::vector<std::string>> rows;
        for (int n = 1; n <= a.n; ++n)
            rows.push_back(
                {std::to_string(n), std::to_string(res.p_dir[static_cast<std::size_t>(n)])});
        write_payload(a.out, csv_payload(config, {"n", "p_dir"}, rows,
                                         {"generic: " + std::string(res.generic ? "1" : "0"),
                                          "horizon: " + std::to_string(res.horizon)}));
    }
    return kExitOk;
}

// ---- diagonals ----

struct DiagonalArgs {
    int d = 2;
    std::string n_range = "2";
    bool with_words = false;
    bool budget = false;
    bool projection = false;
    int grid = 6;
    std::uint64_t seed = 1;
    OutputOptions out;
};

int run_diagonals(const DiagonalArgs& a) {
    auto [n_lo, n_hi] = parse_range(a.n_range);
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad --n range");
    json config = {{"command", "diagonals"}, {"d", a.d},           {"n", a.n_range},
                   {"words", a.with_words},  {"budget", a.budget}, {"projection", a.projection},
                   {"grid", a.grid},         {"seed", a.seed}};
    WordSampleConfig wcfg;
    wcfg.grid = a.grid;
    wcfg.seed = a.seed;

    auto variant_name = [](EqVariant v) {
        return v == EqVariant::F ? "F" : (v == EqVariant::G ? "G" : "H");
    };

    json results;
    json checks;
    bool checks_ok = true;
    std::vector<std::vector<std::string>> summary_rows;

    json per_n = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        auto diags = enumerate_diagonals(n, a.d);
        auto count = count_diagonals(n, a.d);
        summary_rows.push_back(
            {std::to_string(n), std::to_string(count.count), std::to_string(count.ratio)});
        json entry = {{"n", n}, {"count", count.count}, {"ratio", count.ratio}};
        if (a.with_words || n_hi == n_lo) {
            json list = json::array();
            for (const auto& g : diags) {
                json item;
                json a_fixed = json::array();
                for (auto [axis, level] : g.A.fixed)
                    a_fixed.push_back({{"axis", axis}, {"level", level}});
                json b_fixed = json::array();
                for (auto [axis, level] : g.B.fixed)
                    b_fixed.push_back({{"axis", axis}, {"level", level}});
                json b_cells = json::array();
                for (auto [axis, cell] : g.B.free_cell)
                    b_cells.push_back({{"axis", axis}, {"cell", cell}});
                item["a_fixed"] = a_fixed;
                item["b_fixed"] = b_fixed;
                item["b_cells"] = b_cells;
                item["kind"] = g.kind == DiagonalKind::Type1 ? "type1" : "type2";
                item["equation"] = variant_name(diagonal_equation(g.A, g.B).variant);
                if (a.with_words) {
                    try {
                        auto words = words_in_diagonal(g, wcfg);
                        item["word_count"] = words.size();
                        json w = json::array();
                        for (const auto& word : words) w.push_back(word);
                        item["words"] = w;
                    } catch (const DegenerateDiagonal&) {
                        item["word_count"] = 0;
                        item["degenerate"] = true;
                    }
                }
                list.push_back(std::move(item));
            }
            entry["diagonals"] = std::move(list);
        }
        per_n.push_back(std::move(entry));
    }
    results["per_n"] = std::move(per_n);

    if (a.budget) {
        int depth = n_hi;
        EnumerationConfig lcfg = EnumerationConfig::auto_for(a.d, depth);
        auto lang = enumerate_language(a.d, depth, lcfg);
        json jb = json::array();
        for (int n = std::max(2, n_lo); n <= n_hi; ++n) {
            auto b = bispecial_diagonal_budget(n, a.d, lang.lang, wcfg);
            jb.push_back({{"n", n},
                          {"distinct_words", b.distinct_words},
                          {"bispecial_count", b.bispecial_count},
                          {"index_sum", b.index_sum},
                          {"lower_ok", b.lower_ok},
                          {"upper_ok", b.upper_ok}});
            if (!b.lower_ok || !b.upper_ok) checks_ok = false;
        }
        checks["budget"] = std::move(jb);
        checks["language_stable"] = lang.report.stable_all;
    }
    if (a.projection) {
        if (a.d < 3) throw std::invalid_argument("projection check needs --d >= 3");
        int lower_depth = std::max(1, n_hi - 2);
        EnumerationConfig lcfg = EnumerationConfig::auto_for(a.d - 1, lower_depth);
        auto lower = enumerate_language(a.d - 1, lower_depth, lcfg);
        json jp = json::array();
        for (int n = std::max(2, n_lo); n <= n_hi; ++n) {
            auto rep = projection_surjectivity_check(n, a.d, lower.lang, wcfg);
            json cov = json::array();
            for (const auto& c : rep.coverage)
                cov.push_back({{"len", c.len},
                               {"language_words", c.language_words},
                               {"covered", c.covered},
                               {"full", c.full}});
            jp.push_back({{"n", n},
                          {"coverage", cov},
                          {"max_full_len", rep.max_full_len},
                          {"projections_inside_lower", rep.projections_inside_lower}});
            if (!rep.projections_inside_lower) checks_ok = false;
        }
        checks["projection"] = std::move(jp);
    }

    if (a.out.format == "json") {
        write_payload(a.out, json_payload(config, results, checks.is_null() ? json() : checks));
    } else {
        write_payload(a.out, csv_payload(config, {"n", "count", "ratio"}, summary_rows));
    }
    return checks_ok ? kExitOk : kExitCheckFailed;
}

// ---- numtheory ----

int run_numtheory_ratio(const std::string& n_range, int p, const OutputOptions& out) {
    auto [n_lo, n_hi] = parse_range(n_range);
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad --n range");
    json config = {{"command", "numtheory ratio"}, {"n", n_range}, {"p", p}};
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (long long n = n_lo; n <= n_hi; ++n) {
        auto r = partial_sum_ratio(n, p);
        rows.push_back({std::to_string(n), std::to_string(p), r.sum.str(), to_string(r.ratio),
                        std::to_string(r.approx)});
        jrows.push_back({{"n", n},
                         {"p", p},
                         {"sum", r.sum.str()},
                         {"ratio_exact", to_string(r.ratio)},
                         {"ratio", r.approx}});
    }
    if (out.format == "json") {
        write_payload(out, json_payload(config, {{"rows", jrows}}, nullptr));
    } else {
        write_payload(out, csv_payload(config, {"n", "p", "sum", "ratio_exact", "ratio"}, rows));
    }
    return kExitOk;
}

int run_numtheory_check(long long n_max, int p_max, long long dual_max, const OutputOptions& out) {
    json config = {{"command", "numtheory check"},
                   {"n_max", n_max},
                   {"p_max", p_max},
                   {"dual_max", dual_max}};
    auto table = build_sieve(n_max);
    long long identity_failures = 0;
    for (long long n = 1; n <= n_max; ++n) {
        auto rep = mobius_identity_check(table, n);
        if (!rep.divisor_sum_ok || !rep.totient_ok) ++identity_failures;
    }
    long long dual_failures = 0;
    for (long long l = 1; l <= dual_max; ++l)
        for (int p = 0; p <= p_max; ++p)
            if (coprime_power_sum_scan(l, p) != coprime_power_sum_mobius(l, p)) ++dual_failures;
    bool ok = identity_failures == 0 && dual_failures == 0;
    json checks = {{"identity_failures", identity_failures},
                   {"dual_route_failures", dual_failures},
                   {"ok", ok}};
    if (out.format == "json") {
        write_payload(out, json_payload(config, json::object(), checks));
    } else {
        write_payload(out, csv_payload(config, {"identity_failures", "dual_route_failures", "ok"},
                                       {{std::to_string(identity_failures),
                                         std::to_string(dual_failures), ok ? "1" : "0"}}));
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int run_numtheory_sieve(long long n, const OutputOptions& out) {
    json config = {{"command", "numtheory sieve"}, {"n", n}};
    auto table = build_sieve(n);
    if (out.format == "json") {
        json rows = json::array();
        for (long long i = 1; i <= n; ++i)
            rows.push_back({{"n", i},
                            {"phi", table.phi[static_cast<std::size_t>(i)]},
                            {"mu", table.mu[static_cast<std::size_t>(i)]}});
        write_payload(out, json_payload(config, {{"table", rows}}, nullptr));
    } else {
        std::vector<std::vector<std::string>> rows;
        for (long long i = 1; i <= n; ++i)
            rows.push_back({std::to_string(i),
                            std::to_string(table.phi[static_cast<std::size_t>(i)]),
                            std::to_string(table.mu[static_cast<std::size_t>(i)])});
        write_payload(out, csv_payload(config, {"n", "phi", "mu"}, rows));
    }
    return kExitOk;
}

// ---- arrangements ----

int run_arrangements_euler(int d, const OutputOptions& out) {
    json config = {{"command", "arrangements euler"}, {"d", d}};
    auto rep = euler_check_hypercube(d);
    if (out.format == "json") {
        json results = {{"lhs", rep.lhs.str()}, {"rhs", rep.rhs.str()}, {"equal", rep.equal}};
        write_payload(out, json_payload(config, results, nullptr));
    } else {
        write_payload(out, csv_payload(config, {"lhs", "rhs", "verdict"},
                                       {{rep.lhs.str(), rep.rhs.str(),
                                         rep.equal ? "PASS" : "FAIL"}}));
    }
    std::cerr << rep.lhs.str() << " == " << rep.rhs.str() << " "
              << (rep.equal ? "PASS" : "FAIL") << "\n";
    return rep.equal ? kExitOk : kExitCheckFailed;
}

std::vector<Line2D> read_lines_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open lines file: " + path);
    std::vector<Line2D> lines;
    std::string row;
    while (std::getline(f, row)) {
        if (row.empty() || row[0] == '#') continue;
        for (char& c : row)
            if (c == ',') c = ' ';
        std::istringstream in(row);
        std::string a, b, c;
        if (!(in >> a >> b >> c)) throw std::invalid_argument("lines file rows are: a b c");
        lines.push_back(Line2D::make(parse_rational(a), parse_rational(b), parse_rational(c)));
    }
    return lines;
}

int run_arrangements_regions(const std::string& file, const OutputOptions& out) {
    json config = {{"command", "arrangements regions"}, {"lines", file}};
    auto lines = read_lines_file(file);
    long long regions = count_regions_2d(lines);
    if (out.format == "json") {
        json results = {{"lines", lines.size()}, {"regions", regions}};
        write_payload(out, json_payload(config, results, nullptr));
    } else {
        write_payload(out, csv_payload(config, {"lines", "regions"},
                                       {{std::to_string(lines.size()), std::to_string(regions)}}));
    }
    return kExitOk;
}

int run_arrangements_growth(int n_max, int trials, std::uint64_t seed, const OutputOptions& out) {
    json config = {{"command", "arrangements growth"},
                   {"n_max", n_max},
                   {"trials", trials},
                   {"seed", seed}};
    auto rep = region_growth_check(n_max, trials, seed);
    if (out.format == "json") {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back(
                {{"trial", r.trial}, {"n", r.n}, {"regions", r.regions}, {"ratio", r.ratio}});
        write_payload(out,
                      json_payload(config, {{"rows", rows}, {"max_ratio", rep.max_ratio}}, nullptr));
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : rep.rows)
            rows.push_back({std::to_string(r.trial), std::to_string(r.n),
                            std::to_string(r.regions), std::to_string(r.ratio)});
        write_payload(out, csv_payload(config, {"trial", "n", "regions", "ratio"}, rows,
                                       {"max_ratio: " + std::to_string(rep.max_ratio)}));
    }
    return kExitOk;
}

// ---- fit ----

struct FitArgs {
    std::string input;
    std::string target = "p";
    std::string range;
    OutputOptions out;
};

int run_fit(const FitArgs& a) {
    auto [lo, hi] = parse_range(a.range);
    json config = {{"command", "fit"}, {"input", a.input}, {"target", a.target},
                   {"range", a.range}};
    std::ifstream f(a.input);
    if (!f) throw std::invalid_argument("cannot open input: " + a.input);
    std::string row;
    std::vector<std::string> header;
    std::map<int, long long> values;
    int n_col = -1, v_col = -1;
    while (std::getline(f, row)) {
        if (row.empty() || row[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream in(row);
        std::string tok;
        while (std::getline(in, tok, ',')) fields.push_back(tok);
        if (header.empty()) {
            header = fields;
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] == "n") n_col = static_cast<int>(i);
                if (header[i] == a.target) v_col = static_cast<int>(i);
            }
            if (n_col < 0 || v_col < 0)
                throw std::invalid_argument("input is missing column 'n' or '" + a.target + "'");
            continue;
        }
        if (static_cast<int>(fields.size()) <= std::max(n_col, v_col)) continue;
        const std::string& v = fields[static_cast<std::size_t>(v_col)];
        if (v.empty()) continue;
        values[std::stoi(fields[static_cast<std::size_t>(n_col)])] = std::stoll(v);
    }
    std::vector<std::pair<int, long long>> points;
    for (int n = lo; n <= hi; ++n) {
        auto it = values.find(n);
        if (it == values.end()) throw NonPositiveValue("missing value at n=" + std::to_string(n));
        points.emplace_back(n, it->second);
    }
    auto fit = loglog_fit(points);
    if (a.out.format == "json") {
        json results = {{"slope", fit.slope},
                        {"intercept", fit.intercept},
                        {"residual", fit.residual},
                        {"points", points.size()}};
        write_payload(a.out, json_payload(config, results, nullptr));
    } else {
        write_payload(a.out,
                      csv_payload(config, {"slope", "intercept", "residual", "points"},
                                  {{std::to_string(fit.slope), std::to_string(fit.intercept),
                                    std::to_string(fit.residual), std::to_string(points.size())}}));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hypercube billiard words: tracing, language complexity, "
                 "generalized diagonals, and the supporting number theory"};
    app.require_subcommand(1);

    TraceArgs trace_args;
    auto* cmd_trace = app.add_subcommand("trace", "code one trajectory and its crossings");
    cmd_trace->add_option("--d", trace_args.d, "dimension")->required();
    cmd_trace->add_option("--m", trace_args.m, "start point, e.g. 0,1/3")->required();
    cmd_trace->add_option("--omega", trace_args.omega, "direction, e.g. 2,1")->required();
    cmd_trace->add_option("--n", trace_args.n, "letters to trace")->required();
    add_output_options(cmd_trace, trace_args.out);

    LanguageArgs lang_args;
    auto* cmd_lang =
        app.add_subcommand("language", "enumerate the billiard language and its table");
    cmd_lang->add_option("--d", lang_args.d, "dimension")->required();
    cmd_lang->add_option("--n", lang_args.n, "maximum word length")->required();
    cmd_lang->add_option("--schedule", lang_args.schedule, "refinement rounds Q:D,Q:D,...");
    cmd_lang->add_option("--rounds", lang_args.stable_rounds,
                         "consecutive unchanged rounds required");
    cmd_lang->add_flag("--lp", lang_args.lp, "witness-search refinement for unseen extensions");
    cmd_lang->add_option("--lp-max-len", lang_args.lp_max_len,
                         "longest length the witness search covers");
    cmd_lang->add_option("--lp-grid", lang_args.lp_grid,
                         "start grid denominator for the witness search");
    cmd_lang->add_option("--seed", lang_args.seed, "retry/PRNG seed");
    cmd_lang->add_option("--workers", lang_args.workers, "worker threads (0 = all cores)");
    add_output_options(cmd_lang, lang_args.out);

    DirectionalArgs dir_args;
    auto* cmd_dir = app.add_subcommand("directional", "factor counts at a fixed direction");
    cmd_dir->add_option("--d", dir_args.d, "dimension")->required();
    cmd_dir->add_option("--omega", dir_args.omega, "direction")->required();
    cmd_dir->add_option("--n", dir_args.n, "maximum factor length")->required();
    cmd_dir->add_option("--samples", dir_args.samples, "number of start points");
    cmd_dir->add_option("--horizon", dir_args.horizon, "letters per orbit (0 = auto guard)");
    cmd_dir->add_option("--seed", dir_args.seed, "start point seed");
    cmd_dir->add_option("--m", dir_args.starts, "explicit start point (repeatable)");
    add_output_options(cmd_dir, dir_args.out);

    DiagonalArgs diag_args;
    auto* cmd_diag = app.add_subcommand("diagonals", "generalized diagonals at fixed lengths");
    cmd_diag->add_option("--d", diag_args.d, "dimension")->required();
    cmd_diag->add_option("--n", diag_args.n_range, "length or range lo:hi")->required();
    cmd_diag->add_flag("--words", diag_args.with_words, "sample the word set of each diagonal");
    cmd_diag->add_flag("--budget", diag_args.budget, "check the bispecial index budget");
    cmd_diag->add_flag("--projection", diag_args.projection, "check projection surjectivity");
    cmd_diag->add_option("--grid", diag_args.grid, "segment sample grid");
    cmd_diag->add_option("--seed", diag_args.seed, "sampling seed");
    add_output_options(cmd_diag, diag_args.out);

    auto* cmd_nt = app.add_subcommand("numtheory", "totient/Moebius machinery");
    cmd_nt->require_subcommand(1);
    std::string nt_n = "1000";
    int nt_p = 1;
    OutputOptions nt_out;
    auto* nt_ratio =
        cmd_nt->add_subcommand("ratio", "coprime power-sum partial sums over n^{p+2}");
    nt_ratio->add_option("--n", nt_n, "summation bound, or a range lo:hi")->required();
    nt_ratio->add_option("--p", nt_p, "power")->required();
    add_output_options(nt_ratio, nt_out);
    long long ntc_n = 2000, ntc_dual = 2000;
    int ntc_pmax = 4;
    OutputOptions ntc_out;
    auto* nt_check =
        cmd_nt->add_subcommand("check", "divisor-sum identities and dual power sums");
    nt_check->add_option("--n", ntc_n, "identity bound");
    nt_check->add_option("--p-max", ntc_pmax, "largest power for the dual check");
    nt_check->add_option("--dual-n", ntc_dual, "dual-route bound");
    add_output_options(nt_check, ntc_out);
    long long nts_n = 100;
    OutputOptions nts_out;
    auto* nt_sieve = cmd_nt->add_subcommand("sieve", "emit phi and mu up to n");
    nt_sieve->add_option("--n", nts_n, "sieve bound")->required();
    add_output_options(nt_sieve, nts_out);

    auto* cmd_arr = app.add_subcommand("arrangements", "planar regions and the Euler identity");
    cmd_arr->require_subcommand(1);
    int arr_d = 3;
    OutputOptions arr_euler_out;
    auto* arr_euler =
        cmd_arr->add_subcommand("euler", "alternating face-count sum of the d-cube");
    arr_euler->add_option("--d", arr_d, "dimension")->required();
    add_output_options(arr_euler, arr_euler_out);
    std::string arr_file;
    OutputOptions arr_regions_out;
    auto* arr_regions = cmd_arr->add_subcommand("regions", "region count of a line family");
    arr_regions->add_option("--lines", arr_file, "file of lines: a b c per row")->required();
    add_output_options(arr_regions, arr_regions_out);
    int arr_n = 20, arr_trials = 5;
    std::uint64_t arr_seed = 1;
    OutputOptions arr_growth_out;
    auto* arr_growth =
        cmd_arr->add_subcommand("growth", "region/n^2 ratio series on random lines");
    arr_growth->add_option("--n", arr_n, "largest family size");
    arr_growth->add_option("--trials", arr_trials, "independent trials");
    arr_growth->add_option("--seed", arr_seed, "trial seed");
    add_output_options(arr_growth, arr_growth_out);

    FitArgs fit_args;
    auto* cmd_fit = app.add_subcommand("fit", "log-log slope of a table column");
    cmd_fit->add_option("--input", fit_args.input, "CSV produced by the language command")
        ->required();
    cmd_fit->add_option("--target", fit_args.target, "column: p, s, or s2")
        ->check(CLI::IsMember({"p", "s", "s2"}));
    cmd_fit->add_option("--range", fit_args.range, "fit window lo:hi")->required();
    add_output_options(cmd_fit, fit_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Stopwatch timer;
        if (*cmd_trace) return run_trace(trace_args);
        if (*cmd_lang) return run_language(lang_args);
        if (*cmd_dir) return run_directional(dir_args);
        if (*cmd_diag) return run_diagonals(diag_args);
        if (*nt_ratio) return run_numtheory_ratio(nt_n, nt_p, nt_out);
        if (*nt_check) return run_numtheory_check(ntc_n, ntc_pmax, ntc_dual, ntc_out);
        if (*nt_sieve) return run_numtheory_sieve(nts_n, nts_out);
        if (*arr_euler) return run_arrangements_euler(arr_d, arr_euler_out);
        if (*arr_regions) return run_arrangements_regions(arr_file, arr_regions_out);
        if (*arr_growth) return run_arrangements_growth(arr_n, arr_trials, arr_seed, arr_growth_out);
        if (*cmd_fit) return run_fit(fit_args);
        return kExitUsage;
    } catch (const TieAtEdge& e) {
        std::cerr << "degenerate trajectory: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateDiagonal& e) {
        std::cerr << "degenerate diagonal: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
