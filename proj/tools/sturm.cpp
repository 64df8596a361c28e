#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sturmian/cf.hpp"
#include "sturmian/complexity.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/jarnik.hpp"
#include "sturmian/serialize.hpp"
#include "sturmian/spectral.hpp"
#include "sturmian/words.hpp"

using namespace sturmian;

namespace {

struct Options {
    std::string slope = "fib:40";
    double alpha = 2.0;
    double c = 1.0;
    double t = 1.2;
    double r = -1.0; // < 0: use varrho(alpha, t)
    std::vector<double> r_grid;
    double beta = -1.0; // < 0: use alpha + 1
    double c1 = 1.0, c2 = 2.0;
    std::size_t samples = 200;
    std::size_t depth = 40;
    std::size_t budget = kDefaultSymbolBudget;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    std::string anchor = "x";

    std::string words_op = "levels";
    std::size_t length = 80;
    std::size_t profile_n = 200;
    std::string complexity_table = "repetitivity";
    std::string metric_probe = "psi";
    std::string dimension_probe = "box";
    std::size_t grid_size = 8;
    std::size_t rows = 0; // 0: derive from depth
};

ContinuedFraction parse_slope(const Options& o) {
    const std::string& s = o.slope;
    auto suffix_number = [&](std::size_t prefix_len, std::size_t fallback) -> std::size_t {
        if (s.size() == prefix_len) return fallback;
        if (s[prefix_len] != ':')
            throw std::invalid_argument("slope: expected ':' after '" + s.substr(0, prefix_len) + "'");
        const std::string num = s.substr(prefix_len + 1);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("slope: bad numeric suffix in '" + s + "'");
        return static_cast<std::size_t>(std::stoull(num));
    };
    if (s.rfind("fib", 0) == 0) return fibonacci_cf(suffix_number(3, o.depth));
    if (s.rfind("synth", 0) == 0) {
        if (s.size() > 5) throw std::invalid_argument("slope: 'synth' takes no suffix");
        return synthesize_alpha_cf(o.alpha, o.c, o.depth, Int(1) << 100);
    }
    if (s.rfind("random", 0) == 0) {
        const std::size_t max_entry = suffix_number(6, 10);
        if (max_entry < 1) throw std::invalid_argument("slope: random entry bound must be >= 1");
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(static_cast<unsigned long>(derive_seed(o.seed, 0)));
        std::vector<Int> entries;
        entries.reserve(o.depth);
        for (std::size_t i = 0; i < o.depth; ++i)
            entries.push_back(1 + rng.get_z_range(Int(static_cast<unsigned long>(max_entry))));
        Provenance prov;
        prov.kind = "random";
        prov.seed = o.seed;
        return make_cf(std::move(entries), prov);
    }
    // explicit comma-separated entries
    std::vector<Int> entries;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("slope: bad entry '" + tok + "'");
        entries.push_back(from_decimal(tok));
        pos = comma + 1;
    }
    return make_cf(std::move(entries));
}

ContinuedFraction normalized_form(const ContinuedFraction& cf, bool& complemented) {
    if (is_normalized(cf)) {
        complemented = false;
        return cf;
    }
    complemented = true;
    return complement_cf(cf);
}

std::map<std::string, std::string> resolved_config(const Options& o, const std::string& sub) {
    std::map<std::string, std::string> m;
    m["config.subcommand"] = sub;
    m["config.slope"] = o.slope;
    m["config.alpha"] = fmt_double(o.alpha);
    m["config.c"] = fmt_double(o.c);
    m["config.t"] = fmt_double(o.t);
    m["config.depth"] = std::to_string(o.depth);
    m["config.budget"] = std::to_string(o.budget);
    m["config.seed"] = std::to_string(o.seed);
    m["config.format"] = o.format;
    m["config.anchor"] = o.anchor;
    return m;
}

void emit(Table table, const Options& o, const ContinuedFraction* cf, const std::string& sub) {
    for (const auto& [k, v] : resolved_config(o, sub)) table.meta[k] = v;
    if (cf) embed_provenance(table, *cf);
    const std::string payload = (o.format == "json") ? to_json_string(table) : to_csv(table);
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + o.out);
        f << payload;
    }
}

// ---------------------------------------------------------------------------
// verify battery

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::size_t max_certifiable_n(const ContinuedFraction& cf, std::size_t cap, std::size_t budget,
                              bool gap) {
    const Int b(static_cast<unsigned long>(budget));
    for (std::size_t n = cap; n >= 1; --n) {
        try {
            const Int len = gap ? gap_certificate_length(cf, Int(static_cast<unsigned long>(n)))
                                : slice_certificate_length(cf, Int(static_cast<unsigned long>(n)));
            if (len <= b) return n;
        } catch (const InsufficientDepth&) {
        }
    }
    return 0;
}

std::vector<CheckResult> run_verify(const ContinuedFraction& cf, const Options& o) {
    std::vector<CheckResult> res;
    const ConvergentTable tab = convergents(cf);

    {
        bool ok = true;
        std::string why = "depth " + std::to_string(cf.depth());
        for (std::size_t k = 2; k <= tab.max_index() && ok; ++k) {
            if (tab.q[k] != cf.entries[k - 1] * tab.q[k - 1] + tab.q[k - 2] ||
                tab.p[k] != cf.entries[k - 1] * tab.p[k - 1] + tab.p[k - 2]) {
                ok = false;
                why = "recursion breaks at index " + std::to_string(k);
            }
        }
        for (std::size_t k = 1; k <= tab.max_index() && ok; ++k) {
            Int g;
            mpz_gcd(g.get_mpz_t(), tab.p[k].get_mpz_t(), tab.q[k].get_mpz_t());
            if (g != 1) {
                ok = false;
                why = "numerator and denominator share a factor at index " + std::to_string(k);
            }
        }
        res.push_back({"convergent-recursion-and-coprimality", ok, why});
    }

    {
        bool ok = true;
        std::string why;
        try {
            for (std::size_t l = 0; l + 2 <= cf.depth() && ok; ++l) {
                const ThetaEnclosure a = enclose_theta(cf, l);
                const ThetaEnclosure b = enclose_theta(cf, l + 1);
                if (!(a.lower < a.upper)) {
                    ok = false;
                    why = "degenerate bracket at level " + std::to_string(l);
                } else if (!(b.lower >= a.lower && b.upper <= a.upper)) {
                    ok = false;
                    why = "brackets not nested at level " + std::to_string(l);
                } else if (!(b.width() < a.width())) {
                    ok = false;
                    why = "bracket width fails to shrink at level " + std::to_string(l);
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        res.push_back({"theta-bracket-nesting", ok, why});
    }

    {
        CheckResult r{"denominator-shift-under-complement", true, ""};
        if (cf.depth() < 2) {
            r.detail = "skipped: needs at least two entries";
        } else {
            const ContinuedFraction comp = complement_cf(cf);
            const ConvergentTable tc = convergents(comp);
            std::size_t checked = 0;
            if (cf.entries[0] >= 2) {
                for (std::size_t n = 0; n <= tab.max_index() && n + 1 <= tc.max_index(); ++n, ++checked)
                    if (tab.q[n] != tc.q[n + 1]) {
                        r.pass = false;
                        r.detail = "offset identity fails at index " + std::to_string(n);
                        break;
                    }
            } else {
                for (std::size_t n = 0; n + 1 <= tab.max_index() && n <= tc.max_index(); ++n, ++checked)
                    if (tab.q[n + 1] != tc.q[n]) {
                        r.pass = false;
                        r.detail = "offset identity fails at index " + std::to_string(n);
                        break;
                    }
            }
            if (r.pass) r.detail = std::to_string(checked) + " indices";
        }
        res.push_back(std::move(r));
    }

    res.push_back({"denominator-golden-growth", gamma_growth_holds(cf), ""});

    {
        CheckResult r{"slice-counts-and-right-special", true, ""};
        const std::size_t nmax = max_certifiable_n(cf, 30, o.budget, false);
        if (nmax == 0) {
            r.detail = "skipped: no certifiable slice within depth/budget";
        } else {
            try {
                const FactorIndex idx =
                    certified_index(cf, Int(static_cast<unsigned long>(nmax)), o.budget);
                for (std::size_t n = 1; n <= nmax; ++n)
                    language_slice(idx, n, Completeness::Certified);
                r.detail = "n <= " + std::to_string(nmax);
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = e.what();
            }
        }
        res.push_back(std::move(r));
    }

    {
        CheckResult r{"gap-measurement-matches-closed-form", true, ""};
        const std::size_t nmax = max_certifiable_n(cf, 30, o.budget, true);
        if (nmax == 0) {
            r.detail = "skipped: no certifiable gap window within depth/budget";
        } else {
            try {
                const Int len = gap_certificate_length(cf, Int(static_cast<unsigned long>(nmax)));
                const FactorIndex idx(mechanical_prefix(cf, len.get_ui(), o.budget));
                for (std::size_t n = 1; n <= nmax; ++n) {
                    if (repetitive_bruteforce(idx, n) !=
                        repetitive_formula(cf, Int(static_cast<unsigned long>(n)))) {
                        r.pass = false;
                        r.detail = "mismatch at n = " + std::to_string(n);
                        break;
                    }
                }
                if (r.pass) r.detail = "n <= " + std::to_string(nmax);
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = e.what();
            }
        }
        res.push_back(std::move(r));
    }

    {
        CheckResult r{"branching-profile-closed-vs-measured", true, ""};
        try {
            bool complemented = false;
            const ContinuedFraction w = normalized_form(cf, complemented);
            std::size_t N = 200;
            std::vector<bool> cx, cy;
            for (;;) {
                try {
                    cx = branching_profile_closed(w, N, LimitWord::x);
                    cy = branching_profile_closed(w, N, LimitWord::y);
                    break;
                } catch (const InsufficientDepth&) {
                    if (N <= 20) throw;
                    N /= 4;
                }
            }
            const FactorIndex idx = certified_index(w, Int(static_cast<unsigned long>(N)), o.budget);
            const Word xw = x_prefix_of_length(w, N, o.budget);
            const Word yw = y_prefix_of_length(w, N, o.budget);
            const std::vector<bool> bx = branching_profile_bruteforce(idx, xw, N);
            const std::vector<bool> by = branching_profile_bruteforce(idx, yw, N);
            if (cx != bx || cy != by) {
                r.pass = false;
                r.detail = "profiles disagree within N = " + std::to_string(N);
            } else {
                r.detail = "N = " + std::to_string(N) + (complemented ? " (complemented)" : "");
            }
        } catch (const InsufficientDepth& e) {
            r.detail = std::string("skipped: ") + e.what();
        } catch (const BudgetExceeded& e) {
            r.detail = std::string("skipped: ") + e.what();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        res.push_back(std::move(r));
    }

    {
        CheckResult r{"spectral-sum-closed-vs-measured", true, ""};
        try {
            bool complemented = false;
            const ContinuedFraction w = normalized_form(cf, complemented);
            const WeightSpec weights{2.0};
            const SpectralPair pair{LimitWord::x, PairVariant::Adjacent, 1, 1};
            const std::size_t horizon = 1200;
            const MetricValue closed = d_spectral_closed(w, pair, weights, w.depth() - 1);
            const MetricValue ultra = d_ultra_closed(w, pair, weights);
            const auto [v, ww] = spectral_pair_words(w, pair, horizon, o.budget);
            const FactorIndex lang =
                certified_index(w, Int(static_cast<unsigned long>(horizon)), o.budget);
            const MetricValue brute = d_spectral_bruteforce(lang, v, ww, weights, horizon);
            const double diff = std::abs(closed.value() - brute.value());
            const double bound = closed.tail_bound() + brute.tail_bound();
            const double ultra_brute = d_ultra_log(v, ww, weights);
            if (ultra_brute != ultra.log_value) {
                r.pass = false;
                r.detail = "ultrametric lead disagrees";
            } else if (!(diff <= bound)) {
                r.pass = false;
                r.detail = "difference " + fmt_double(diff) + " exceeds bound " + fmt_double(bound);
            } else {
                r.detail = "difference " + fmt_double(diff) + " within " + fmt_double(bound) +
                           (complemented ? " (complemented)" : "");
            }
        } catch (const InsufficientDepth& e) {
            r.detail = std::string("skipped: ") + e.what();
        } catch (const BudgetExceeded& e) {
            r.detail = std::string("skipped: ") + e.what();
        } catch (const NormalizationRequired& e) {
            r.detail = std::string("skipped: ") + e.what();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        res.push_back(std::move(r));
    }

    {
        CheckResult r{"ultrametric-axioms", true, ""};
        try {
            const std::size_t len = 4000;
            const Word text = mechanical_prefix(cf, len, o.budget);
            const WeightSpec weights{o.t > 0 ? o.t : 1.2};
            std::size_t evaluated = 0, skipped = 0;
            bool ok = true;
            for (std::size_t k = 0; k < 60 && ok; ++k) {
                const std::size_t half = text.size() / 2;
                const std::size_t i1 = derive_seed(o.seed, 3 * k) % half;
                const std::size_t i2 = derive_seed(o.seed, 3 * k + 1) % half;
                const std::size_t i3 = derive_seed(o.seed, 3 * k + 2) % half;
                const Word u = text.substr(i1), v = text.substr(i2), w = text.substr(i3);
                try {
                    const double duv = d_ultra_log(u, v, weights);
                    const double dvw = d_ultra_log(v, w, weights);
                    const double duw = d_ultra_log(u, w, weights);
                    if (d_ultra_log(v, u, weights) != duv) {
                        ok = false;
                        r.detail = "symmetry fails";
                    } else if (duw > std::max(duv, dvw)) {
                        ok = false;
                        r.detail = "strong triangle inequality fails";
                    } else {
                        ++evaluated;
                    }
                } catch (const InsufficientDepth&) {
                    ++skipped; // a pair agreed on the whole overlap
                }
            }
            r.pass = ok;
            if (ok) r.detail = std::to_string(evaluated) + " triples (" + std::to_string(skipped) +
                               " skipped)";
        } catch (const std::exception& e) {
            r.detail = std::string("skipped: ") + e.what();
        }
        res.push_back(std::move(r));
    }

    {
        CheckResult r{"power-sum-endpoint-collapse", true, ""};
        std::size_t checked = 0;
        try {
            for (std::size_t m = 0; m + 2 <= cf.depth() && m < 6; ++m) {
                for (const auto& [rr, tt] : std::vector<std::pair<double, double>>{
                         {0.3, 0.75}, {1.0, 1.2}, {0.7, 2.0}}) {
                    const LogInterval phi = phi_log(cf, m, cf.entries[m + 1], rr, tt);
                    const double expect = tt * (rr - 1.0) * log_int(tab.q[m + 2]);
                    const double tol = 1e-12 * std::max(1.0, std::abs(expect));
                    if (!phi.exact || std::abs(phi.hi_log - expect) > tol) {
                        r.pass = false;
                        r.detail = "collapse fails at level " + std::to_string(m);
                    }
                    ++checked;
                }
            }
            if (r.pass) r.detail = std::to_string(checked) + " grid points";
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        res.push_back(std::move(r));
    }

    return res;
}

// ---------------------------------------------------------------------------
// subcommand dispatch

int cmd_verify(const Options& o) {
    const ContinuedFraction cf = parse_slope(o);
    const std::vector<CheckResult> checks = run_verify(cf, o);
    Table t;
    t.meta["report"] = "verify";
    t.columns = {"check", "status", "detail"};
    std::size_t failures = 0;
    for (const CheckResult& c : checks) {
        if (!c.pass) ++failures;
        t.rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.detail});
    }
    t.meta["checks_failed"] = std::to_string(failures);
    emit(std::move(t), o, &cf, "verify");
    return failures == 0 ? 0 : 1;
}

int cmd_classify(const Options& o) {
    const ContinuedFraction cf = parse_slope(o);
    Table t = tabulate(equivalence_report(cf, o.alpha, o.budget));
    emit(std::move(t), o, &cf, "classify");
    return 0;
}

int cmd_words(const Options& o) {
    const ContinuedFraction cf = parse_slope(o);
    Table t;
    if (o.words_op == "mechanical") {
        const Word w = mechanical_prefix(cf, o.length, o.budget);
        t.meta["report"] = "mechanical_prefix";
        t.columns = {"length", "word"};
        t.rows.push_back({std::to_string(w.size()), w});
    } else if (o.words_op == "branching") {
        bool complemented = false;
        const ContinuedFraction w = normalized_form(cf, complemented);
        const std::vector<bool> bx = branching_profile_closed(w, o.profile_n, LimitWord::x);
        const std::vector<bool> by = branching_profile_closed(w, o.profile_n, LimitWord::y);
        t.meta["report"] = "branching_profile";
        if (complemented) t.meta["normalized_via_complement"] = "true";
        t.columns = {"n", "x_hit", "y_hit"};
        for (std::size_t n = 1; n <= o.profile_n; ++n)
            t.rows.push_back({std::to_string(n), bx[n - 1] ? "1" : "0", by[n - 1] ? "1" : "0"});
    } else { // levels
        bool complemented = false;
        const ContinuedFraction w = normalized_form(cf, complemented);
        const auto levels = substitution_levels(w, w.depth() / 2, o.budget);
        t.meta["report"] = "substitution_levels";
        if (complemented) t.meta["normalized_via_complement"] = "true";
        t.columns = {"level", "x_len", "y_len", "x_prefix", "y_prefix"};
        auto preview = [](const std::optional<Word>& w) -> std::string {
            if (!w) return "";
            if (w->size() <= 64) return *w;
            return w->substr(0, 61) + "...";
        };
        for (const SubstitutionLevel& lv : levels)
            t.rows.push_back({std::to_string(lv.level), to_decimal(lv.x_len), to_decimal(lv.y_len),
                              preview(lv.x_prefix), preview(lv.y_prefix)});
    }
    emit(std::move(t), o, &cf, "words");
    return 0;
}

int cmd_complexity(const Options& o) {
    const ContinuedFraction cf = parse_slope(o);
    Table t;
    if (o.complexity_table == "repulsiveness") {
        t = tabulate(repulsiveness_table(cf, o.alpha, o.budget));
    } else if (o.complexity_table == "power") {
        t = tabulate(power_table(cf, o.alpha, o.budget));
    } else {
        const std::size_t brute = std::min<std::size_t>(o.budget, 1000000);
        t = tabulate(alpha_repetitive_estimate(cf, o.alpha, cf.depth() - 1, brute));
    }
    emit(std::move(t), o, &cf, "complexity");
    return 0;
}

int cmd_metric(const Options& o) {
    const ContinuedFraction cf = parse_slope(o);
    const WeightSpec weights{o.t};
    Table t;
    if (o.metric_probe == "finiteness") {
        t = tabulate(metric_finiteness_probe(cf, weights));
    } else {
        bool complemented = false;
        const ContinuedFraction w = normalized_form(cf, complemented);
        const LimitWord anchor = (o.anchor == "y") ? LimitWord::y : LimitWord::x;
        if (o.metric_probe == "regularity") {
            t = tabulate(regularity_probe(w, o.alpha, weights, o.r_grid, anchor));
        } else {
            const double r = (o.r < 0.0) ? varrho(o.alpha, o.t) : o.r;
            t = tabulate(psi_series(w, anchor, weights, r));
        }
        if (complemented) t.meta["normalized_via_complement"] = "true";
    }
    emit(std::move(t), o, &cf, "metric");
    return 0;
}

int cmd_dimension(const Options& o) {
    const double beta = (o.beta < 0.0) ? o.alpha + 1.0 : o.beta;
    if (o.dimension_probe == "box") {
        Table t = tabulate(box_dimension_estimate(o.alpha, o.c1, o.c2, o.samples, o.depth,
                                                  static_cast<unsigned long>(o.seed)));
        emit(std::move(t), o, nullptr, "dimension");
        return 0;
    }
    if (o.dimension_probe == "lebesgue") {
        Table t = tabulate(
            lebesgue_probe(o.alpha, o.samples, o.depth, static_cast<unsigned long>(o.seed)));
        emit(std::move(t), o, nullptr, "dimension");
        return 0;
    }
    const ContinuedFraction cf = parse_slope(o);
    if (o.dimension_probe == "exact") {
        Table t = tabulate(exact_beta_profile(cf, beta, o.grid_size));
        emit(std::move(t), o, &cf, "dimension");
        return 0;
    }
    const std::size_t rows = (o.rows == 0) ? cf.depth() - 1 : o.rows;
    Table t = tabulate(jarnik_hits(cf, beta, o.c, rows), beta, o.c);
    emit(std::move(t), o, &cf, "dimension");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exact continued-fraction, Sturmian-word and spectral-metric toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; command-line flags override");

    app.add_option("--slope", o.slope, "fib[:depth] | synth | random[:maxentry] | a1,a2,...")
        ->capture_default_str();
    app.add_option("--alpha", o.alpha, "growth exponent")->capture_default_str();
    app.add_option("--c", o.c, "growth constant / threshold constant")->capture_default_str();
    app.add_option("--t", o.t, "weight exponent of delta_n = n^-t")->capture_default_str();
    app.add_option("--r", o.r, "ratio exponent for metric probes (default varrho(alpha,t))");
    app.add_option("--r-grid", o.r_grid, "comma-separated exponent grid for the regularity probe")
        ->delimiter(',');
    app.add_option("--beta", o.beta, "approximation order (default alpha+1)");
    app.add_option("--c1", o.c1, "lower branching constant")->capture_default_str();
    app.add_option("--c2", o.c2, "upper branching constant")->capture_default_str();
    app.add_option("--samples", o.samples, "Monte Carlo sample count")->capture_default_str();
    app.add_option("--depth", o.depth, "expansion depth for generated slopes")
        ->capture_default_str();
    app.add_option("--budget", o.budget, "symbol budget for materialized words")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "master seed for randomized probes")->capture_default_str();
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--anchor", o.anchor, "limit word the metric probes follow")
        ->check(CLI::IsMember({"x", "y"}))
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "self-consistency battery for a slope");
    CLI::App* classify =
        app.add_subcommand("classify", "joint type/repetitivity/repulsiveness/power verdicts");
    CLI::App* words =
        app.add_subcommand("words", "substitution levels, mechanical prefixes, branching profiles");
    words->add_option("--op", o.words_op, "levels | mechanical | branching")
        ->check(CLI::IsMember({"levels", "mechanical", "branching"}))
        ->capture_default_str();
    words->add_option("--length", o.length, "mechanical prefix length")->capture_default_str();
    words->add_option("--profile-n", o.profile_n, "branching profile horizon")
        ->capture_default_str();
    CLI::App* complexity =
        app.add_subcommand("complexity", "repetitivity / repulsiveness / power tables");
    complexity->add_option("--table", o.complexity_table, "repetitivity | repulsiveness | power")
        ->check(CLI::IsMember({"repetitivity", "repulsiveness", "power"}))
        ->capture_default_str();
    CLI::App* metric = app.add_subcommand("metric", "spectral metric probes");
    metric->add_option("--probe", o.metric_probe, "psi | finiteness | regularity")
        ->check(CLI::IsMember({"psi", "finiteness", "regularity"}))
        ->capture_default_str();
    CLI::App* dimension = app.add_subcommand("dimension", "dimension and measure probes");
    dimension->add_option("--probe", o.dimension_probe, "box | lebesgue | exact | jarnik")
        ->check(CLI::IsMember({"box", "lebesgue", "exact", "jarnik"}))
        ->capture_default_str();
    dimension->add_option("--grid-size", o.grid_size, "threshold constants in the exact profile")
        ->capture_default_str();
    dimension->add_option("--rows", o.rows, "convergent rows to test (0: all available)")
        ->capture_default_str();

    for (CLI::App* sub : {verify, classify, words, complexity, metric, dimension})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(classify)) return cmd_classify(o);
        if (app.got_subcommand(words)) return cmd_words(o);
        if (app.got_subcommand(complexity)) return cmd_complexity(o);
        if (app.got_subcommand(metric)) return cmd_metric(o);
        if (app.got_subcommand(dimension)) return cmd_dimension(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
