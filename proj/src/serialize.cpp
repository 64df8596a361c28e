#include "sturmian/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sturmian {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

std::string fmt_opt_double(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string();
}

std::string join_flags(std::initializer_list<std::pair<bool, const char*>> flags) {
    std::string out;
    for (const auto& [on, name] : flags) {
        if (!on) continue;
        if (!out.empty()) out += ';';
        out += name;
    }
    return out;
}

void put_trend(Table& t, const TrendReport& trend) {
    t.meta["verdict"] = verdict_name(trend.verdict);
    t.meta["trend_slope"] = fmt_double(trend.slope);
    t.meta["window_min"] = fmt_double(trend.window_min);
    t.meta["window_max"] = fmt_double(trend.window_max);
}

} // namespace

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (const auto& [k, v] : table.meta) out << "# " << k << "=" << sanitize(v) << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ",";
        out << sanitize(table.columns[i]);
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << sanitize(row[i]);
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json_string(const Table& table) {
    nlohmann::json j;
    j["meta"] = table.meta;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    return j.dump(2) + "\n";
}

void embed_provenance(Table& table, const ContinuedFraction& cf) {
    table.meta["slope_kind"] = cf.provenance.kind;
    table.meta["slope_depth"] = std::to_string(cf.depth());
    if (cf.provenance.kind == "synthesized" || cf.provenance.kind == "random") {
        table.meta["slope_alpha"] = fmt_double(cf.provenance.alpha);
        table.meta["slope_c"] = fmt_double(cf.provenance.c);
        table.meta["slope_seed"] = std::to_string(cf.provenance.seed);
    }
    std::string preview;
    const std::size_t shown = std::min<std::size_t>(cf.depth(), 12);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) preview += ' ';
        preview += to_decimal(cf.entries[i]);
    }
    if (shown < cf.depth()) preview += " ...";
    table.meta["slope_entries"] = preview;
}

Table tabulate(const AlphaTypeReport& r) {
    Table t;
    t.meta["report"] = "alpha_type";
    t.meta["alpha"] = fmt_double(r.alpha);
    put_trend(t, r.trend);
    t.columns = {"n", "a_n", "q_prev", "log_s"};
    for (const AlphaTypeRow& row : r.rows)
        t.rows.push_back({std::to_string(row.n), to_decimal(row.a_n), to_decimal(row.q_prev),
                          fmt_double(row.log_s)});
    return t;
}

Table tabulate(const RepetitivityTable& r) {
    Table t;
    t.meta["report"] = "repetitivity";
    t.meta["alpha"] = fmt_double(r.alpha);
    put_trend(t, r.trend);
    t.columns = {"n", "r_formula", "r_brute", "log_ratio"};
    for (const RepetitivityRow& row : r.rows)
        t.rows.push_back({to_decimal(row.n), to_decimal(row.r_formula),
                          row.r_brute ? to_decimal(*row.r_brute) : std::string(),
                          fmt_double(row.log_ratio)});
    return t;
}

Table tabulate(const RepulsivenessTable& r) {
    Table t;
    t.meta["report"] = "repulsiveness";
    t.meta["alpha"] = fmt_double(r.alpha);
    t.meta["running_min"] = fmt_opt_double(r.running_min);
    t.meta["classic_running_min"] = fmt_opt_double(r.classic_running_min);
    put_trend(t, r.trend);
    t.columns = {"n", "A_alpha", "A_classic", "flags"};
    for (const RepulsiveRow& row : r.rows)
        t.rows.push_back({to_decimal(row.n), fmt_opt_double(row.A_alpha),
                          fmt_opt_double(row.A_classic),
                          join_flags({{!row.exact, "upper_bound"}})});
    return t;
}

Table tabulate(const PowerTable& r) {
    Table t;
    t.meta["report"] = "power";
    t.meta["alpha"] = fmt_double(r.alpha);
    put_trend(t, r.trend);
    t.columns = {"n", "Q", "log_ratio", "flags"};
    for (const PowerRow& row : r.rows)
        t.rows.push_back({to_decimal(row.n), to_decimal(row.Q), fmt_double(row.log_ratio),
                          join_flags({{row.capped, "capped"},
                                      {row.lower_bound_only, "lower_bound"}})});
    return t;
}

Table tabulate(const EquivalenceReport& r) {
    Table t;
    t.meta["report"] = "equivalence";
    t.meta["alpha"] = fmt_double(r.alpha);
    t.meta["agreement"] = agreement_name(r.agreement);
    t.columns = {"diagnostic", "verdict"};
    t.rows.push_back({"type", verdict_name(r.type)});
    t.rows.push_back({"repetitive", verdict_name(r.repetitive)});
    t.rows.push_back({"repulsive", verdict_name(r.repulsive)});
    t.rows.push_back({"finite_power", verdict_name(r.finite)});
    if (r.classic_repulsive)
        t.rows.push_back({"classic_repulsive", verdict_name(*r.classic_repulsive)});
    return t;
}

Table tabulate(const PsiSeries& r) {
    Table t;
    t.meta["report"] = "psi_series";
    t.meta["anchor"] = (r.anchor == LimitWord::x) ? "x" : "y";
    t.meta["t"] = fmt_double(r.t);
    t.meta["r"] = fmt_double(r.r);
    t.meta["depth_limited"] = r.depth_limited ? "true" : "false";
    t.columns = {"n", "q_n", "psi", "sup_j_psi", "tail_flag"};
    for (const PsiRow& row : r.rows)
        t.rows.push_back({std::to_string(row.level), to_decimal(row.lead_index),
                          fmt_double(std::exp(row.log_psi)),
                          row.log_psi_sup ? fmt_double(std::exp(*row.log_psi_sup)) : std::string(),
                          row.rigorous ? "rigorous" : "estimate"});
    return t;
}

Table tabulate(const RegularityReport& r) {
    Table t;
    t.meta["report"] = "regularity";
    t.meta["anchor"] = (r.anchor == LimitWord::x) ? "x" : "y";
    t.meta["t"] = fmt_double(r.t);
    t.meta["predicted_r"] = fmt_double(r.predicted_r);
    t.meta["transition_estimate"] =
        r.transition_estimate ? fmt_double(*r.transition_estimate) : std::string();
    t.columns = {"r", "verdict", "first_log_psi", "last_log_psi"};
    for (const RegularityPoint& pt : r.points)
        t.rows.push_back({fmt_double(pt.r), verdict_name(pt.verdict),
                          fmt_double(pt.first_log_psi), fmt_double(pt.last_log_psi)});
    return t;
}

Table tabulate(const FinitenessReport& r) {
    Table t;
    t.meta["report"] = "metric_finiteness";
    t.meta["t"] = fmt_double(r.t);
    t.meta["verdict"] = series_verdict_name(r.verdict);
    t.meta["saturated"] = r.saturated ? "true" : "false";
    t.columns = {"level", "log_increment"};
    for (std::size_t i = 0; i < r.increment_logs.size(); ++i)
        t.rows.push_back({std::to_string(i + 1), fmt_double(r.increment_logs[i])});
    return t;
}

Table tabulate(const std::vector<JarnikRow>& rows, double beta, double c) {
    Table t;
    t.meta["report"] = "jarnik_hits";
    t.meta["beta"] = fmt_double(beta);
    t.meta["c"] = fmt_double(c);
    t.columns = {"n", "q_n", "status"};
    for (const JarnikRow& row : rows)
        t.rows.push_back({std::to_string(row.n), to_decimal(row.q), hit_status_name(row.status)});
    return t;
}

Table tabulate(const ExactBetaProfile& r) {
    Table t;
    t.meta["report"] = "exact_beta";
    t.meta["beta"] = fmt_double(r.beta);
    t.meta["refuted"] = r.refuted ? "true" : "false";
    t.columns = {"c", "hits", "misses", "undecided", "last_hit_index"};
    for (const ExactBetaPoint& pt : r.points)
        t.rows.push_back({fmt_double(pt.c), std::to_string(pt.hits), std::to_string(pt.misses),
                          std::to_string(pt.undecided),
                          pt.last_hit_index ? std::to_string(*pt.last_hit_index) : std::string()});
    return t;
}

Table tabulate(const BoxDimensionReport& r) {
    Table t;
    t.meta["report"] = "box_dimension";
    t.meta["alpha"] = fmt_double(r.alpha);
    t.meta["c1"] = fmt_double(r.c1);
    t.meta["c2"] = fmt_double(r.c2);
    t.meta["samples"] = std::to_string(r.samples);
    t.meta["depth"] = std::to_string(r.depth);
    t.meta["fitted"] = fmt_double(r.fitted);
    t.meta["spread"] = fmt_double(r.spread);
    t.meta["degenerate"] = r.degenerate ? "true" : "false";
    t.columns = {"depth_level", "mean_log_branch_count"};
    for (std::size_t d = 0; d < r.branch_log_counts.size(); ++d)
        t.rows.push_back({std::to_string(d), fmt_double(r.branch_log_counts[d])});
    return t;
}

Table tabulate(const LebesgueReport& r) {
    Table t;
    t.meta["report"] = "lebesgue";
    t.meta["alpha"] = fmt_double(r.alpha);
    t.meta["empty"] = r.empty ? "true" : "false";
    t.columns = {"samples", "divergent", "fraction_nondivergent"};
    t.rows.push_back({std::to_string(r.samples), std::to_string(r.divergent),
                      fmt_double(r.fraction_nondivergent)});
    return t;
}

} // namespace sturmian
