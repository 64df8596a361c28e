#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "sturmian/cf.hpp"
#include "sturmian/complexity.hpp"
#include "sturmian/jarnik.hpp"
#include "sturmian/serialize.hpp"
#include "sturmian/spectral.hpp"

using namespace sturmian;

TEST_CASE("doubles render to reproducible shortest-faithful decimals") {
    CHECK(fmt_double(0.1) == "0.10000000000000001");
    CHECK(fmt_double(0.5) == "0.5");
    CHECK(fmt_double(1.0 / 3.0) == fmt_double(1.0 / 3.0));
    CHECK(fmt_double(2.0) == "2");
    // round-trip through the rendered text is lossless
    CHECK(std::stod(fmt_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv rendering is deterministic with sorted metadata") {
    Table t;
    t.columns = {"a", "b"};
    t.rows = {{"1", "x"}, {"2", "y"}};
    t.meta["zeta"] = "last";
    t.meta["alpha"] = "first";
    const std::string csv = to_csv(t);
    CHECK(csv == "# alpha=first\n# zeta=last\na,b\n1,x\n2,y\n");
    CHECK(to_csv(t) == csv);
}

TEST_CASE("csv cells cannot break the row structure") {
    Table t;
    t.columns = {"c"};
    t.rows = {{"a,b\nc\rd"}};
    const std::string csv = to_csv(t);
    CHECK(csv.find("a;b;c;d") != std::string::npos);
}

TEST_CASE("json rendering carries metadata, columns and rows") {
    Table t;
    t.columns = {"n", "v"};
    t.rows = {{"1", "0.5"}};
    t.meta["kind"] = "demo";
    const std::string s = to_json_string(t);
    CHECK(s.back() == '\n');
    const nlohmann::json j = nlohmann::json::parse(s);
    CHECK(j["meta"]["kind"] == "demo");
    CHECK(j["columns"] == nlohmann::json({"n", "v"}));
    CHECK(j["rows"][0][1] == "0.5");
    CHECK(to_json_string(t) == s);
}

TEST_CASE("provenance lands in the metadata") {
    Table t;
    embed_provenance(t, fibonacci_cf(30));
    CHECK(t.meta.at("slope_kind") == "fibonacci");
    CHECK(t.meta.at("slope_depth") == "30");
    CHECK(t.meta.at("slope_entries").substr(0, 3) == "2 1");

    Table s;
    embed_provenance(s, synthesize_alpha_cf(2.0, 1.5, 10, Int(1) << 64));
    CHECK(s.meta.at("slope_kind") == "synthesized");
    CHECK(s.meta.at("slope_alpha") == "2");
    CHECK(s.meta.at("slope_c") == "1.5");
}

TEST_CASE("entry preview truncates long expansions") {
    Table t;
    embed_provenance(t, fibonacci_cf(40));
    const std::string& e = t.meta.at("slope_entries");
    CHECK(e.substr(e.size() - 4) == " ...");
}

TEST_CASE("psi series table shape") {
    const ContinuedFraction f = fibonacci_cf(30);
    const Table t = tabulate(psi_series(f, LimitWord::x, WeightSpec{2.0}, 0.5, 5));
    CHECK(t.columns == std::vector<std::string>{"n", "q_n", "psi", "sup_j_psi", "tail_flag"});
    REQUIRE(t.rows.size() == 5);
    for (const auto& row : t.rows) {
        REQUIRE(row.size() == 5);
        CHECK(row[4] == "rigorous");
        CHECK(std::stod(row[2]) > 0.0);
    }
    CHECK(t.meta.at("anchor") == "x");
    CHECK(t.meta.at("t") == "2");
    CHECK(t.meta.at("r") == "0.5");
}

TEST_CASE("type report table carries the trend verdict") {
    const Table t = tabulate(alpha_type_sequence(fibonacci_cf(30), 2.0));
    CHECK(t.meta.at("verdict") == "vanishing");
    CHECK(t.meta.count("trend_slope") == 1);
    REQUIRE(!t.rows.empty());
    CHECK(t.columns.front() == "n");
}

TEST_CASE("equivalence table lists the four diagnostics") {
    const Table t = tabulate(equivalence_report(fibonacci_cf(40), 2.0));
    REQUIRE(t.rows.size() >= 4);
    CHECK(t.meta.at("agreement") == "consistent");
    bool saw_type = false;
    for (const auto& row : t.rows) saw_type = saw_type || row.front() == "type";
    CHECK(saw_type);
}

TEST_CASE("jarnik rows table records the parameters") {
    const Table t = tabulate(jarnik_hits(fibonacci_cf(20), 2.0, 1.0, 8), 2.0, 1.0);
    CHECK(t.meta.at("beta") == "2");
    CHECK(t.meta.at("c") == "1");
    REQUIRE(t.rows.size() == 8);
    for (const auto& row : t.rows) CHECK(row.back() == "hit");
}

TEST_CASE("box dimension table serializes the fit") {
    const Table t = tabulate(box_dimension_estimate(2.0, 1.0, 2.0, 20, 10, 1));
    CHECK(t.meta.count("fitted") == 1);
    CHECK(t.meta.at("degenerate") == "false");
    REQUIRE(!t.rows.empty());
}

TEST_CASE("power table marks uncertified rows") {
    const ContinuedFraction synth = synthesize_alpha_cf(2.0, 1.0, 20, Int(1) << 100);
    const Table t = tabulate(power_table(synth, 2.0));
    bool saw_lower_bound = false;
    for (const auto& row : t.rows) saw_lower_bound = saw_lower_bound || row.back().find("lower_bound") != std::string::npos;
    CHECK(saw_lower_bound);
}
