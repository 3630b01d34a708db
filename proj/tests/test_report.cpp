#include "doctest.h"

#include "ethersim/report.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

using namespace ethersim::report;

namespace {
ComparisonDoc sample_doc() {
    ComparisonDoc doc;
    doc.header.seed = 42;
    doc.header.rng_name = "mt19937_64";
    ConfigKv cfg{{"capacity_C", "3e+06"}, {"stations_Q", "256"}};
    doc.header.config_hash = config_hash(cfg);
    doc.config = cfg;
    doc.rows.push_back(ComparisonRow{Regime::Forward1976, "E", 0.9803211524407215,
                                     "last payload bit on the cable",
                                     "sender edge only"});
    doc.rows.push_back(ComparisonRow{Regime::EftpBilateral, "E_B", 128.0 / 137.0,
                                     "both sides assured, \"dally, then echo\"",
                                     "sender and receiver"});
    doc.rows.push_back(ComparisonRow{Regime::OaeBilateral, "E_B", 0.99997066,
                                     "top sack observed, commas, included",
                                     "sender and receiver"});
    return doc;
}
}  // namespace

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
    CHECK(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("hex64 renders fixed-width lowercase hex") {
    CHECK(hex64(0) == "0000000000000000");
    CHECK(hex64(0xdeadbeefull) == "00000000deadbeef");
    CHECK(hex64(~0ull) == "ffffffffffffffff");
}

TEST_CASE("config hash depends on order and content") {
    ConfigKv a{{"x", "1"}, {"y", "2"}};
    ConfigKv b{{"y", "2"}, {"x", "1"}};
    ConfigKv c{{"x", "1"}, {"y", "3"}};
    CHECK(config_hash(a) == config_hash(a));
    CHECK(config_hash(a) != config_hash(b));
    CHECK(config_hash(a) != config_hash(c));
    CHECK(config_hash(a) == hex64(fnv1a64("x=1\ny=2\n")));
}

TEST_CASE("format_sig6 gives six significant digits") {
    CHECK(format_sig6(0.9803211524407215) == "0.980321");
    CHECK(format_sig6(1.7129709526422877) == "1.71297");
    CHECK(format_sig6(4096.0) == "4096");
    CHECK(format_sig6(3.0e6) == "3e+06");
    CHECK(format_sig6(0.0) == "0");
}

TEST_CASE("format_exact round-trips arbitrary doubles through strtod") {
    const double values[] = {0.0,       0.1,          1.0 / 3.0,     9.6e-5,
                             1.0e308,   5.0e-324,     0.9803211524407215,
                             -2.5e-7,   1365.3333333333333,
                             0.00013733333333333334};
    for (double v : values) {
        std::string text = format_exact(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
}

TEST_CASE("regime names round-trip") {
    CHECK(std::string(to_string(Regime::Forward1976)) == "Forward1976");
    CHECK(std::string(to_string(Regime::EftpBilateral)) == "EftpBilateral");
    CHECK(std::string(to_string(Regime::OaeBilateral)) == "OaeBilateral");
    for (Regime r : {Regime::Forward1976, Regime::EftpBilateral, Regime::OaeBilateral})
        CHECK(regime_from_string(to_string(r)) == r);
    CHECK_FALSE(regime_from_string("Sideways1981").has_value());
    CHECK_FALSE(regime_from_string("").has_value());
}

TEST_CASE("comparison documents survive a json round-trip unchanged") {
    ComparisonDoc doc = sample_doc();
    std::string text = render_comparison_json(doc);
    CHECK(text.back() == '\n');
    ComparisonDoc parsed = parse_comparison_json(text);
    CHECK(parsed == doc);
    // Value precision must be lossless, not display-rounded.
    CHECK(parsed.rows[1].value == 128.0 / 137.0);
}

TEST_CASE("malformed comparison json is rejected") {
    CHECK_THROWS_AS((void)parse_comparison_json("not json at all"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_comparison_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_comparison_json("{\"header\":{},\"rows\":[]}"),
                    std::invalid_argument);

    ComparisonDoc doc = sample_doc();
    std::string text = render_comparison_json(doc);
    auto pos = text.find("Forward1976");
    text.replace(pos, 11, "Sideways1981");
    CHECK_THROWS_AS((void)parse_comparison_json(text), std::invalid_argument);
}

TEST_CASE("comparison csv quotes awkward cells") {
    ComparisonDoc doc = sample_doc();
    std::string csv = render_comparison_csv(doc);
    CHECK(csv.find("# seed=42\n") != std::string::npos);
    CHECK(csv.find("# rng_name=mt19937_64\n") != std::string::npos);
    CHECK(csv.find("# config_hash=" + doc.header.config_hash) != std::string::npos);
    CHECK(csv.find("# capacity_C=3e+06\n") != std::string::npos);
    CHECK(csv.find("regime,measure,value,success_definition,boundary") != std::string::npos);
    CHECK(csv.find("Forward1976,E,0.980321,") != std::string::npos);
    // Embedded commas force quoting; embedded quotes double up.
    CHECK(csv.find("\"top sack observed, commas, included\"") != std::string::npos);
    CHECK(csv.find("\"both sides assured, \"\"dally, then echo\"\"\"") != std::string::npos);
}

TEST_CASE("bilateral json carries optional overhead as null") {
    Header header;
    header.seed = 7;
    header.rng_name = "mt19937_64";
    ConfigKv cfg{{"n", "5"}};
    header.config_hash = config_hash(cfg);

    BilateralReport rep;
    rep.n_attempted = 5;
    rep.n_committed = 0;
    rep.p_eff_s = 1.3653333333333333e-3;
    rep.e_b = 0.0;
    std::string text = render_bilateral_json(header, cfg, rep);
    CHECK(text.find("\"dt_commit_s\": null") != std::string::npos);
    CHECK(text.find("\"n_committed\": 0") != std::string::npos);

    rep.n_committed = 5;
    rep.dt_commit_s = 9.6e-5;
    rep.e_b = 128.0 / 137.0;
    text = render_bilateral_json(header, cfg, rep);
    CHECK(text.find("null") == std::string::npos);
    CHECK(text.find("\"seed\": 7") != std::string::npos);
    CHECK(text.find("9.6e-05") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("bilateral reports compare by value") {
    BilateralReport a, b;
    a.n_attempted = b.n_attempted = 3;
    a.e_b = b.e_b = 0.5;
    CHECK(a == b);
    b.dt_commit_s = 1e-5;
    CHECK(a != b);
}
