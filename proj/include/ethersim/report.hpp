#pragma once

// Report plumbing shared by the simulators and the CLI: the reproducibility
// header stamped on every document, the bilateral-efficiency report, and
// the three-regime comparison table with lossless JSON round-trip.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ethersim::report {

/// Stamped on every serialized report so any run can be reproduced: the
/// seed, the generator behind it, and a hash of the effective config.
struct Header {
    std::uint64_t seed = 0;
    std::string rng_name;
    std::string config_hash;

    bool operator==(const Header&) const = default;
};

[[nodiscard]] std::uint64_t fnv1a64(std::string_view bytes);
[[nodiscard]] std::string hex64(std::uint64_t value);

/// Key/value view of a fully resolved configuration, in a fixed key order.
/// Values are pre-rendered strings so hashing and round-trips are exact.
using ConfigKv = std::vector<std::pair<std::string, std::string>>;

/// Hash of "k=v\n" lines in order; the header's config_hash field.
[[nodiscard]] std::string config_hash(const ConfigKv& config);

struct BilateralReport {
    std::uint64_t n_attempted = 0;
    std::uint64_t n_committed = 0;
    double p_eff_s = 0.0;
    /// Mean commit overhead over committed transactions; absent when
    /// nothing committed (e_b is then 0).
    std::optional<double> dt_commit_s;
    double e_b = 0.0;

    bool operator==(const BilateralReport&) const = default;
};

enum class Regime { Forward1976, EftpBilateral, OaeBilateral };

[[nodiscard]] const char* to_string(Regime regime);
[[nodiscard]] std::optional<Regime> regime_from_string(std::string_view name);

struct ComparisonRow {
    Regime regime = Regime::Forward1976;
    std::string measure;  // "E" or "E_B"
    double value = 0.0;
    std::string success_definition;
    std::string boundary;

    bool operator==(const ComparisonRow&) const = default;
};

/// The comparison document: exactly three rows in regime order
/// Forward1976, EftpBilateral, OaeBilateral.
struct ComparisonDoc {
    Header header;
    ConfigKv config;
    std::vector<ComparisonRow> rows;

    bool operator==(const ComparisonDoc&) const = default;
};

/// %.6g with the C locale: period decimal point, six significant digits.
/// CSV cells use this; JSON keeps full shortest-round-trip precision.
[[nodiscard]] std::string format_sig6(double value);

/// Full-precision decimal that parses back to the identical double.
[[nodiscard]] std::string format_exact(double value);

[[nodiscard]] std::string render_comparison_json(const ComparisonDoc& doc);
/// Inverse of render_comparison_json. Throws std::invalid_argument on
/// malformed documents.
[[nodiscard]] ComparisonDoc parse_comparison_json(const std::string& text);

/// CSV with a `# key=value` comment block for the header and config, then
/// `regime,measure,value,success_definition,boundary` rows.
[[nodiscard]] std::string render_comparison_csv(const ComparisonDoc& doc);

[[nodiscard]] std::string render_bilateral_json(const Header& header, const ConfigKv& config,
                                                const BilateralReport& rep);

}  // namespace ethersim::report
