#include "ethersim/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace ethersim::report {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json header_to_json(const Header& header) {
    ordered_json j;
    j["seed"] = header.seed;
    j["rng_name"] = header.rng_name;
    j["config_hash"] = header.config_hash;
    return j;
}

Header header_from_json(const ordered_json& j) {
    Header header;
    header.seed = j.at("seed").get<std::uint64_t>();
    header.rng_name = j.at("rng_name").get<std::string>();
    header.config_hash = j.at("config_hash").get<std::string>();
    return header;
}

ordered_json config_to_json(const ConfigKv& config) {
    ordered_json j = ordered_json::object();
    for (const auto& [key, value] : config) j[key] = value;
    return j;
}

ConfigKv config_from_json(const ordered_json& j) {
    ConfigKv config;
    for (const auto& [key, value] : j.items())
        config.emplace_back(key, value.get<std::string>());
    return config;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string config_hash(const ConfigKv& config) {
    std::string canon;
    for (const auto& [key, value] : config) {
        canon += key;
        canon += '=';
        canon += value;
        canon += '\n';
    }
    return hex64(fnv1a64(canon));
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Forward1976: return "Forward1976";
        case Regime::EftpBilateral: return "EftpBilateral";
        case Regime::OaeBilateral: return "OaeBilateral";
    }
    return "unknown";
}

std::optional<Regime> regime_from_string(std::string_view name) {
    if (name == "Forward1976") return Regime::Forward1976;
    if (name == "EftpBilateral") return Regime::EftpBilateral;
    if (name == "OaeBilateral") return Regime::OaeBilateral;
    return std::nullopt;
}

std::string format_sig6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string format_exact(double value) {
    char buf[64];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) return buf;
    }
    return buf;
}

std::string render_comparison_json(const ComparisonDoc& doc) {
    ordered_json j;
    j["header"] = header_to_json(doc.header);
    j["config"] = config_to_json(doc.config);
    ordered_json rows = ordered_json::array();
    for (const auto& row : doc.rows) {
        ordered_json r;
        r["regime"] = to_string(row.regime);
        r["measure"] = row.measure;
        r["value"] = row.value;
        r["success_definition"] = row.success_definition;
        r["boundary"] = row.boundary;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

ComparisonDoc parse_comparison_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed comparison JSON");
    try {
        ComparisonDoc doc;
        doc.header = header_from_json(j.at("header"));
        doc.config = config_from_json(j.at("config"));
        for (const auto& r : j.at("rows")) {
            ComparisonRow row;
            const auto regime = regime_from_string(r.at("regime").get<std::string>());
            if (!regime) throw std::invalid_argument("unknown regime name");
            row.regime = *regime;
            row.measure = r.at("measure").get<std::string>();
            row.value = r.at("value").get<double>();
            row.success_definition = r.at("success_definition").get<std::string>();
            row.boundary = r.at("boundary").get<std::string>();
            doc.rows.push_back(std::move(row));
        }
        return doc;
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("comparison JSON missing fields: ") + e.what());
    }
}

std::string render_comparison_csv(const ComparisonDoc& doc) {
    std::string out;
    out += "# seed=" + std::to_string(doc.header.seed) + "\n";
    out += "# rng_name=" + doc.header.rng_name + "\n";
    out += "# config_hash=" + doc.header.config_hash + "\n";
    for (const auto& [key, value] : doc.config) out += "# " + key + "=" + value + "\n";
    out += "regime,measure,value,success_definition,boundary\n";
    for (const auto& row : doc.rows) {
        out += to_string(row.regime);
        out += ',';
        out += csv_escape(row.measure);
        out += ',';
        out += format_sig6(row.value);
        out += ',';
        out += csv_escape(row.success_definition);
        out += ',';
        out += csv_escape(row.boundary);
        out += '\n';
    }
    return out;
}

std::string render_bilateral_json(const Header& header, const ConfigKv& config,
                                  const BilateralReport& rep) {
    ordered_json j;
    j["header"] = header_to_json(header);
    j["config"] = config_to_json(config);
    ordered_json r;
    r["n_attempted"] = rep.n_attempted;
    r["n_committed"] = rep.n_committed;
    r["p_eff_s"] = rep.p_eff_s;
    if (rep.dt_commit_s)
        r["dt_commit_s"] = *rep.dt_commit_s;
    else
        r["dt_commit_s"] = nullptr;
    r["e_b"] = rep.e_b;
    j["report"] = std::move(r);
    return j.dump(2) + "\n";
}

}  // namespace ethersim::report
