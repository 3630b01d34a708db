// ethersim: analytic tables and discrete-event simulations of forward and
// bilateral Ethernet efficiency across three regimes: the 1976 slotted
// contention cable, EFTP with its end-dally handshake, and a full-duplex
// slice-acknowledged link.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ethersim/analytic.hpp"
#include "ethersim/csmacd.hpp"
#include "ethersim/eftp.hpp"
#include "ethersim/oae.hpp"
#include "ethersim/report.hpp"
#include "ethersim/simkernel.hpp"

namespace {

using ethersim::report::ConfigKv;
using ethersim::report::format_exact;
using ethersim::report::format_sig6;
using ordered_json = nlohmann::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string config_comment_block(const ethersim::report::Header& header,
                                 const ConfigKv& config) {
    std::string out;
    out += "# seed=" + std::to_string(header.seed) + "\n";
    out += "# rng_name=" + header.rng_name + "\n";
    out += "# config_hash=" + header.config_hash + "\n";
    for (const auto& [key, value] : config) out += "# " + key + "=" + value + "\n";
    return out;
}

ordered_json header_json(const ethersim::report::Header& header) {
    ordered_json j;
    j["seed"] = header.seed;
    j["rng_name"] = header.rng_name;
    j["config_hash"] = header.config_hash;
    return j;
}

ordered_json config_json(const ConfigKv& config) {
    ordered_json j = ordered_json::object();
    for (const auto& [key, value] : config) j[key] = value;
    return j;
}

ethersim::report::Header make_header(std::uint64_t seed, const std::string& rng_name,
                                     const ConfigKv& config) {
    ethersim::report::Header header;
    header.seed = seed;
    header.rng_name = rng_name;
    header.config_hash = ethersim::report::config_hash(config);
    return header;
}

struct Table1Opts {
    double C = 3.0e6;
    double T = 16.0e-6;
    std::vector<double> P;
    std::vector<int> Q;
    std::string format = "csv";
    std::string out;
};

int cmd_table1(const Table1Opts& opts) {
    const auto packets = opts.P.empty() ? ethersim::analytic::default_packet_sizes() : opts.P;
    const auto stations = opts.Q.empty() ? ethersim::analytic::default_station_counts() : opts.Q;
    const auto grid = ethersim::analytic::efficiency_grid(packets, stations, opts.C, opts.T);

    ConfigKv config;
    config.emplace_back("command", "table1");
    config.emplace_back("C_bps", format_exact(opts.C));
    config.emplace_back("T_s", format_exact(opts.T));
    {
        std::string ps, qs;
        for (double p : packets) ps += (ps.empty() ? "" : " ") + format_exact(p);
        for (int q : stations) qs += (qs.empty() ? "" : " ") + std::to_string(q);
        config.emplace_back("P_bits", ps);
        config.emplace_back("Q", qs);
    }
    const auto header = make_header(0, "none", config);

    std::string text;
    if (opts.format == "json") {
        ordered_json j;
        j["header"] = header_json(header);
        j["config"] = config_json(config);
        ordered_json rows = ordered_json::array();
        for (const auto& cell : grid) {
            ordered_json r;
            r["P_bits"] = cell.packet_P;
            r["Q"] = cell.stations_Q;
            r["A"] = cell.stats.acquisition_A;
            r["W"] = cell.stats.mean_slots_W;
            r["E"] = cell.stats.efficiency_E;
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        text = j.dump(2) + "\n";
    } else {
        text = config_comment_block(header, config);
        text += "P_bits,Q,A,W,E\n";
        for (const auto& cell : grid) {
            text += format_sig6(cell.packet_P) + "," + std::to_string(cell.stations_Q) + "," +
                    format_sig6(cell.stats.acquisition_A) + "," +
                    format_sig6(cell.stats.mean_slots_W) + "," +
                    format_sig6(cell.stats.efficiency_E) + "\n";
        }
    }
    emit(text, opts.out);
    return 0;
}

struct CsmacdOpts {
    double C = 3.0e6;
    double T = 16.0e-6;
    std::vector<double> P;
    std::vector<int> Q;
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
    bool sweep = false;
    std::string format = "csv";
    std::string out;
};

int cmd_sim_csmacd(const CsmacdOpts& opts) {
    const auto packets = opts.P.empty() ? (opts.sweep ? ethersim::analytic::default_packet_sizes()
                                                      : std::vector<double>{4096.0})
                                        : opts.P;
    const auto stations = opts.Q.empty() ? (opts.sweep ? ethersim::analytic::default_station_counts()
                                                       : std::vector<int>{256})
                                         : opts.Q;
    if (!opts.sweep && (packets.size() != 1 || stations.size() != 1))
        throw std::invalid_argument("single run takes one --P and one --Q; use --sweep for grids");

    ConfigKv config;
    config.emplace_back("command", opts.sweep ? "sim-csmacd --sweep" : "sim-csmacd");
    config.emplace_back("C_bps", format_exact(opts.C));
    config.emplace_back("T_s", format_exact(opts.T));
    {
        std::string ps, qs;
        for (double p : packets) ps += (ps.empty() ? "" : " ") + format_exact(p);
        for (int q : stations) qs += (qs.empty() ? "" : " ") + std::to_string(q);
        config.emplace_back("P_bits", ps);
        config.emplace_back("Q", qs);
    }
    config.emplace_back("n_packets", std::to_string(opts.n));
    const auto header = make_header(opts.seed, ethersim::sim::SeededRng::name(), config);

    std::string text;
    if (opts.sweep) {
        const auto rows = ethersim::csmacd::contention_sweep(packets, stations, opts.C, opts.T,
                                                             opts.n, opts.seed);
        if (opts.format == "json") {
            ordered_json j;
            j["header"] = header_json(header);
            j["config"] = config_json(config);
            ordered_json jrows = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                r["P_bits"] = row.packet_P;
                r["Q"] = row.stations_Q;
                r["analytic_E"] = row.analytic_E;
                r["empirical_E"] = row.empirical_E;
                r["abs_diff"] = row.abs_diff;
                r["cell_seed"] = row.cell_seed;
                jrows.push_back(std::move(r));
            }
            j["rows"] = std::move(jrows);
            text = j.dump(2) + "\n";
        } else {
            text = config_comment_block(header, config);
            text += "P_bits,Q,analytic_E,empirical_E,abs_diff,cell_seed\n";
            for (const auto& row : rows) {
                text += format_sig6(row.packet_P) + "," + std::to_string(row.stations_Q) + "," +
                        format_sig6(row.analytic_E) + "," + format_sig6(row.empirical_E) + "," +
                        format_sig6(row.abs_diff) + "," + std::to_string(row.cell_seed) + "\n";
            }
        }
    } else {
        ethersim::analytic::EtherParams params;
        params.capacity_C = opts.C;
        params.slot_T = opts.T;
        params.packet_P = packets.front();
        params.stations_Q = stations.front();
        const auto run = ethersim::csmacd::simulate_contention(params, opts.n, opts.seed);
        if (opts.format == "json") {
            ordered_json j;
            j["header"] = header_json(header);
            j["config"] = config_json(config);
            ordered_json r;
            r["packets_completed"] = run.packets_completed;
            r["contention_slots_total"] = run.contention_slots_total;
            r["busy_time_s"] = run.busy_time_s;
            r["total_time_s"] = run.total_time_s;
            r["empirical_E"] = run.empirical_E;
            r["empirical_W"] = run.empirical_W;
            r["slots_sample_variance"] = run.slots_sample_variance;
            j["report"] = std::move(r);
            text = j.dump(2) + "\n";
        } else {
            text = config_comment_block(header, config);
            text += "packets_completed,contention_slots_total,busy_time_s,total_time_s,"
                    "empirical_E,empirical_W\n";
            text += std::to_string(run.packets_completed) + "," +
                    std::to_string(run.contention_slots_total) + "," +
                    format_sig6(run.busy_time_s) + "," + format_sig6(run.total_time_s) + "," +
                    format_sig6(run.empirical_E) + "," + format_sig6(run.empirical_W) + "\n";
        }
    }
    emit(text, opts.out);
    return 0;
}

struct EftpOpts {
    double C = 3.0e6;
    double tau = 8.0e-6;
    double P = 4096.0;
    std::uint64_t file_bits = 65536;
    double ctrl_bits = 48.0;
    std::uint64_t n = 1000;
    std::uint64_t seed = 1;
    double loss = 0.0;
    double corrupt = 0.0;
    double dally_s = 10.0;
    int retries = 5;
    double ack_timeout_s = 0.0;
    bool trace = false;
    std::string format = "json";
    std::string out;
};

ConfigKv eftp_config_kv(const EftpOpts& opts) {
    ConfigKv config;
    config.emplace_back("command", "sim-eftp");
    config.emplace_back("C_bps", format_exact(opts.C));
    config.emplace_back("tau_s", format_exact(opts.tau));
    config.emplace_back("P_bits", format_exact(opts.P));
    config.emplace_back("file_bits", std::to_string(opts.file_bits));
    config.emplace_back("ctrl_bits", format_exact(opts.ctrl_bits));
    config.emplace_back("n_transfers", std::to_string(opts.n));
    config.emplace_back("loss", format_exact(opts.loss));
    config.emplace_back("corrupt", format_exact(opts.corrupt));
    config.emplace_back("dally_s", format_exact(opts.dally_s));
    config.emplace_back("retries", std::to_string(opts.retries));
    config.emplace_back("ack_timeout_s", format_exact(opts.ack_timeout_s));
    return config;
}

std::string bilateral_csv(const ethersim::report::Header& header, const ConfigKv& config,
                          const ethersim::report::BilateralReport& rep) {
    std::string text = config_comment_block(header, config);
    text += "n_attempted,n_committed,p_eff_s,dt_commit_s,e_b\n";
    text += std::to_string(rep.n_attempted) + "," + std::to_string(rep.n_committed) + "," +
            format_sig6(rep.p_eff_s) + "," +
            (rep.dt_commit_s ? format_sig6(*rep.dt_commit_s) : std::string("nan")) + "," +
            format_sig6(rep.e_b) + "\n";
    return text;
}

int cmd_sim_eftp(const EftpOpts& opts) {
    ethersim::sim::LinkModel link;
    link.capacity_C = opts.C;
    link.propagation_tau = opts.tau;
    link.loss_prob = opts.loss;
    link.corrupt_prob = opts.corrupt;
    link.duplex_full = false;

    ethersim::eftp::EftpConfig config;
    config.ctrl_bits = opts.ctrl_bits;
    config.ack_timeout_s = opts.ack_timeout_s;
    config.dally_s = opts.dally_s;
    config.retries = opts.retries;

    if (opts.trace) {
        ethersim::eftp::EftpConfig traced = config;
        traced.collect_trace = true;
        for (std::uint64_t i = 0; i < opts.n; ++i) {
            const auto transfer_seed = ethersim::sim::derive_seed(opts.seed, i, 0x45465450ull);
            const auto res = ethersim::eftp::run_transfer(opts.file_bits, opts.P, link, traced,
                                                          transfer_seed, i);
            std::fprintf(stderr, "# transfer=%llu seed=%llu outcome=%s\n",
                         static_cast<unsigned long long>(i),
                         static_cast<unsigned long long>(transfer_seed),
                         ethersim::eftp::to_string(res.record.outcome));
            for (const auto& ev : res.trace)
                std::fprintf(stderr, "%s\n", ethersim::eftp::render_trace_line(ev).c_str());
        }
    }

    const auto rep = ethersim::eftp::measure_bilateral_efficiency_eftp(
        opts.n, opts.file_bits, opts.P, link, config, opts.seed);
    const auto kv = eftp_config_kv(opts);
    const auto header = make_header(opts.seed, ethersim::sim::SeededRng::name(), kv);
    std::string text = opts.format == "csv"
                           ? bilateral_csv(header, kv, rep)
                           : ethersim::report::render_bilateral_json(header, kv, rep);
    emit(text, opts.out);
    return 0;
}

struct OaeOpts {
    double C = 3.0e6;
    double tau = 8.0e-6;
    std::uint64_t n = 1000;
    std::uint64_t seed = 1;
    double loss = 0.0;
    double corrupt = 0.0;
    int budget = 5;
    bool trace = false;
    std::string format = "json";
    std::string out;
};

int cmd_sim_oae(const OaeOpts& opts) {
    ethersim::sim::LinkModel link;
    link.capacity_C = opts.C;
    link.propagation_tau = opts.tau;
    link.loss_prob = opts.loss;
    link.corrupt_prob = opts.corrupt;
    link.duplex_full = true;

    ethersim::oae::OaeConfig config;
    config.retransmit_budget = opts.budget;
    config.collect_trace = opts.trace;

    const auto run = ethersim::oae::run_stream(opts.n, link, config, opts.seed);
    if (opts.trace)
        for (const auto& line : run.trace) std::fprintf(stderr, "%s\n", line.c_str());

    ConfigKv config_kv;
    config_kv.emplace_back("command", "sim-oae");
    config_kv.emplace_back("C_bps", format_exact(opts.C));
    config_kv.emplace_back("tau_s", format_exact(opts.tau));
    config_kv.emplace_back("n_frames", std::to_string(opts.n));
    config_kv.emplace_back("loss", format_exact(opts.loss));
    config_kv.emplace_back("corrupt", format_exact(opts.corrupt));
    config_kv.emplace_back("retransmit_budget", std::to_string(opts.budget));
    const auto header = make_header(opts.seed, ethersim::sim::SeededRng::name(), config_kv);

    std::string text;
    if (opts.format == "csv") {
        text = config_comment_block(header, config_kv);
        text += "frames_attempted,frames_committed,payload_time_peff_s,delta_t_commit_s,"
                "e_b_oae,sack00,sack01,sack10,sack11,duration_s,retransmissions\n";
        text += std::to_string(run.frames_attempted) + "," +
                std::to_string(run.frames_committed) + "," +
                format_sig6(run.payload_time_peff_s) + "," +
                format_sig6(run.delta_t_commit_s) + "," + format_sig6(run.e_b_oae);
        for (auto count : run.sack_counts) text += "," + std::to_string(count);
        text += "," + format_sig6(run.duration_s) + "," + std::to_string(run.retransmissions) +
                "\n";
    } else {
        ordered_json j;
        j["header"] = header_json(header);
        j["config"] = config_json(config_kv);
        ordered_json r;
        r["frames_attempted"] = run.frames_attempted;
        r["frames_committed"] = run.frames_committed;
        r["payload_time_peff_s"] = run.payload_time_peff_s;
        r["delta_t_commit_s"] = run.delta_t_commit_s;
        r["e_b_oae"] = run.e_b_oae;
        ordered_json sacks;
        sacks["sack00"] = run.sack_counts[0];
        sacks["sack01"] = run.sack_counts[1];
        sacks["sack10"] = run.sack_counts[2];
        sacks["sack11"] = run.sack_counts[3];
        r["sack_counts"] = std::move(sacks);
        r["duration_s"] = run.duration_s;
        r["retransmissions"] = run.retransmissions;
        j["report"] = std::move(r);
        text = j.dump(2) + "\n";
    }
    emit(text, opts.out);
    return 0;
}

struct CompareOpts {
    double C = 3.0e6;
    double T = 16.0e-6;
    double tau = 8.0e-6;
    double P = 4096.0;
    int Q = 256;
    std::uint64_t n = 200;
    std::uint64_t seed = 1;
    double loss = 0.0;
    double corrupt = 0.0;
    std::string format = "csv";
    std::string out;
};

int cmd_compare(const CompareOpts& opts) {
    ethersim::analytic::EtherParams params;
    params.capacity_C = opts.C;
    params.slot_T = opts.T;
    params.packet_P = opts.P;
    params.stations_Q = opts.Q;
    params.propagation_tau = opts.tau;
    const auto forward = ethersim::analytic::forward_efficiency(params);

    // Matched payload volume: each EFTP transaction carries one packet of P
    // bits; the slice-acknowledged stream carries the same traffic in
    // 512-bit frames.
    ethersim::sim::LinkModel eftp_link;
    eftp_link.capacity_C = opts.C;
    eftp_link.propagation_tau = opts.tau;
    eftp_link.loss_prob = opts.loss;
    eftp_link.corrupt_prob = opts.corrupt;
    eftp_link.duplex_full = false;

    ethersim::eftp::EftpConfig eftp_config;
    const auto file_bits = static_cast<std::uint64_t>(opts.P);
    const auto eftp_rep = ethersim::eftp::measure_bilateral_efficiency_eftp(
        opts.n, file_bits, opts.P, eftp_link, eftp_config,
        ethersim::sim::derive_seed(opts.seed, 1, 0x434d50ull));

    ethersim::sim::LinkModel oae_link = eftp_link;
    oae_link.duplex_full = true;
    const std::uint64_t n_frames =
        std::max<std::uint64_t>(1, opts.n * file_bits / 512);
    ethersim::oae::OaeConfig oae_config;
    const auto oae_run = ethersim::oae::run_stream(
        n_frames, oae_link, oae_config, ethersim::sim::derive_seed(opts.seed, 2, 0x434d50ull));

    ConfigKv config;
    config.emplace_back("command", "compare");
    config.emplace_back("C_bps", format_exact(opts.C));
    config.emplace_back("T_s", format_exact(opts.T));
    config.emplace_back("tau_s", format_exact(opts.tau));
    config.emplace_back("P_bits", format_exact(opts.P));
    config.emplace_back("Q", std::to_string(opts.Q));
    config.emplace_back("n_transactions", std::to_string(opts.n));
    config.emplace_back("oae_frames", std::to_string(n_frames));
    config.emplace_back("loss", format_exact(opts.loss));
    config.emplace_back("corrupt", format_exact(opts.corrupt));
    config.emplace_back("dally_s", format_exact(eftp_config.dally_s));
    config.emplace_back("retries", std::to_string(eftp_config.retries));
    config.emplace_back("retransmit_budget", std::to_string(oae_config.retransmit_budget));

    ethersim::report::ComparisonDoc doc;
    doc.header = make_header(opts.seed, ethersim::sim::SeededRng::name(), config);
    doc.config = config;
    doc.rows = {
        {ethersim::report::Regime::Forward1976, "E", forward.efficiency_E,
         "packet acquired the cable and went out whole",
         "one-way: ends at the sender's last bit"},
        {ethersim::report::Regime::EftpBilateral, "E_B", eftp_rep.e_b,
         "both ends assured of the transfer before departing",
         "end-dally handshake after the data phase"},
        {ethersim::report::Regime::OaeBilateral, "E_B", oae_run.e_b_oae,
         "top acknowledgment level observed by the sender",
         "commit overlaps the next frame's transmission"},
    };

    const std::string text = opts.format == "json"
                                 ? ethersim::report::render_comparison_json(doc)
                                 : ethersim::report::render_comparison_csv(doc);
    emit(text, opts.out);
    return 0;
}

void add_format_flags(CLI::App* cmd, std::string& format, std::string& out) {
    cmd->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out, "Write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forward and bilateral Ethernet efficiency: analytic tables and simulators"};
    app.require_subcommand(1);

    Table1Opts t1;
    auto* table1 = app.add_subcommand("table1", "Analytic efficiency grid over (P, Q)");
    table1->add_option("--C", t1.C, "Link capacity, bits/s");
    table1->add_option("--T", t1.T, "Contention slot duration, s");
    table1->add_option("--P", t1.P, "Packet sizes in bits (repeatable)");
    table1->add_option("--Q", t1.Q, "Station counts (repeatable)");
    add_format_flags(table1, t1.format, t1.out);

    CsmacdOpts cs;
    auto* csma = app.add_subcommand("sim-csmacd", "Monte-Carlo contention simulation");
    csma->add_option("--C", cs.C, "Link capacity, bits/s");
    csma->add_option("--T", cs.T, "Contention slot duration, s");
    csma->add_option("--P", cs.P, "Packet size in bits (repeatable with --sweep)");
    csma->add_option("--Q", cs.Q, "Station count (repeatable with --sweep)");
    csma->add_option("--n", cs.n, "Packets per cell");
    csma->add_option("--seed", cs.seed, "Random seed");
    csma->add_flag("--sweep", cs.sweep, "Run the full (P, Q) grid with per-cell seeds");
    add_format_flags(csma, cs.format, cs.out);

    EftpOpts ef;
    auto* eftp = app.add_subcommand("sim-eftp", "Stop-and-wait transfers with end-dally");
    eftp->add_option("--C", ef.C, "Link capacity, bits/s");
    eftp->add_option("--tau", ef.tau, "One-way propagation delay, s");
    eftp->add_option("--P", ef.P, "Data packet size, bits");
    eftp->add_option("--file-bits", ef.file_bits, "File size per transfer, bits");
    eftp->add_option("--ctrl-bits", ef.ctrl_bits, "Control frame size, bits");
    eftp->add_option("--n", ef.n, "Number of transfers");
    eftp->add_option("--seed", ef.seed, "Random seed");
    eftp->add_option("--loss", ef.loss, "Per-frame loss probability");
    eftp->add_option("--corrupt", ef.corrupt, "Per-frame corruption probability");
    eftp->add_option("--dally-s", ef.dally_s, "Receiver dally duration, s (virtual)");
    eftp->add_option("--retries", ef.retries, "Retry budget per packet and for END");
    eftp->add_option("--ack-timeout-s", ef.ack_timeout_s,
                     "ACK timeout, s (0 derives from packet time and tau)");
    eftp->add_flag("--trace", ef.trace, "Write per-transfer event traces to stderr");
    add_format_flags(eftp, ef.format, ef.out);

    OaeOpts oa;
    auto* oae = app.add_subcommand("sim-oae", "Slice-acknowledged full-duplex stream");
    oae->add_option("--C", oa.C, "Link capacity, bits/s");
    oae->add_option("--tau", oa.tau, "One-way propagation delay, s");
    oae->add_option("--n", oa.n, "Number of frames");
    oae->add_option("--seed", oa.seed, "Random seed");
    oae->add_option("--loss", oa.loss, "Per-slice loss probability");
    oae->add_option("--corrupt", oa.corrupt, "Per-slice corruption probability");
    oae->add_option("--retransmit-budget", oa.budget, "Retransmissions allowed per frame");
    oae->add_flag("--trace", oa.trace, "Write the slice/SACK trace to stderr");
    add_format_flags(oae, oa.format, oa.out);

    CompareOpts cp;
    auto* compare = app.add_subcommand("compare",
                                       "Forward vs bilateral efficiency on matched parameters");
    compare->add_option("--C", cp.C, "Link capacity, bits/s");
    compare->add_option("--T", cp.T, "Contention slot duration, s");
    compare->add_option("--tau", cp.tau, "One-way propagation delay, s");
    compare->add_option("--P", cp.P, "Payload per transaction, bits");
    compare->add_option("--Q", cp.Q, "Station count for the forward regime");
    compare->add_option("--n", cp.n, "Transactions per bilateral regime");
    compare->add_option("--seed", cp.seed, "Random seed");
    compare->add_option("--loss", cp.loss, "Per-unit loss probability");
    compare->add_option("--corrupt", cp.corrupt, "Per-unit corruption probability");
    add_format_flags(compare, cp.format, cp.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table1->parsed()) return cmd_table1(t1);
        if (csma->parsed()) return cmd_sim_csmacd(cs);
        if (eftp->parsed()) return cmd_sim_eftp(ef);
        if (oae->parsed()) return cmd_sim_oae(oa);
        if (compare->parsed()) return cmd_compare(cp);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
