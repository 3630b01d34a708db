#include "ethersim/csmacd.hpp"

#include <cmath>
#include <stdexcept>

namespace ethersim::csmacd {

SlotOutcome draw_slot(int stations_Q, sim::SeededRng& rng) {
    if (stations_Q < 1) throw std::domain_error("stations_Q must be at least 1");
    const double fire_prob = 1.0 / static_cast<double>(stations_Q);
    SlotOutcome outcome;
    for (int s = 0; s < stations_Q; ++s) {
        if (rng.bernoulli(fire_prob)) ++outcome.transmitters;
    }
    outcome.acquired = (outcome.transmitters == 1);
    return outcome;
}

ContentionRunReport simulate_contention(const analytic::EtherParams& params,
                                        std::uint64_t n_packets, std::uint64_t seed) {
    params.validate();
    if (n_packets < 1) throw std::invalid_argument("n_packets must be at least 1");

    sim::SeededRng rng(seed);
    ContentionRunReport report;
    report.params = params;
    report.seed = seed;

    double sum_slots = 0.0;
    double sum_slots_sq = 0.0;
    for (std::uint64_t pkt = 0; pkt < n_packets; ++pkt) {
        std::uint64_t failed_slots = 0;
        while (!draw_slot(params.stations_Q, rng).acquired) ++failed_slots;
        report.contention_slots_total += failed_slots;
        const double w = static_cast<double>(failed_slots);
        sum_slots += w;
        sum_slots_sq += w * w;
    }

    report.packets_completed = n_packets;
    const double n = static_cast<double>(n_packets);
    report.busy_time_s = n * (params.packet_P / params.capacity_C);
    report.total_time_s =
        report.busy_time_s + static_cast<double>(report.contention_slots_total) * params.slot_T;
    report.empirical_E = report.busy_time_s / report.total_time_s;
    report.empirical_W = sum_slots / n;
    if (n_packets > 1) {
        report.slots_sample_variance =
            (sum_slots_sq - sum_slots * sum_slots / n) / (n - 1.0);
    }
    return report;
}

std::vector<SweepRow> contention_sweep(const std::vector<double>& packet_sizes,
                                       const std::vector<int>& station_counts,
                                       double capacity_C, double slot_T,
                                       std::uint64_t n_packets, std::uint64_t base_seed) {
    const auto grid = analytic::efficiency_grid(packet_sizes, station_counts, capacity_C, slot_T);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const auto& cell : grid) {
        analytic::EtherParams params;
        params.capacity_C = capacity_C;
        params.slot_T = slot_T;
        params.packet_P = cell.packet_P;
        params.stations_Q = cell.stations_Q;
        const std::uint64_t cell_seed =
            sim::derive_seed(base_seed, static_cast<std::uint64_t>(cell.packet_P),
                             static_cast<std::uint64_t>(cell.stations_Q));
        const auto run = simulate_contention(params, n_packets, cell_seed);
        SweepRow row;
        row.packet_P = cell.packet_P;
        row.stations_Q = cell.stations_Q;
        row.analytic_E = cell.stats.efficiency_E;
        row.empirical_E = run.empirical_E;
        row.abs_diff = std::abs(row.empirical_E - row.analytic_E);
        row.cell_seed = cell_seed;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ethersim::csmacd
