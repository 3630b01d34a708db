#pragma once

// Monte-Carlo model of the slotted contention cable: Q continuously queued
// stations, each firing independently with probability 1/Q per slot, a slot
// acquired iff exactly one fires. Transmission intervals of P/C seconds
// alternate with runs of failed slots of T seconds each. This is the
// empirical counterpart of the closed-form efficiency in analytic.hpp:
// per-slot firing at 1/Q is exactly the assumption behind A = (1-1/Q)^(Q-1),
// so no backoff policy is modeled.

#include <cstdint>
#include <vector>

#include "ethersim/analytic.hpp"
#include "ethersim/simkernel.hpp"

namespace ethersim::csmacd {

struct SlotOutcome {
    int transmitters = 0;
    bool acquired = false;
};

/// One contention slot: Q independent Bernoulli(1/Q) draws. Always consumes
/// exactly Q draws so the rng stream position is outcome-independent.
[[nodiscard]] SlotOutcome draw_slot(int stations_Q, sim::SeededRng& rng);

struct ContentionRunReport {
    std::uint64_t packets_completed = 0;
    std::uint64_t contention_slots_total = 0;
    double busy_time_s = 0.0;
    double total_time_s = 0.0;
    double empirical_E = 0.0;
    double empirical_W = 0.0;
    /// Unbiased sample variance of per-packet failed-slot counts; feeds the
    /// sigma estimates used by the statistical gates.
    double slots_sample_variance = 0.0;
    analytic::EtherParams params;
    std::uint64_t seed = 0;
};

/// Simulates exactly n_packets successful transmission intervals and the
/// failed slots preceding each. empirical_W counts only failed slots (an
/// immediately acquired slot charges zero). Throws std::invalid_argument
/// for n_packets < 1; parameter errors propagate from params.validate().
[[nodiscard]] ContentionRunReport simulate_contention(const analytic::EtherParams& params,
                                                      std::uint64_t n_packets,
                                                      std::uint64_t seed);

struct SweepRow {
    double packet_P = 0.0;
    int stations_Q = 0;
    double analytic_E = 0.0;
    double empirical_E = 0.0;
    double abs_diff = 0.0;
    std::uint64_t cell_seed = 0;
};

/// One row per (P, Q) cell, row-major by P then Q, each cell simulated with
/// a seed derived from (base_seed, P, Q) so results are independent of cell
/// execution order.
[[nodiscard]] std::vector<SweepRow> contention_sweep(const std::vector<double>& packet_sizes,
                                                     const std::vector<int>& station_counts,
                                                     double capacity_C, double slot_T,
                                                     std::uint64_t n_packets,
                                                     std::uint64_t base_seed);

}  // namespace ethersim::csmacd
