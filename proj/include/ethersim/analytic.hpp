#pragma once

// Closed-form link efficiency models for a slotted contention Ethernet and
// for bilateral (mutually-acknowledged) transactions.
//
// Forward efficiency of a shared medium with Q continuously queued stations:
//
//   A = (1 - 1/Q)^(Q-1)          slot acquisition probability
//   W = (1 - A) / A              mean contention slots per packet
//   E = (P/C) / (P/C + W*T)      fraction of link time carrying good packets
//
// Bilateral efficiency of a transaction stream:
//
//   E_B = (N_committed / N_attempted) * P_eff / (P_eff + dT_commit)
//
// where P_eff is the payload serialization time of one transaction and
// dT_commit the marginal link time spent reaching mutual assurance beyond
// forward delivery.

#include <cstdint>
#include <vector>

namespace ethersim::analytic {

/// Parameter bundle shared by the analytic formulas and the simulators.
/// capacity_C in bits/s, slot_T and propagation_tau in seconds, packet_P in
/// bits, stations_Q a positive station count.
struct EtherParams {
    double capacity_C = 3.0e6;
    double slot_T = 16.0e-6;
    double packet_P = 4096.0;
    int stations_Q = 256;
    double propagation_tau = 0.0;

    /// Throws std::domain_error on non-positive C/T/P, Q < 1 or tau < 0.
    /// A slot_T < 2*tau configuration is constructible on purpose; it is
    /// surfaced by validate_causal_closure instead of rejected here.
    void validate() const;
};

/// Derived (A, W, E) triple for one parameter point.
struct ContentionStats {
    double acquisition_A = 0.0;
    double mean_slots_W = 0.0;
    double efficiency_E = 0.0;
};

/// Measured inputs of the bilateral efficiency formula.
struct BilateralInputs {
    std::uint64_t n_committed = 0;
    std::uint64_t n_attempted = 0;
    double payload_duration_peff = 0.0;  // seconds
    double commit_overhead_dtc = 0.0;    // seconds, >= 0
};

/// One grid entry, keyed by (packet size, station count).
struct GridCell {
    double packet_P = 0.0;
    int stations_Q = 0;
    ContentionStats stats;
};

/// A = (1 - 1/Q)^(Q-1). A(1) is exactly 1 (empty product). Throws
/// std::domain_error for Q < 1.
[[nodiscard]] double acquisition_probability(int stations_Q);

/// W = (1 - A)/A, the mean of a geometric number of failed slots before the
/// first acquisition. Throws std::domain_error unless 0 < A <= 1.
[[nodiscard]] double mean_contention_slots(double acquisition_A);

/// Full (A, W, E) triple for one parameter point.
[[nodiscard]] ContentionStats forward_efficiency(const EtherParams& params);

/// One ContentionStats per (P, Q) pair, row-major by P then Q.
/// Throws std::invalid_argument on empty lists.
[[nodiscard]] std::vector<GridCell> efficiency_grid(const std::vector<double>& packet_sizes,
                                                    const std::vector<int>& station_counts,
                                                    double capacity_C, double slot_T);

/// E_B per the formula above. Throws std::domain_error when n_attempted is
/// zero or the inputs violate their range constraints.
[[nodiscard]] double bilateral_efficiency(const BilateralInputs& inputs);

/// True iff T >= 2*tau: the window is long enough for a signal to make a
/// round trip before it closes. Throws std::domain_error on T <= 0 or
/// tau < 0.
[[nodiscard]] bool validate_causal_closure(double window_T, double propagation_tau);

/// Default grid axes: packet sizes {48, 512, 1024, 4096} bits and station
/// counts 1, 2, 4, ..., 256 (36 cells).
[[nodiscard]] std::vector<double> default_packet_sizes();
[[nodiscard]] std::vector<int> default_station_counts();

}  // namespace ethersim::analytic
