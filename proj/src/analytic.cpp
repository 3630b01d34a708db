#include "ethersim/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace ethersim::analytic {

void EtherParams::validate() const {
    if (!(capacity_C > 0.0)) throw std::domain_error("capacity_C must be positive");
    if (!(slot_T > 0.0)) throw std::domain_error("slot_T must be positive");
    if (!(packet_P > 0.0)) throw std::domain_error("packet_P must be positive");
    if (stations_Q < 1) throw std::domain_error("stations_Q must be at least 1");
    if (propagation_tau < 0.0) throw std::domain_error("propagation_tau must be non-negative");
}

double acquisition_probability(int stations_Q) {
    if (stations_Q < 1) throw std::domain_error("stations_Q must be at least 1");
    if (stations_Q == 1) return 1.0;
    const double q = static_cast<double>(stations_Q);
    return std::pow(1.0 - 1.0 / q, q - 1.0);
}

double mean_contention_slots(double acquisition_A) {
    if (!(acquisition_A > 0.0) || acquisition_A > 1.0)
        throw std::domain_error("acquisition probability must lie in (0, 1]");
    return (1.0 - acquisition_A) / acquisition_A;
}

ContentionStats forward_efficiency(const EtherParams& params) {
    params.validate();
    ContentionStats stats;
    stats.acquisition_A = acquisition_probability(params.stations_Q);
    stats.mean_slots_W = mean_contention_slots(stats.acquisition_A);
    const double payload = params.packet_P / params.capacity_C;
    stats.efficiency_E = payload / (payload + stats.mean_slots_W * params.slot_T);
    return stats;
}

std::vector<GridCell> efficiency_grid(const std::vector<double>& packet_sizes,
                                      const std::vector<int>& station_counts,
                                      double capacity_C, double slot_T) {
    if (packet_sizes.empty()) throw std::invalid_argument("packet size list is empty");
    if (station_counts.empty()) throw std::invalid_argument("station count list is empty");
    std::vector<GridCell> grid;
    grid.reserve(packet_sizes.size() * station_counts.size());
    for (double p : packet_sizes) {
        for (int q : station_counts) {
            EtherParams params;
            params.capacity_C = capacity_C;
            params.slot_T = slot_T;
            params.packet_P = p;
            params.stations_Q = q;
            grid.push_back(GridCell{p, q, forward_efficiency(params)});
        }
    }
    return grid;
}

double bilateral_efficiency(const BilateralInputs& inputs) {
    if (inputs.n_attempted == 0) throw std::domain_error("n_attempted must be positive");
    if (inputs.n_committed > inputs.n_attempted)
        throw std::domain_error("n_committed cannot exceed n_attempted");
    if (!(inputs.payload_duration_peff > 0.0))
        throw std::domain_error("payload duration must be positive");
    if (inputs.commit_overhead_dtc < 0.0)
        throw std::domain_error("commit overhead must be non-negative");
    const double commit_rate =
        static_cast<double>(inputs.n_committed) / static_cast<double>(inputs.n_attempted);
    return commit_rate * inputs.payload_duration_peff /
           (inputs.payload_duration_peff + inputs.commit_overhead_dtc);
}

bool validate_causal_closure(double window_T, double propagation_tau) {
    if (!(window_T > 0.0)) throw std::domain_error("window_T must be positive");
    if (propagation_tau < 0.0) throw std::domain_error("propagation_tau must be non-negative");
    return window_T >= 2.0 * propagation_tau;
}

std::vector<double> default_packet_sizes() { return {48.0, 512.0, 1024.0, 4096.0}; }

std::vector<int> default_station_counts() {
    std::vector<int> counts;
    for (int q = 1; q <= 256; q *= 2) counts.push_back(q);
    return counts;
}

}  // namespace ethersim::analytic
