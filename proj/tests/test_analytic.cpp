#include "doctest.h"

#include "ethersim/analytic.hpp"

#include <cmath>
#include <stdexcept>

using namespace ethersim::analytic;

// Reference values computed independently at extended precision.
namespace {
constexpr double kA256 = 0.3685995970675815;
constexpr double kW256 = 1.7129709526422877;
constexpr double kA10 = 0.387420489;
constexpr double kW10 = 1.5811747917131972;
constexpr double kE48 = 0.3685995970675815;
constexpr double kE512 = 0.8616299599941030;
constexpr double kE1024 = 0.9256726401167634;
constexpr double kE4096 = 0.9803211524407215;

EtherParams params_with(double packet_P, int stations_Q) {
    EtherParams p;
    p.packet_P = packet_P;
    p.stations_Q = stations_Q;
    return p;
}
}  // namespace

TEST_CASE("acquisition probability matches reference values") {
    CHECK(std::abs(acquisition_probability(256) - kA256) < 1e-12);
    CHECK(std::abs(acquisition_probability(10) - kA10) < 1e-12);
    CHECK(acquisition_probability(2) == 0.5);  // (1/2)^1, exact in binary
}

TEST_CASE("single-station medium never contends") {
    CHECK(acquisition_probability(1) == 1.0);
    CHECK(mean_contention_slots(1.0) == 0.0);
    auto stats = forward_efficiency(params_with(4096.0, 1));
    CHECK(stats.acquisition_A == 1.0);
    CHECK(stats.mean_slots_W == 0.0);
    CHECK(stats.efficiency_E == 1.0);
}

TEST_CASE("mean contention slots matches reference values") {
    CHECK(std::abs(mean_contention_slots(kA256) - kW256) < 1e-12);
    CHECK(std::abs(mean_contention_slots(kA10) - kW10) < 1e-12);
    CHECK(mean_contention_slots(0.5) == 1.0);
}

TEST_CASE("forward efficiency at the reference operating points") {
    CHECK(std::abs(forward_efficiency(params_with(48.0, 256)).efficiency_E - kE48) < 1e-12);
    CHECK(std::abs(forward_efficiency(params_with(512.0, 256)).efficiency_E - kE512) < 1e-12);
    CHECK(std::abs(forward_efficiency(params_with(1024.0, 256)).efficiency_E - kE1024) < 1e-12);
    CHECK(std::abs(forward_efficiency(params_with(4096.0, 256)).efficiency_E - kE4096) < 1e-12);
    CHECK(forward_efficiency(params_with(4096.0, 256)).efficiency_E > 0.98);
}

TEST_CASE("48-bit packets on a 16 microsecond slot degenerate to E == A") {
    // P/C equals slot_T here, so E = 1/(1 + W) = A.
    auto stats = forward_efficiency(params_with(48.0, 256));
    CHECK(std::abs(stats.efficiency_E - stats.acquisition_A) < 1e-15);
}

TEST_CASE("acquisition probability decreases toward its large-Q plateau") {
    double prev = acquisition_probability(1);
    for (int q = 2; q <= 512; q *= 2) {
        double a = acquisition_probability(q);
        CHECK(a < prev);
        CHECK(a > 0.36);  // bounded below by 1/e
        prev = a;
    }
}

TEST_CASE("efficiency is monotone in packet size and station count") {
    double prev_e = 0.0;
    for (double p : {48.0, 512.0, 1024.0, 4096.0}) {
        double e = forward_efficiency(params_with(p, 256)).efficiency_E;
        CHECK(e > prev_e);
        prev_e = e;
    }
    prev_e = 2.0;
    for (int q : {1, 2, 16, 64, 256}) {
        double e = forward_efficiency(params_with(4096.0, q)).efficiency_E;
        CHECK(e < prev_e);
        prev_e = e;
    }
}

TEST_CASE("efficiency is invariant under joint (P, C) scaling") {
    for (double k : {2.0, 10.0, 1000.0}) {
        for (int q : {2, 10, 256}) {
            EtherParams base = params_with(4096.0, q);
            EtherParams scaled = base;
            scaled.packet_P *= k;
            scaled.capacity_C *= k;
            double diff = forward_efficiency(base).efficiency_E -
                          forward_efficiency(scaled).efficiency_E;
            CHECK(std::abs(diff) <= 1e-12);
        }
    }
}

TEST_CASE("grid covers the cross product in row-major order") {
    auto cells = efficiency_grid({48.0, 4096.0}, {1, 2, 256}, 3.0e6, 16.0e-6);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0].packet_P == 48.0);
    CHECK(cells[0].stations_Q == 1);
    CHECK(cells[1].stations_Q == 2);
    CHECK(cells[2].stations_Q == 256);
    CHECK(cells[3].packet_P == 4096.0);
    CHECK(std::abs(cells[5].stats.efficiency_E - kE4096) < 1e-12);

    auto full = efficiency_grid(default_packet_sizes(), default_station_counts(), 3.0e6, 16.0e-6);
    CHECK(full.size() == 36);
}

TEST_CASE("grid rejects empty axes") {
    CHECK_THROWS_AS((void)efficiency_grid({}, {1}, 3.0e6, 16.0e-6), std::invalid_argument);
    CHECK_THROWS_AS((void)efficiency_grid({48.0}, {}, 3.0e6, 16.0e-6), std::invalid_argument);
}

TEST_CASE("bilateral efficiency edge cases are exact") {
    BilateralInputs in;
    in.n_committed = 100;
    in.n_attempted = 100;
    in.payload_duration_peff = 1.3653e-3;
    in.commit_overhead_dtc = 0.0;
    CHECK(bilateral_efficiency(in) == 1.0);

    in.n_committed = 0;
    in.commit_overhead_dtc = 9.6e-5;
    CHECK(bilateral_efficiency(in) == 0.0);

    in.n_committed = 100;
    double full = bilateral_efficiency(in);
    CHECK(full > 0.0);
    CHECK(full < 1.0);
    in.n_committed = 50;
    CHECK(std::abs(bilateral_efficiency(in) - 0.5 * full) < 1e-15);
}

TEST_CASE("bilateral efficiency shrinks as commit overhead grows") {
    BilateralInputs in;
    in.n_committed = 10;
    in.n_attempted = 10;
    in.payload_duration_peff = 1.0e-3;
    double prev = 2.0;
    for (double dtc : {0.0, 1e-5, 1e-4, 1e-3, 1e-2}) {
        in.commit_overhead_dtc = dtc;
        double e = bilateral_efficiency(in);
        CHECK(e < prev);
        CHECK(e <= 1.0);
        prev = e;
    }
}

TEST_CASE("bilateral efficiency rejects out-of-range inputs") {
    BilateralInputs in;
    in.n_committed = 5;
    in.n_attempted = 0;
    in.payload_duration_peff = 1e-3;
    CHECK_THROWS_AS((void)bilateral_efficiency(in), std::domain_error);

    in.n_attempted = 4;  // fewer attempted than committed
    CHECK_THROWS_AS((void)bilateral_efficiency(in), std::domain_error);

    in.n_attempted = 10;
    in.payload_duration_peff = 0.0;
    CHECK_THROWS_AS((void)bilateral_efficiency(in), std::domain_error);

    in.payload_duration_peff = 1e-3;
    in.commit_overhead_dtc = -1e-9;
    CHECK_THROWS_AS((void)bilateral_efficiency(in), std::domain_error);
}

TEST_CASE("parameter validation rejects each bad field") {
    EtherParams p;
    p.validate();  // defaults are fine

    p = EtherParams{};
    p.capacity_C = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = EtherParams{};
    p.slot_T = -1e-6;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = EtherParams{};
    p.packet_P = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = EtherParams{};
    p.stations_Q = 0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = EtherParams{};
    p.propagation_tau = -1e-9;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("acquisition and slot helpers reject bad arguments") {
    CHECK_THROWS_AS((void)acquisition_probability(0), std::domain_error);
    CHECK_THROWS_AS((void)acquisition_probability(-3), std::domain_error);
    CHECK_THROWS_AS((void)mean_contention_slots(0.0), std::domain_error);
    CHECK_THROWS_AS((void)mean_contention_slots(1.0000001), std::domain_error);
    CHECK_THROWS_AS((void)mean_contention_slots(-0.2), std::domain_error);
}

TEST_CASE("causal closure accepts T == 2*tau and flags anything shorter") {
    CHECK(validate_causal_closure(16e-6, 8e-6));
    CHECK(validate_causal_closure(16e-6, 0.0));
    CHECK_FALSE(validate_causal_closure(16e-6, 8.000001e-6));
    CHECK_THROWS_AS((void)validate_causal_closure(0.0, 1e-6), std::domain_error);
    CHECK_THROWS_AS((void)validate_causal_closure(16e-6, -1e-9), std::domain_error);
}

TEST_CASE("default axes are the documented ones") {
    auto sizes = default_packet_sizes();
    REQUIRE(sizes.size() == 4);
    CHECK(sizes.front() == 48.0);
    CHECK(sizes.back() == 4096.0);
    auto counts = default_station_counts();
    REQUIRE(counts.size() == 9);
    CHECK(counts.front() == 1);
    CHECK(counts.back() == 256);
    for (size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] == 2 * counts[i - 1]);
}
