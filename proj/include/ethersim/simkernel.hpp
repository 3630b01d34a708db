#pragma once

// Deterministic discrete-event substrate shared by the protocol simulators:
// a virtual clock, an event queue with total ordering, seeded randomness,
// and a point-to-point link model with propagation delay and fault
// injection. One simulation run is strictly single-threaded; determinism is
// a hard contract (same seed, same config: bit-identical traces).

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <vector>

namespace ethersim::sim {

/// Seeded pseudo-random stream. mt19937_64 is specified bit-exactly by the
/// C++ standard, so the same seed reproduces the same draws on any
/// conforming implementation. The generator name travels in report headers.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    [[nodiscard]] static constexpr const char* name() { return "mt19937_64"; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    [[nodiscard]] std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random significand bits.
    [[nodiscard]] double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Consumes exactly one draw regardless of p. Throws std::domain_error
    /// for p outside [0, 1].
    [[nodiscard]] bool bernoulli(double probability);

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Stable per-cell seed derivation so sweeps can run cells in any order (or
/// in parallel) and still draw identical streams.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

enum class EventKind { FrameArrival, SliceArrival, TimerExpiry, SlotBoundary };

/// Virtual seconds. Advances only when the queue dequeues an event, and
/// only to that event's fire time; never backward.
class VirtualClock {
  public:
    [[nodiscard]] double now() const { return now_; }

  private:
    friend class EventQueue;
    double now_ = 0.0;
};

struct RunResult {
    double final_time = 0.0;
    std::uint64_t events_processed = 0;
};

/// Min-heap of events ordered by (fire_time, sequence). The sequence
/// counter makes simultaneous events fire in scheduling order, a total
/// order with no dependence on heap internals. The event payload lives in
/// the handler closure.
class EventQueue {
  public:
    explicit EventQueue(VirtualClock& clock) : clock_(clock) {}

    /// Enqueues a handler to fire at fire_time and returns its sequence
    /// number. Scheduling into the past is a bug in the caller:
    /// std::logic_error.
    std::uint64_t schedule(double fire_time, EventKind kind, std::function<void()> handler);

    /// Fires every event with fire_time <= stop_time in order; handlers may
    /// schedule further events. The returned reading is the last fire time,
    /// or the stop boundary when nothing fired. A throwing handler aborts
    /// the run; the exception is rethrown wrapped with the virtual time and
    /// event count reached.
    RunResult run_until(double stop_time);

    [[nodiscard]] bool empty() const { return heap_.empty(); }
    [[nodiscard]] std::size_t pending() const { return heap_.size(); }

  private:
    struct Entry {
        double fire_time;
        std::uint64_t sequence;
        EventKind kind;
        std::function<void()> handler;
        bool operator>(const Entry& other) const {
            if (fire_time != other.fire_time) return fire_time > other.fire_time;
            return sequence > other.sequence;
        }
    };

    VirtualClock& clock_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
    std::uint64_t next_sequence_ = 0;
};

/// Point-to-point channel. Loss and corruption are independent Bernoulli
/// draws per transmitted unit; there is no burst model. duplex_full is
/// false for the shared contention cable and true for the paired-fiber
/// configuration.
struct LinkModel {
    double capacity_C = 3.0e6;
    double propagation_tau = 8.0e-6;
    double loss_prob = 0.0;
    double corrupt_prob = 0.0;
    bool duplex_full = false;

    void validate() const;
};

enum class DeliveryOutcome { Delivered, Lost, Corrupted };

/// arrival_time is when the unit's last bit reaches the far end:
/// send_time + bits/C + tau. It is reported for corrupted units too (they
/// arrive, damaged) and for lost units as the time they would have arrived.
struct DeliveryVerdict {
    DeliveryOutcome outcome = DeliveryOutcome::Delivered;
    double arrival_time = 0.0;
};

/// Consumes exactly two rng draws per call (loss, then corruption), so the
/// stream position never depends on verdicts. Loss wins when both fire.
/// bits may be zero: a degenerate frame still crosses in tau seconds.
[[nodiscard]] DeliveryVerdict transmit(const LinkModel& link, double bits, double send_time,
                                       SeededRng& rng);

}  // namespace ethersim::sim
