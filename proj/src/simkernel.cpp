#include "ethersim/simkernel.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

namespace ethersim::sim {

bool SeededRng::bernoulli(double probability) {
    if (!(probability >= 0.0) || probability > 1.0)
        throw std::domain_error("bernoulli probability must lie in [0, 1]");
    return uniform01() < probability;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the three inputs, applied twice to decouple
    // nearby (a, b) pairs.
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    return mix(mix(base ^ mix(a)) ^ mix(b));
}

std::uint64_t EventQueue::schedule(double fire_time, EventKind kind,
                                   std::function<void()> handler) {
    if (fire_time < clock_.now()) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "event scheduled into the past: fire=%.9g now=%.9g",
                      fire_time, clock_.now());
        throw std::logic_error(buf);
    }
    const std::uint64_t seq = next_sequence_++;
    heap_.push(Entry{fire_time, seq, kind, std::move(handler)});
    return seq;
}

RunResult EventQueue::run_until(double stop_time) {
    if (stop_time < clock_.now()) throw std::logic_error("run_until stop_time precedes clock");
    RunResult result;
    result.final_time = stop_time;
    while (!heap_.empty() && heap_.top().fire_time <= stop_time) {
        Entry entry = heap_.top();
        heap_.pop();
        clock_.now_ = entry.fire_time;
        result.final_time = entry.fire_time;
        ++result.events_processed;
        try {
            entry.handler();
        } catch (const std::exception& e) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "event handler failed at t=%.9gs after %llu events: %s",
                          entry.fire_time,
                          static_cast<unsigned long long>(result.events_processed), e.what());
            throw std::runtime_error(buf);
        }
    }
    return result;
}

void LinkModel::validate() const {
    if (!(capacity_C > 0.0)) throw std::domain_error("capacity_C must be positive");
    if (propagation_tau < 0.0) throw std::domain_error("propagation_tau must be non-negative");
    if (loss_prob < 0.0 || loss_prob > 1.0)
        throw std::domain_error("loss_prob must lie in [0, 1]");
    if (corrupt_prob < 0.0 || corrupt_prob > 1.0)
        throw std::domain_error("corrupt_prob must lie in [0, 1]");
}

DeliveryVerdict transmit(const LinkModel& link, double bits, double send_time, SeededRng& rng) {
    if (bits < 0.0) throw std::domain_error("bits must be non-negative");
    DeliveryVerdict verdict;
    verdict.arrival_time = send_time + bits / link.capacity_C + link.propagation_tau;
    const bool lost = rng.bernoulli(link.loss_prob);
    const bool damaged = rng.bernoulli(link.corrupt_prob);
    if (lost) {
        verdict.outcome = DeliveryOutcome::Lost;
    } else if (damaged) {
        verdict.outcome = DeliveryOutcome::Corrupted;
    }
    return verdict;
}

}  // namespace ethersim::sim
