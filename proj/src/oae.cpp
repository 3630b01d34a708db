#include "ethersim/oae.hpp"

#include <cstdio>
#include <deque>
#include <limits>
#include <stdexcept>
#include <utility>

#include "ethersim/analytic.hpp"

namespace ethersim::oae {

int byte_threshold(SackLevel level) {
    switch (level) {
        case SackLevel::Sack00Information: return 8;
        case SackLevel::Sack01Knowledge: return 16;
        case SackLevel::Sack10Semantics: return 32;
        case SackLevel::Sack11Understanding: return 64;
    }
    return 0;
}

const char* short_name(SackLevel level) {
    switch (level) {
        case SackLevel::Sack00Information: return "sack00";
        case SackLevel::Sack01Knowledge: return "sack01";
        case SackLevel::Sack10Semantics: return "sack10";
        case SackLevel::Sack11Understanding: return "sack11";
    }
    return "sack??";
}

std::optional<SackLevel> sack_level_for(int bytes_ok) {
    if (bytes_ok < 0 || bytes_ok > 64 || bytes_ok % 8 != 0)
        throw std::domain_error("bytes_ok must be a multiple of 8 in [0, 64]");
    if (bytes_ok >= 64) return SackLevel::Sack11Understanding;
    if (bytes_ok >= 32) return SackLevel::Sack10Semantics;
    if (bytes_ok >= 16) return SackLevel::Sack01Knowledge;
    if (bytes_ok >= 8) return SackLevel::Sack00Information;
    return std::nullopt;
}

namespace {

const char* verdict_name(SliceVerdict verdict) {
    switch (verdict) {
        case SliceVerdict::Clean: return "clean";
        case SliceVerdict::Corrupted: return "corrupted";
        case SliceVerdict::Lost: return "lost";
    }
    return "unknown";
}

// Prefix lengths (in slices) at which a new ladder level is reached.
int level_index_for_prefix(int prefix_slices) {
    switch (prefix_slices) {
        case 1: return 0;
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        default: return -1;
    }
}

struct StreamEngine {
    const sim::LinkModel& link;
    const OaeConfig& cfg;
    std::uint64_t n_frames;
    double start_t;
    std::uint64_t first_frame_id;
    sim::SeededRng& rng;

    sim::VirtualClock clock;
    sim::EventQueue queue{clock};

    double slice_time;
    double frame_time;  // == 8 * slice_time with no rounding (binary scale)
    double stall_timeout;

    struct FrameState {
        std::uint64_t id = 0;
        int attempts = 0;
        bool committed = false;
        int rx_prefix = 0;  // clean consecutive slices held, across attempts
        std::vector<SackEvent> sacks;
        std::array<SliceVerdict, kSlicesPerFrame> last_verdicts{};
        double last_attempt_end = 0.0;
        double t_forward_done = 0.0;
        std::optional<double> t_commit;
    };
    std::vector<FrameState> frames;
    std::deque<std::uint64_t> pending;
    bool sender_busy = false;
    // While every attempt starts exactly where the previous one ended, slice
    // times come from the integer count of slices put on the wire, so the
    // zero-loss pipeline timing is exact. The first idle gap drops the
    // stream off that grid.
    std::uint64_t slices_reserved = 0;
    bool gapless = true;
    double next_free_time;

    std::array<std::uint64_t, 4> sack_counts{};
    std::uint64_t total_attempts = 0;
    std::uint64_t committed_count = 0;
    double last_fwd_arrival;
    double last_observe;
    std::vector<std::string> trace;

    StreamEngine(const sim::LinkModel& l, const OaeConfig& c, std::uint64_t n, double start,
                 std::uint64_t first_id, sim::SeededRng& r)
        : link(l), cfg(c), n_frames(n), start_t(start), first_frame_id(first_id), rng(r) {
        link.validate();
        if (!link.duplex_full)
            throw std::domain_error("slice feedback requires a full-duplex link");
        if (!analytic::validate_causal_closure(kFrameBits / link.capacity_C,
                                               link.propagation_tau))
            throw std::domain_error(
                "frame time must cover a round trip: 512/C >= 2*tau required");
        if (start_t < 0.0) throw std::invalid_argument("start_t must be non-negative");
        if (cfg.retransmit_budget < 0)
            throw std::invalid_argument("retransmit_budget must be non-negative");
        for (double p : cfg.level_processing_s)
            if (p < 0.0) throw std::invalid_argument("level processing must be non-negative");

        slice_time = kSliceBits / link.capacity_C;
        frame_time = kFrameBits / link.capacity_C;
        stall_timeout = frame_time + 2.0 * link.propagation_tau;
        next_free_time = start_t;
        last_fwd_arrival = start_t;
        last_observe = start_t;

        frames.resize(n_frames);
        for (std::uint64_t i = 0; i < n_frames; ++i) {
            frames[i].id = first_frame_id + i;
            pending.push_back(i);
        }
    }

    void add_trace(double t, const char* dir, std::uint64_t frame_idx, const char* what,
                   const std::string& detail) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.4f", t * 1e6);
        std::string line = buf;
        line += ',';
        line += dir;
        line += ',';
        line += std::to_string(frames[frame_idx].id);
        line += ',';
        line += what;
        line += ',';
        line += detail;
        trace.push_back(std::move(line));
    }

    void dispatch_next() {
        if (sender_busy || pending.empty()) return;
        sender_busy = true;
        const std::uint64_t f = pending.front();
        pending.pop_front();
        FrameState& fs = frames[f];
        ++fs.attempts;
        ++total_attempts;
        const int attempt = fs.attempts;

        const std::uint64_t base = slices_reserved;
        slices_reserved += kSlicesPerFrame;

        double tx_start = next_free_time > clock.now() ? next_free_time : clock.now();
        const double grid_start = start_t + static_cast<double>(base) * slice_time;
        if (gapless && tx_start == grid_start)
            tx_start = grid_start;
        else
            gapless = false;

        const bool on_grid = gapless;
        const double attempt_end =
            on_grid ? start_t + static_cast<double>(base + kSlicesPerFrame) * slice_time
                    : tx_start + frame_time;
        fs.last_attempt_end = attempt_end;
        next_free_time = attempt_end;

        for (int j = 0; j < kSlicesPerFrame; ++j) {
            const double completion =
                on_grid ? start_t + static_cast<double>(base + j + 1) * slice_time
                        : tx_start + static_cast<double>(j + 1) * slice_time;
            const double send_time = completion - slice_time;
            const auto verdict = sim::transmit(link, kSliceBits, send_time, rng);
            const SliceVerdict sv = verdict.outcome == sim::DeliveryOutcome::Delivered
                                        ? SliceVerdict::Clean
                                    : verdict.outcome == sim::DeliveryOutcome::Corrupted
                                        ? SliceVerdict::Corrupted
                                        : SliceVerdict::Lost;
            fs.last_verdicts[j] = sv;

            // Slice times come off the integer grid, not transmit()'s
            // accumulated sum, so back-to-back timing stays exact.
            const double arrival = completion + link.propagation_tau;
            if (arrival > last_fwd_arrival) last_fwd_arrival = arrival;

            if (cfg.collect_trace) {
                char what[16];
                std::snprintf(what, sizeof what, "slice%d", j);
                std::string w = what;
                std::string detail = std::string(verdict_name(sv)) +
                                     " attempt=" + std::to_string(attempt);
                queue.schedule(completion, sim::EventKind::SliceArrival,
                               [this, f, w, detail, completion] {
                                   add_trace(completion, "fwd", f, w.c_str(), detail);
                               });
            }
            if (sv != SliceVerdict::Lost) {
                const bool clean = sv == SliceVerdict::Clean;
                queue.schedule(arrival, sim::EventKind::SliceArrival,
                               [this, f, attempt, j, clean, completion] {
                                   on_slice(f, attempt, j, clean, completion);
                               });
            }
        }

        queue.schedule(attempt_end, sim::EventKind::SlotBoundary, [this] {
            sender_busy = false;
            dispatch_next();
        });
        queue.schedule(attempt_end + stall_timeout, sim::EventKind::TimerExpiry,
                       [this, f, attempt] { on_deadline(f, attempt); });
    }

    void on_slice(std::uint64_t f, int attempt, int j, bool clean, double completion) {
        FrameState& fs = frames[f];
        if (fs.committed || !clean) return;
        if (j != fs.rx_prefix) return;  // duplicate or a hole ahead of it
        ++fs.rx_prefix;
        const int level_idx = level_index_for_prefix(fs.rx_prefix);
        if (level_idx < 0) return;

        const double proc = cfg.level_processing_s[static_cast<std::size_t>(level_idx)];
        const double emit = clock.now() + proc;
        // Single expression off the slice completion: at zero processing the
        // observation lands at completion + 2*tau with one rounding.
        const double observe = completion + (2.0 * link.propagation_tau + proc);
        const SackLevel level = static_cast<SackLevel>(level_idx);
        fs.sacks.push_back(SackEvent{level, emit, observe, attempt});
        ++sack_counts[static_cast<std::size_t>(level_idx)];
        if (level == SackLevel::Sack11Understanding) fs.t_commit = emit;

        if (cfg.collect_trace) {
            queue.schedule(emit, sim::EventKind::FrameArrival, [this, f, level, attempt, emit] {
                add_trace(emit, "ret", f, short_name(level),
                          "emit attempt=" + std::to_string(attempt));
            });
        }
        queue.schedule(observe, sim::EventKind::FrameArrival,
                       [this, f, level, attempt] { on_observe(f, level, attempt); });
    }

    void on_observe(std::uint64_t f, SackLevel level, int attempt) {
        if (clock.now() > last_observe) last_observe = clock.now();
        if (cfg.collect_trace)
            add_trace(clock.now(), "ret", f, short_name(level),
                      "observe attempt=" + std::to_string(attempt));
        FrameState& fs = frames[f];
        if (level == SackLevel::Sack11Understanding && !fs.committed) {
            fs.committed = true;
            fs.t_forward_done = fs.last_attempt_end;
            ++committed_count;
        }
    }

    void on_deadline(std::uint64_t f, int attempt) {
        FrameState& fs = frames[f];
        if (fs.committed || attempt != fs.attempts) return;
        if (fs.attempts <= cfg.retransmit_budget) {
            pending.push_back(f);
            dispatch_next();
        }
        // else: budget exhausted, stays attempted-not-committed
    }

    OaeRunReport run() {
        queue.schedule(start_t, sim::EventKind::SlotBoundary, [this] { dispatch_next(); });
        queue.run_until(std::numeric_limits<double>::infinity());

        OaeRunReport rep;
        rep.frames_attempted = n_frames;
        rep.frames_committed = committed_count;
        rep.payload_time_peff_s = frame_time;
        rep.sack_counts = sack_counts;
        rep.retransmissions = total_attempts - n_frames;
        rep.duration_s =
            (last_observe > last_fwd_arrival ? last_observe : last_fwd_arrival) - start_t;
        const double non_overlap =
            last_observe > last_fwd_arrival ? last_observe - last_fwd_arrival : 0.0;
        rep.delta_t_commit_s = non_overlap / static_cast<double>(n_frames);

        analytic::BilateralInputs inputs;
        inputs.n_committed = committed_count;
        inputs.n_attempted = n_frames;
        inputs.payload_duration_peff = rep.payload_time_peff_s;
        inputs.commit_overhead_dtc = rep.delta_t_commit_s;
        rep.e_b_oae = analytic::bilateral_efficiency(inputs);

        if (cfg.collect_frames) {
            rep.frames.reserve(n_frames);
            for (auto& fs : frames) {
                FrameRecord rec;
                rec.frame_id = fs.id;
                rec.committed = fs.committed;
                rec.t_forward_done = fs.committed ? fs.t_forward_done : fs.last_attempt_end;
                rec.t_commit = fs.t_commit;
                rec.sack_events = std::move(fs.sacks);
                rec.frame.frame_id = fs.id;
                rec.frame.slices = fs.last_verdicts;
                rec.transmissions = fs.attempts;
                rep.frames.push_back(std::move(rec));
            }
        }
        if (cfg.collect_trace) rep.trace = std::move(trace);
        return rep;
    }
};

}  // namespace

FrameRecord run_frame(const sim::LinkModel& link, const OaeFrame& frame, double start_t,
                      sim::SeededRng& rng, const OaeConfig& config) {
    OaeConfig single = config;
    single.retransmit_budget = 0;  // one attempt; retransmission is stream-level
    single.collect_frames = true;
    StreamEngine engine(link, single, 1, start_t, frame.frame_id, rng);
    auto rep = engine.run();
    return std::move(rep.frames.front());
}

OaeRunReport run_stream(std::uint64_t n_frames, const sim::LinkModel& link,
                        const OaeConfig& config, std::uint64_t seed) {
    if (n_frames < 1) throw std::invalid_argument("n_frames must be at least 1");
    sim::SeededRng rng(seed);
    StreamEngine engine(link, config, n_frames, 0.0, 0, rng);
    auto rep = engine.run();
    rep.seed = seed;
    return rep;
}

report::BilateralReport measure_bilateral_efficiency_oae(const OaeRunReport& run) {
    report::BilateralReport rep;
    rep.n_attempted = run.frames_attempted;
    rep.n_committed = run.frames_committed;
    rep.p_eff_s = run.payload_time_peff_s;
    if (run.frames_committed > 0) rep.dt_commit_s = run.delta_t_commit_s;
    rep.e_b = run.e_b_oae;
    return rep;
}

}  // namespace ethersim::oae
