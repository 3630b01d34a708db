#pragma once

// Full-duplex bilateral link with slice-by-slice selective acknowledgment.
// A 64-byte frame is eight 8-byte slices sent back-to-back at line rate;
// the receiver walks a four-level acknowledgment ladder as its clean
// consecutive prefix grows (8, 16, 32, 64 bytes) and each SACK races back
// on the return channel while the forward channel keeps transmitting. A
// frame is committed when the top-level SACK reaches the sender; with
// pipelining the commit overhead of a stream collapses to the final
// propagation leg, amortized across all frames.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ethersim/report.hpp"
#include "ethersim/simkernel.hpp"

namespace ethersim::oae {

inline constexpr int kSlicesPerFrame = 8;
inline constexpr double kSliceBits = 64.0;   // 8 bytes
inline constexpr double kFrameBits = 512.0;  // 64 bytes
inline constexpr double kSackBits = 64.0;    // SACKs are slice-sized

/// The knowledge ladder: each level reports a deeper degree of reception,
/// at a fixed byte threshold of clean consecutive payload.
enum class SackLevel {
    Sack00Information,    // 8 bytes: valid bits seen
    Sack01Knowledge,      // 16 bytes: captured in receiver registers
    Sack10Semantics,      // 32 bytes: partial decode possible
    Sack11Understanding,  // 64 bytes: full frame received and matched
};

[[nodiscard]] int byte_threshold(SackLevel level);
[[nodiscard]] const char* short_name(SackLevel level);  // "sack00" .. "sack11"

/// Highest level whose threshold is covered by bytes_ok; absent below 8.
/// bytes_ok must be slice-granular (a multiple of 8, at most 64), anything
/// else throws std::domain_error.
[[nodiscard]] std::optional<SackLevel> sack_level_for(int bytes_ok);

enum class SliceVerdict { Clean, Corrupted, Lost };

struct OaeFrame {
    std::uint64_t frame_id = 0;
    std::array<SliceVerdict, kSlicesPerFrame> slices{};
};

struct SackEvent {
    SackLevel level = SackLevel::Sack00Information;
    double emit_time = 0.0;     // receiver side
    double observe_time = 0.0;  // sender side, one propagation leg later
    int attempt = 0;

    bool operator==(const SackEvent&) const = default;
};

struct FrameRecord {
    std::uint64_t frame_id = 0;
    bool committed = false;
    /// Serialization end of the committing attempt (last attempt if the
    /// frame never committed).
    double t_forward_done = 0.0;
    /// Top-level SACK emission: the instant the receiver holds the whole
    /// frame. The sender's confirming observation follows one propagation
    /// leg later.
    std::optional<double> t_commit;
    std::vector<SackEvent> sack_events;
    OaeFrame frame;  // per-slice channel verdicts of the final attempt
    int transmissions = 0;
};

struct OaeConfig {
    /// Retransmissions allowed per frame beyond the first attempt. A frame
    /// whose ladder stalls is re-enqueued after a stall timeout of one
    /// frame time plus a round trip, measured from serialization end.
    int retransmit_budget = 5;
    /// Receiver-side delay between threshold crossing and SACK emission,
    /// per level. Zero by default.
    std::array<double, 4> level_processing_s{};
    bool collect_frames = false;
    bool collect_trace = false;
};

struct OaeRunReport {
    std::uint64_t frames_attempted = 0;
    std::uint64_t frames_committed = 0;
    double payload_time_peff_s = 0.0;
    /// Mean per-frame return-channel time not overlapped with forward
    /// activity. For a clean stream this is the final propagation leg
    /// divided by the frame count.
    double delta_t_commit_s = 0.0;
    double e_b_oae = 0.0;
    std::array<std::uint64_t, 4> sack_counts{};
    double duration_s = 0.0;
    std::uint64_t retransmissions = 0;
    std::uint64_t seed = 0;
    std::vector<FrameRecord> frames;   // when collect_frames
    std::vector<std::string> trace;    // when collect_trace
};

/// One frame, one attempt (retransmission is a stream concern). The frame
/// argument supplies the identity; slice verdicts are drawn from the
/// channel and reported back in the record. The link must be full duplex
/// and satisfy causal closure (frame time >= 2*tau); violations throw
/// std::domain_error.
[[nodiscard]] FrameRecord run_frame(const sim::LinkModel& link, const OaeFrame& frame,
                                    double start_t, sim::SeededRng& rng,
                                    const OaeConfig& config = {});

/// n_frames transmitted back-to-back from virtual time zero, SACKs of one
/// frame overlapping transmission of the next. Stalled frames re-enter the
/// send queue until their budget runs out. A single-frame stream matches
/// run_frame exactly.
[[nodiscard]] OaeRunReport run_stream(std::uint64_t n_frames, const sim::LinkModel& link,
                                      const OaeConfig& config, std::uint64_t seed);

/// Restates the run as the generic bilateral report; e_b equals the run's
/// e_b_oae by construction.
[[nodiscard]] report::BilateralReport measure_bilateral_efficiency_oae(
    const OaeRunReport& run);

}  // namespace ethersim::oae
