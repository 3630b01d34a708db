#pragma once

// EFTP: stop-and-wait file transfer with per-packet ACKs, completed by a
// three-phase end-dally. The sender transmits END after the last data ACK;
// the receiver answers ENDREPLY and dallies; the sender echoes the ENDREPLY
// and departs assured; the echo, if it arrives, releases the receiver
// assured as well. A transaction is committed only under mutual assurance.
//
// The state machines are pure transition functions (same state and event,
// same result); run_transfer drives them over the simkernel event loop and
// classifies the outcome.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ethersim/report.hpp"
#include "ethersim/simkernel.hpp"

namespace ethersim::eftp {

enum class SenderPhase {
    Sending,            // data or END frame being serialized
    AwaitingAck,
    EndSent,            // END being serialized
    AwaitingEndReply,
    EchoSent,           // echo being serialized; already assured
    DepartedAssured,
    DepartedUnassured,
};

enum class ReceiverPhase {
    Receiving,
    EndReplySent,       // ENDREPLY being serialized
    Dallying,
    DepartedAssured,
    DallyExpired,
};

enum class Outcome { Committed, SenderOnlyAssured, ReceiverOnlyAssured, Failed };

[[nodiscard]] const char* to_string(SenderPhase phase);
[[nodiscard]] const char* to_string(ReceiverPhase phase);
[[nodiscard]] const char* to_string(Outcome outcome);

// Sender-side events. Timeout carries the generation stamped when its timer
// was armed; a stale generation is ignored, which is how superseded timers
// are cancelled.
struct Start {};
struct AckArrived { std::uint64_t seq; };
struct EndReplyArrived { std::uint64_t seq; };
struct SenderTimeout { std::uint64_t generation; };
using SenderEvent = std::variant<Start, AckArrived, EndReplyArrived, SenderTimeout>;

// Receiver-side events. ok=false marks a damaged data frame (discarded
// silently). Damaged control frames never surface as events at all.
struct DataArrived { std::uint64_t seq; bool ok; };
struct EndArrived { std::uint64_t seq; };
struct EchoArrived { std::uint64_t seq; };
struct DallyDeadline { std::uint64_t generation; };
using ReceiverEvent = std::variant<DataArrived, EndArrived, EchoArrived, DallyDeadline>;

struct SendData { std::uint64_t seq; };
struct SendEnd { std::uint64_t seq; };
struct SendEcho { std::uint64_t seq; };
struct Depart { bool assured; };
using SenderAction = std::variant<SendData, SendEnd, SendEcho, Depart>;

struct SendAck { std::uint64_t seq; };
struct SendEndReply { std::uint64_t seq; };
using ReceiverAction = std::variant<SendAck, SendEndReply, Depart>;

/// Data packets carry sequence numbers 0 .. total_packets-1; END carries
/// total_packets, the next consecutive number. timer_generation invalidates
/// any timeout armed before the most recent transition.
struct SenderState {
    SenderPhase phase = SenderPhase::Sending;
    std::uint64_t next_seq = 0;
    std::uint64_t total_packets = 0;
    int retries_left = 0;
    int retry_budget = 0;
    std::uint64_t timer_generation = 0;
    std::uint64_t stale_events = 0;
};

struct ReceiverState {
    ReceiverPhase phase = ReceiverPhase::Receiving;
    std::uint64_t expected_seq = 0;
    std::uint64_t dally_generation = 0;
    double dally_deadline = 0.0;
    std::uint64_t stale_events = 0;
};

/// Pure transition. Events illegal in the current phase (stale ACKs,
/// superseded timeouts, anything in a terminal phase) leave the state
/// unchanged apart from the stale_events counter and produce no actions.
/// The ACK that completes the last data packet yields SendEnd; a matching
/// ENDREPLY yields SendEcho plus Depart(assured). A timeout with no retries
/// left yields Depart(unassured).
[[nodiscard]] std::vector<SenderAction> sender_step(SenderState& state, const SenderEvent& event);

/// Pure transition, receiver side. In-order clean data is acknowledged and
/// delivered; duplicates are re-acknowledged, not re-delivered; damaged
/// data is discarded without any action. END at the expected sequence
/// yields SendEndReply. A duplicate END while dallying re-sends ENDREPLY
/// without re-arming the dally deadline. The echoed ENDREPLY departs the
/// receiver assured; the deadline departs it unassured.
[[nodiscard]] std::vector<ReceiverAction> receiver_step(ReceiverState& state,
                                                        const ReceiverEvent& event);

struct EftpConfig {
    double ctrl_bits = 48.0;  // ACK, END, ENDREPLY and echo frame size
    /// 0 means derive: 4 * (packet_P/C + 2*tau), comfortably above one
    /// data+ACK round trip so attempts never overlap.
    double ack_timeout_s = 0.0;
    double dally_s = 10.0;
    int retries = 5;  // per data packet and for the END phase, each
    bool collect_trace = false;
    /// Per-kind loss overrides for targeted fault injection; unset kinds
    /// use the link's loss_prob.
    std::optional<double> data_loss;
    std::optional<double> ack_loss;
    std::optional<double> end_loss;
    std::optional<double> endreply_loss;
    std::optional<double> echo_loss;
};

struct TransactionRecord {
    std::uint64_t attempt_id = 0;
    std::uint64_t bytes_transferred = 0;  // in-order payload bytes delivered
    bool sender_assured = false;
    bool receiver_assured = false;
    Outcome outcome = Outcome::Failed;
    double t_start = 0.0;
    /// Arrival of the last bit of the final data packet; absent when the
    /// forward phase never completed.
    std::optional<double> t_forward_done;
    /// Instant the receiver becomes assured (echo arrival); defined iff
    /// Committed.
    std::optional<double> t_commit;
    std::uint64_t retransmissions = 0;
};

struct TraceEvent {
    double time_s = 0.0;
    const char* actor = "";
    std::string event;
    std::uint64_t seq = 0;
    std::string phase_before;
    std::string phase_after;
};

/// `time_us,actor,event,seq,phase_before,phase_after`
[[nodiscard]] std::string render_trace_line(const TraceEvent& event);

struct TransferResult {
    TransactionRecord record;
    std::vector<TraceEvent> trace;  // populated when config.collect_trace
};

/// Runs one complete transfer to a terminal state on both sides. Every
/// waiting phase has a timeout, so termination is guaranteed; a run
/// exceeding its event budget throws std::logic_error (runner bug, not a
/// protocol outcome). Throws std::invalid_argument unless
/// file_bits >= packet_bits >= 1.
[[nodiscard]] TransferResult run_transfer(std::uint64_t file_bits, double packet_bits,
                                          const sim::LinkModel& link, const EftpConfig& config,
                                          std::uint64_t seed, std::uint64_t attempt_id = 0);

/// n_transfers independent transfers with per-transfer derived seeds.
/// P_eff is the payload serialization time file_bits/C; dT_commit averages
/// t_commit - t_forward_done over committed transfers and is absent when
/// none committed (E_B is then 0).
[[nodiscard]] report::BilateralReport measure_bilateral_efficiency_eftp(
    std::uint64_t n_transfers, std::uint64_t file_bits, double packet_bits,
    const sim::LinkModel& link, const EftpConfig& config, std::uint64_t seed);

}  // namespace ethersim::eftp
