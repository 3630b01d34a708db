#include "ethersim/eftp.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "ethersim/analytic.hpp"

namespace ethersim::eftp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

const char* to_string(SenderPhase phase) {
    switch (phase) {
        case SenderPhase::Sending: return "Sending";
        case SenderPhase::AwaitingAck: return "AwaitingAck";
        case SenderPhase::EndSent: return "EndSent";
        case SenderPhase::AwaitingEndReply: return "AwaitingEndReply";
        case SenderPhase::EchoSent: return "EchoSent";
        case SenderPhase::DepartedAssured: return "DepartedAssured";
        case SenderPhase::DepartedUnassured: return "DepartedUnassured";
    }
    return "unknown";
}

const char* to_string(ReceiverPhase phase) {
    switch (phase) {
        case ReceiverPhase::Receiving: return "Receiving";
        case ReceiverPhase::EndReplySent: return "EndReplySent";
        case ReceiverPhase::Dallying: return "Dallying";
        case ReceiverPhase::DepartedAssured: return "DepartedAssured";
        case ReceiverPhase::DallyExpired: return "DallyExpired";
    }
    return "unknown";
}

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Committed: return "Committed";
        case Outcome::SenderOnlyAssured: return "SenderOnlyAssured";
        case Outcome::ReceiverOnlyAssured: return "ReceiverOnlyAssured";
        case Outcome::Failed: return "Failed";
    }
    return "unknown";
}

std::vector<SenderAction> sender_step(SenderState& state, const SenderEvent& event) {
    std::vector<SenderAction> actions;
    std::visit(
        overloaded{
            [&](const Start&) {
                if (state.phase == SenderPhase::Sending && state.next_seq == 0) {
                    actions.push_back(SendData{0});
                } else {
                    ++state.stale_events;
                }
            },
            [&](const AckArrived& ack) {
                if (state.phase != SenderPhase::AwaitingAck || ack.seq != state.next_seq) {
                    ++state.stale_events;
                    return;
                }
                ++state.timer_generation;
                state.retries_left = state.retry_budget;
                ++state.next_seq;
                if (state.next_seq < state.total_packets) {
                    state.phase = SenderPhase::Sending;
                    actions.push_back(SendData{state.next_seq});
                } else {
                    state.phase = SenderPhase::EndSent;
                    actions.push_back(SendEnd{state.total_packets});
                }
            },
            [&](const EndReplyArrived& reply) {
                if (state.phase != SenderPhase::AwaitingEndReply ||
                    reply.seq != state.total_packets) {
                    ++state.stale_events;
                    return;
                }
                ++state.timer_generation;
                state.phase = SenderPhase::EchoSent;
                actions.push_back(SendEcho{state.total_packets});
                actions.push_back(Depart{true});
            },
            [&](const SenderTimeout& timeout) {
                const bool waiting = state.phase == SenderPhase::AwaitingAck ||
                                     state.phase == SenderPhase::AwaitingEndReply;
                if (!waiting || timeout.generation != state.timer_generation) {
                    ++state.stale_events;
                    return;
                }
                ++state.timer_generation;
                if (state.retries_left > 0) {
                    --state.retries_left;
                    if (state.phase == SenderPhase::AwaitingAck) {
                        state.phase = SenderPhase::Sending;
                        actions.push_back(SendData{state.next_seq});
                    } else {
                        state.phase = SenderPhase::EndSent;
                        actions.push_back(SendEnd{state.total_packets});
                    }
                } else {
                    state.phase = SenderPhase::DepartedUnassured;
                    actions.push_back(Depart{false});
                }
            },
        },
        event);
    return actions;
}

std::vector<ReceiverAction> receiver_step(ReceiverState& state, const ReceiverEvent& event) {
    std::vector<ReceiverAction> actions;
    std::visit(
        overloaded{
            [&](const DataArrived& data) {
                if (state.phase != ReceiverPhase::Receiving) {
                    ++state.stale_events;
                    return;
                }
                if (!data.ok) return;  // damaged: silent discard
                if (data.seq == state.expected_seq) {
                    ++state.expected_seq;
                    actions.push_back(SendAck{data.seq});
                } else if (data.seq < state.expected_seq) {
                    actions.push_back(SendAck{data.seq});  // duplicate: re-ACK only
                } else {
                    ++state.stale_events;  // gap: impossible under stop-and-wait
                }
            },
            [&](const EndArrived& end) {
                if (end.seq == state.expected_seq && state.phase == ReceiverPhase::Receiving) {
                    state.phase = ReceiverPhase::EndReplySent;
                    actions.push_back(SendEndReply{end.seq});
                } else if (end.seq == state.expected_seq &&
                           state.phase == ReceiverPhase::Dallying) {
                    // Duplicate END (our ENDREPLY was lost): re-send it, keep
                    // the original dally deadline.
                    actions.push_back(SendEndReply{end.seq});
                } else {
                    ++state.stale_events;
                }
            },
            [&](const EchoArrived& echo) {
                const bool awaiting = state.phase == ReceiverPhase::Dallying ||
                                      state.phase == ReceiverPhase::EndReplySent;
                if (awaiting && echo.seq == state.expected_seq) {
                    ++state.dally_generation;
                    state.phase = ReceiverPhase::DepartedAssured;
                    actions.push_back(Depart{true});
                } else {
                    ++state.stale_events;
                }
            },
            [&](const DallyDeadline& deadline) {
                if (state.phase == ReceiverPhase::Dallying &&
                    deadline.generation == state.dally_generation) {
                    state.phase = ReceiverPhase::DallyExpired;
                    actions.push_back(Depart{false});
                } else {
                    ++state.stale_events;
                }
            },
        },
        event);
    return actions;
}

std::string render_trace_line(const TraceEvent& event) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", event.time_s * 1e6);
    std::string line = buf;
    line += ',';
    line += event.actor;
    line += ',';
    line += event.event;
    line += ',';
    line += std::to_string(event.seq);
    line += ',';
    line += event.phase_before;
    line += ',';
    line += event.phase_after;
    return line;
}

namespace {

enum class FrameKind { Data, Ack, End, EndReply, Echo };

struct TransferRunner {
    const sim::LinkModel& link;
    const EftpConfig& cfg;
    std::uint64_t file_bits;
    double packet_bits;
    std::uint64_t total_packets;
    double ack_timeout;
    std::uint64_t event_budget;

    sim::SeededRng rng;
    sim::VirtualClock clock;
    sim::EventQueue queue{clock};
    SenderState snd;
    ReceiverState rcv;
    TransferResult result;
    std::uint64_t delivered_bits = 0;
    std::uint64_t events_dispatched = 0;

    TransferRunner(std::uint64_t file, double packet, const sim::LinkModel& l,
                   const EftpConfig& c, std::uint64_t seed)
        : link(l), cfg(c), file_bits(file), packet_bits(packet), rng(seed) {
        total_packets = static_cast<std::uint64_t>(
            std::ceil(static_cast<double>(file_bits) / packet_bits));
        ack_timeout = cfg.ack_timeout_s > 0.0
                          ? cfg.ack_timeout_s
                          : 4.0 * (packet_bits / link.capacity_C + 2.0 * link.propagation_tau);
        event_budget = 64 * (total_packets + 2) * (static_cast<std::uint64_t>(cfg.retries) + 2) +
                       1024;
        snd.total_packets = total_packets;
        snd.retry_budget = cfg.retries;
        snd.retries_left = cfg.retries;
    }

    double data_bits(std::uint64_t seq) const {
        const double sent_before = static_cast<double>(seq) * packet_bits;
        const double remaining = static_cast<double>(file_bits) - sent_before;
        return remaining < packet_bits ? remaining : packet_bits;
    }

    sim::LinkModel kind_link(FrameKind kind) const {
        sim::LinkModel l = link;
        const std::optional<double>* override_loss = nullptr;
        switch (kind) {
            case FrameKind::Data: override_loss = &cfg.data_loss; break;
            case FrameKind::Ack: override_loss = &cfg.ack_loss; break;
            case FrameKind::End: override_loss = &cfg.end_loss; break;
            case FrameKind::EndReply: override_loss = &cfg.endreply_loss; break;
            case FrameKind::Echo: override_loss = &cfg.echo_loss; break;
        }
        if (override_loss->has_value()) l.loss_prob = **override_loss;
        return l;
    }

    void trace(const char* actor, const char* what, std::uint64_t seq, const char* before,
               const char* after) {
        if (!cfg.collect_trace) return;
        result.trace.push_back(TraceEvent{clock.now(), actor, what, seq, before, after});
    }

    void charge_event() {
        if (++events_dispatched > event_budget)
            throw std::logic_error("transfer event budget exceeded: runner bug");
    }

    void perform(const SenderAction& action) {
        std::visit(overloaded{
                       [&](const SendData& a) { sender_transmit(FrameKind::Data, a.seq); },
                       [&](const SendEnd& a) { sender_transmit(FrameKind::End, a.seq); },
                       [&](const SendEcho& a) { sender_transmit(FrameKind::Echo, a.seq); },
                       [&](const Depart& a) {
                           result.record.sender_assured = a.assured;
                           trace("sender", a.assured ? "depart_assured" : "depart_unassured", 0,
                                 to_string(snd.phase), to_string(snd.phase));
                       },
                   },
                   action);
    }

    void perform(const ReceiverAction& action) {
        std::visit(overloaded{
                       [&](const SendAck& a) { receiver_transmit(FrameKind::Ack, a.seq); },
                       [&](const SendEndReply& a) {
                           receiver_transmit(FrameKind::EndReply, a.seq);
                       },
                       [&](const Depart& a) {
                           result.record.receiver_assured = a.assured;
                           if (a.assured) result.record.t_commit = clock.now();
                           trace("receiver", a.assured ? "depart_assured" : "depart_unassured",
                                 0, to_string(rcv.phase), to_string(rcv.phase));
                       },
                   },
                   action);
    }

    void sender_dispatch(const SenderEvent& event, const char* what, std::uint64_t seq) {
        charge_event();
        const char* before = to_string(snd.phase);
        const auto actions = sender_step(snd, event);
        trace("sender", what, seq, before, to_string(snd.phase));
        const bool is_timeout = std::holds_alternative<SenderTimeout>(event);
        for (const auto& action : actions) {
            if (is_timeout && (std::holds_alternative<SendData>(action) ||
                               std::holds_alternative<SendEnd>(action)))
                ++result.record.retransmissions;
            perform(action);
        }
    }

    void receiver_dispatch(const ReceiverEvent& event, const char* what, std::uint64_t seq) {
        charge_event();
        const char* before = to_string(rcv.phase);
        const std::uint64_t expected_before = rcv.expected_seq;
        const auto actions = receiver_step(rcv, event);
        trace("receiver", what, seq, before, to_string(rcv.phase));
        if (rcv.expected_seq > expected_before) {
            delivered_bits += static_cast<std::uint64_t>(data_bits(expected_before));
            if (rcv.expected_seq == total_packets)
                result.record.t_forward_done = clock.now();
        }
        for (const auto& action : actions) perform(action);
    }

    void sender_transmit(FrameKind kind, std::uint64_t seq) {
        const double bits = kind == FrameKind::Data ? data_bits(seq) : cfg.ctrl_bits;
        const double send_time = clock.now();
        const auto verdict = sim::transmit(kind_link(kind), bits, send_time, rng);
        const double tx_end = send_time + bits / link.capacity_C;
        const char* what = kind == FrameKind::Data ? "send_data"
                           : kind == FrameKind::End ? "send_end"
                                                    : "send_echo";
        trace("sender", what, seq, to_string(snd.phase), to_string(snd.phase));

        queue.schedule(tx_end, sim::EventKind::SlotBoundary, [this, kind] {
            charge_event();
            switch (kind) {
                case FrameKind::Data:
                    snd.phase = SenderPhase::AwaitingAck;
                    arm_sender_timer();
                    break;
                case FrameKind::End:
                    snd.phase = SenderPhase::AwaitingEndReply;
                    arm_sender_timer();
                    break;
                case FrameKind::Echo:
                    snd.phase = SenderPhase::DepartedAssured;
                    break;
                default: break;
            }
        });

        if (verdict.outcome == sim::DeliveryOutcome::Lost) return;
        const bool clean = verdict.outcome == sim::DeliveryOutcome::Delivered;
        if (kind == FrameKind::Data) {
            queue.schedule(verdict.arrival_time, sim::EventKind::FrameArrival,
                           [this, seq, clean] {
                               receiver_dispatch(DataArrived{seq, clean},
                                                 clean ? "data_arrived" : "data_damaged", seq);
                           });
        } else if (clean) {  // damaged control frames vanish
            if (kind == FrameKind::End) {
                queue.schedule(verdict.arrival_time, sim::EventKind::FrameArrival, [this, seq] {
                    receiver_dispatch(EndArrived{seq}, "end_arrived", seq);
                });
            } else {
                queue.schedule(verdict.arrival_time, sim::EventKind::FrameArrival, [this, seq] {
                    receiver_dispatch(EchoArrived{seq}, "echo_arrived", seq);
                });
            }
        }
    }

    void receiver_transmit(FrameKind kind, std::uint64_t seq) {
        const double send_time = clock.now();
        const auto verdict = sim::transmit(kind_link(kind), cfg.ctrl_bits, send_time, rng);
        const double tx_end = send_time + cfg.ctrl_bits / link.capacity_C;
        trace("receiver", kind == FrameKind::Ack ? "send_ack" : "send_endreply", seq,
              to_string(rcv.phase), to_string(rcv.phase));

        if (kind == FrameKind::EndReply) {
            queue.schedule(tx_end, sim::EventKind::SlotBoundary, [this] {
                charge_event();
                if (rcv.phase != ReceiverPhase::EndReplySent) return;  // duplicate re-send
                rcv.phase = ReceiverPhase::Dallying;
                rcv.dally_deadline = clock.now() + cfg.dally_s;
                const std::uint64_t gen = rcv.dally_generation;
                queue.schedule(rcv.dally_deadline, sim::EventKind::TimerExpiry, [this, gen] {
                    receiver_dispatch(DallyDeadline{gen}, "dally_deadline", 0);
                });
            });
        }

        if (verdict.outcome != sim::DeliveryOutcome::Delivered) return;
        if (kind == FrameKind::Ack) {
            queue.schedule(verdict.arrival_time, sim::EventKind::FrameArrival, [this, seq] {
                sender_dispatch(AckArrived{seq}, "ack_arrived", seq);
            });
        } else {
            queue.schedule(verdict.arrival_time, sim::EventKind::FrameArrival, [this, seq] {
                sender_dispatch(EndReplyArrived{seq}, "endreply_arrived", seq);
            });
        }
    }

    void arm_sender_timer() {
        const std::uint64_t gen = snd.timer_generation;
        queue.schedule(clock.now() + ack_timeout, sim::EventKind::TimerExpiry, [this, gen] {
            sender_dispatch(SenderTimeout{gen}, "timeout", snd.next_seq);
        });
    }

    TransferResult run(std::uint64_t attempt_id) {
        result.record.attempt_id = attempt_id;
        queue.schedule(0.0, sim::EventKind::SlotBoundary,
                       [this] { sender_dispatch(Start{}, "start", 0); });
        queue.run_until(std::numeric_limits<double>::infinity());

        auto& rec = result.record;
        rec.bytes_transferred = delivered_bits / 8;
        if (rec.sender_assured && rec.receiver_assured)
            rec.outcome = Outcome::Committed;
        else if (rec.sender_assured)
            rec.outcome = Outcome::SenderOnlyAssured;
        else if (rec.receiver_assured)
            rec.outcome = Outcome::ReceiverOnlyAssured;
        else
            rec.outcome = Outcome::Failed;
        return std::move(result);
    }
};

}  // namespace

TransferResult run_transfer(std::uint64_t file_bits, double packet_bits,
                            const sim::LinkModel& link, const EftpConfig& config,
                            std::uint64_t seed, std::uint64_t attempt_id) {
    link.validate();
    if (!(packet_bits >= 1.0)) throw std::invalid_argument("packet_bits must be at least 1");
    if (static_cast<double>(file_bits) < packet_bits)
        throw std::invalid_argument("file_bits must be at least one packet");
    if (config.ctrl_bits < 0.0) throw std::invalid_argument("ctrl_bits must be non-negative");
    if (config.retries < 0) throw std::invalid_argument("retries must be non-negative");
    if (config.dally_s < 0.0) throw std::invalid_argument("dally_s must be non-negative");
    if (config.ack_timeout_s < 0.0)
        throw std::invalid_argument("ack_timeout_s must be non-negative");
    for (const auto* p : {&config.data_loss, &config.ack_loss, &config.end_loss,
                          &config.endreply_loss, &config.echo_loss}) {
        if (p->has_value() && (**p < 0.0 || **p > 1.0))
            throw std::invalid_argument("loss override must lie in [0, 1]");
    }

    TransferRunner runner(file_bits, packet_bits, link, config, seed);
    return runner.run(attempt_id);
}

report::BilateralReport measure_bilateral_efficiency_eftp(std::uint64_t n_transfers,
                                                          std::uint64_t file_bits,
                                                          double packet_bits,
                                                          const sim::LinkModel& link,
                                                          const EftpConfig& config,
                                                          std::uint64_t seed) {
    if (n_transfers < 1) throw std::invalid_argument("n_transfers must be at least 1");
    report::BilateralReport rep;
    rep.n_attempted = n_transfers;
    rep.p_eff_s = static_cast<double>(file_bits) / link.capacity_C;

    EftpConfig batch_config = config;
    batch_config.collect_trace = false;
    double dt_sum = 0.0;
    for (std::uint64_t i = 0; i < n_transfers; ++i) {
        const std::uint64_t transfer_seed = sim::derive_seed(seed, i, 0x45465450ull);
        const auto res = run_transfer(file_bits, packet_bits, link, batch_config,
                                      transfer_seed, i);
        if (res.record.outcome == Outcome::Committed) {
            ++rep.n_committed;
            dt_sum += *res.record.t_commit - *res.record.t_forward_done;
        }
    }

    if (rep.n_committed > 0) {
        rep.dt_commit_s = dt_sum / static_cast<double>(rep.n_committed);
        analytic::BilateralInputs inputs;
        inputs.n_committed = rep.n_committed;
        inputs.n_attempted = rep.n_attempted;
        inputs.payload_duration_peff = rep.p_eff_s;
        inputs.commit_overhead_dtc = *rep.dt_commit_s;
        rep.e_b = analytic::bilateral_efficiency(inputs);
    } else {
        rep.e_b = 0.0;
    }
    return rep;
}

}  // namespace ethersim::eftp
