#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "smsgw/message.hpp"
#include "smsgw/phone.hpp"
#include "smsgw/smpp.hpp"

namespace smsgw::sim {

class Network;

class MessageSink {
public:
    virtual ~MessageSink() = default;
    virtual void on_message(const ShortMessage& msg, Network& net) = 0;
};

struct DeliveryEvent {
    LogicalTime tick;
    ShortMessage msg;
    bool delivered = false;
    std::string note;
};

struct SmscAccount {
    std::string system_id;
    std::string password;
    std::set<PhoneNumber> owned_numbers;
};

enum class OperatorPolicy { Permissive, VerifySource, OverwriteSource };

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateNumberError : SimError {
    using SimError::SimError;
};

// One mobile operator's SMPP submission interface. A session must be bound
// before submits are accepted; the spoofing policy is applied per submit.
class Operator {
public:
    class Session {
        friend class Operator;
        const SmscAccount* account_ = nullptr;

    public:
        bool bound() const { return account_ != nullptr; }
    };

    Operator(Network& net, std::string name, OperatorPolicy policy);

    void add_account(SmscAccount account); // throws SimError on duplicate system_id

    // Responds BindTransceiverResp; status 0 yields a usable session.
    smpp::Pdu bind(Session& session, const smpp::BindTransceiver& req,
                   std::uint32_t sequence_number);

    // Applies the operator policy. Permissive forwards the source address
    // unchanged; VerifySource rejects sources the account does not own;
    // OverwriteSource replaces the source with an account-owned number.
    smpp::Pdu submit(Session& session, const smpp::SubmitSm& req,
                     std::uint32_t sequence_number);

    const std::string& name() const { return name_; }
    OperatorPolicy policy() const { return policy_; }

private:
    Network& net_;
    std::string name_;
    OperatorPolicy policy_;
    std::map<std::string, SmscAccount> accounts_;
};

// Deterministic single-threaded event loop. Fixed latency, no loss, FIFO
// delivery order; identical inputs produce identical traces.
class Network {
public:
    explicit Network(std::uint64_t latency_ticks = 1);

    void register_subscriber(const PhoneNumber& number, MessageSink& endpoint);

    Operator& add_operator(std::string name, OperatorPolicy policy);

    // Enqueues a message for delivery at now + latency.
    void send(ShortMessage msg);

    void advance(std::uint64_t ticks) { now_.tick += ticks; }
    LogicalTime now() const { return now_; }

    // Drains the queue; returns the delivery events processed by this call.
    std::vector<DeliveryEvent> run_until_idle();

    const std::vector<DeliveryEvent>& trace() const { return trace_; }

    std::string next_message_id() { return std::to_string(++message_counter_); }

private:
    struct Pending {
        LogicalTime due;
        ShortMessage msg;
    };

    std::uint64_t latency_;
    LogicalTime now_;
    std::deque<Pending> queue_;
    std::map<PhoneNumber, MessageSink*> subscribers_;
    std::vector<std::unique_ptr<Operator>> operators_;
    std::vector<DeliveryEvent> trace_;
    std::uint64_t message_counter_ = 0;
};

// Scriptable handset stub: records everything it receives and can send.
class Handset : public MessageSink {
public:
    explicit Handset(PhoneNumber number) : number_(std::move(number)) {}

    const PhoneNumber& number() const { return number_; }
    const std::vector<ShortMessage>& inbox() const { return inbox_; }

    void on_message(const ShortMessage& msg, Network&) override { inbox_.push_back(msg); }

    void send(Network& net, const PhoneNumber& to, std::string text) const;

private:
    PhoneNumber number_;
    std::vector<ShortMessage> inbox_;
};

} // namespace smsgw::sim
