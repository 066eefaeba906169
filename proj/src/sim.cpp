#include "smsgw/sim.hpp"

namespace smsgw::sim {

Operator::Operator(Network& net, std::string name, OperatorPolicy policy)
    : net_(net), name_(std::move(name)), policy_(policy) {}

void Operator::add_account(SmscAccount account) {
    if (accounts_.contains(account.system_id))
        throw SimError("duplicate system_id: " + account.system_id);
    accounts_.emplace(account.system_id, std::move(account));
}

smpp::Pdu Operator::bind(Session& session, const smpp::BindTransceiver& req,
                         std::uint32_t seq) {
    smpp::Pdu resp;
    resp.sequence_number = seq;
    auto it = accounts_.find(req.system_id);
    if (it == accounts_.end() || it->second.password != req.password) {
        resp.command_status = smpp::kStatusBindFailed;
        resp.body = smpp::BindTransceiverResp{};
        return resp;
    }
    session.account_ = &it->second;
    resp.command_status = smpp::kStatusOk;
    resp.body = smpp::BindTransceiverResp{name_};
    return resp;
}

smpp::Pdu Operator::submit(Session& session, const smpp::SubmitSm& req, std::uint32_t seq) {
    smpp::Pdu resp;
    resp.sequence_number = seq;
    if (!session.bound()) {
        resp.command_status = smpp::kStatusInvalidBindStatus;
        resp.body = smpp::SubmitSmResp{};
        return resp;
    }
    const SmscAccount& account = *session.account_;

    ShortMessage msg;
    msg.origin = req.source;
    msg.destination = req.destination;
    msg.text = req.short_message;
    msg.submitted_at = net_.now();

    switch (policy_) {
    case OperatorPolicy::Permissive:
        break; // source forwarded as submitted, spoofed or not
    case OperatorPolicy::VerifySource:
        if (!account.owned_numbers.contains(req.source.number)) {
            resp.command_status = smpp::kStatusInvalidSourceAddr;
            resp.body = smpp::SubmitSmResp{};
            return resp;
        }
        break;
    case OperatorPolicy::OverwriteSource:
        if (account.owned_numbers.empty()) {
            resp.command_status = smpp::kStatusInvalidSourceAddr;
            resp.body = smpp::SubmitSmResp{};
            return resp;
        }
        msg.origin = make_address(*account.owned_numbers.begin());
        break;
    }

    net_.send(std::move(msg));
    resp.command_status = smpp::kStatusOk;
    resp.body = smpp::SubmitSmResp{net_.next_message_id()};
    return resp;
}

Network::Network(std::uint64_t latency_ticks) : latency_(latency_ticks) {}

void Network::register_subscriber(const PhoneNumber& number, MessageSink& endpoint) {
    auto [it, inserted] = subscribers_.emplace(number, &endpoint);
    (void)it;
    if (!inserted)
        throw DuplicateNumberError("number already registered: " + number.digits());
}

Operator& Network::add_operator(std::string name, OperatorPolicy policy) {
    operators_.push_back(std::make_unique<Operator>(*this, std::move(name), policy));
    return *operators_.back();
}

void Network::send(ShortMessage msg) {
    msg.submitted_at = now_;
    queue_.push_back(Pending{LogicalTime{now_.tick + latency_}, std::move(msg)});
}

std::vector<DeliveryEvent> Network::run_until_idle() {
    std::size_t first = trace_.size();
    while (!queue_.empty()) {
        Pending p = std::move(queue_.front());
        queue_.pop_front();
        if (p.due.tick > now_.tick)
            now_ = p.due;

        DeliveryEvent ev;
        ev.tick = now_;
        ev.msg = p.msg;
        auto it = subscribers_.find(p.msg.destination.number);
        if (it == subscribers_.end()) {
            ev.delivered = false;
            ev.note = "undeliverable: no subscriber " + p.msg.destination.number.digits();
            trace_.push_back(ev);
            continue;
        }
        ev.delivered = true;
        trace_.push_back(ev);
        it->second->on_message(p.msg, *this);
    }
    return {trace_.begin() + static_cast<std::ptrdiff_t>(first), trace_.end()};
}

void Handset::send(Network& net, const PhoneNumber& to, std::string text) const {
    ShortMessage msg;
    msg.origin = make_address(number_);
    msg.destination = make_address(to);
    msg.text = std::move(text);
    net.send(std::move(msg));
}

} // namespace smsgw::sim
