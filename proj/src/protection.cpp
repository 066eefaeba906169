#include "smsgw/protection.hpp"

#include <charconv>
#include <stdexcept>

namespace smsgw::protection {

Ipv4 Ipv4::parse(std::string_view dotted) {
    std::uint32_t value = 0;
    const char* p = dotted.data();
    const char* end = dotted.data() + dotted.size();
    for (int octet = 0; octet < 4; ++octet) {
        unsigned v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{} || v > 255 || next == p)
            throw std::invalid_argument("bad IPv4 address: " + std::string(dotted));
        value = (value << 8) | v;
        p = next;
        if (octet < 3) {
            if (p == end || *p != '.')
                throw std::invalid_argument("bad IPv4 address: " + std::string(dotted));
            ++p;
        }
    }
    if (p != end)
        throw std::invalid_argument("bad IPv4 address: " + std::string(dotted));
    return Ipv4{value};
}

std::string Ipv4::to_string() const {
    return std::to_string((value >> 24) & 0xff) + "." + std::to_string((value >> 16) & 0xff) +
           "." + std::to_string((value >> 8) & 0xff) + "." + std::to_string(value & 0xff);
}

IpBlockTable::IpBlockTable(std::uint32_t threshold) : threshold_(threshold) {
    if (threshold_ == 0)
        throw std::invalid_argument("block threshold must be positive");
}

std::uint32_t IpBlockTable::failures(Ipv4 ip) const {
    auto it = failure_counts_.find(ip);
    return it == failure_counts_.end() ? 0 : it->second;
}

bool IpBlockTable::record_failure(Ipv4 ip) {
    std::uint32_t& count = failure_counts_[ip];
    ++count;
    if (count >= threshold_ && !blocked_.contains(ip)) {
        blocked_.insert(ip);
        return true;
    }
    return false;
}

void IpBlockTable::record_success(Ipv4 ip) {
    failure_counts_.erase(ip);
}

void IpBlockTable::unblock(std::optional<Ipv4> ip) {
    if (ip) {
        blocked_.erase(*ip);
        failure_counts_.erase(*ip);
    } else {
        for (Ipv4 b : blocked_)
            failure_counts_.erase(b);
        blocked_.clear();
    }
}

SshService::SshService(std::string valid_password, IpBlockTable& table)
    : valid_password_(std::move(valid_password)), table_(table) {}

LoginResult SshService::attempt_login(Ipv4 src, std::string_view password) {
    if (table_.is_blocked(src))
        return LoginResult::Blocked;
    if (password == valid_password_) {
        table_.record_success(src);
        return LoginResult::Success;
    }
    table_.record_failure(src);
    return LoginResult::Failed;
}

} // namespace smsgw::protection
