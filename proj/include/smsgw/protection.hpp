#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace smsgw::protection {

struct Ipv4 {
    std::uint32_t value = 0;

    static Ipv4 parse(std::string_view dotted); // throws std::invalid_argument
    std::string to_string() const;

    auto operator<=>(const Ipv4&) const = default;
};

// Brute-force protection: an IP is blocked once its failure count since the
// last reset reaches the threshold, and stays blocked until unblocked.
class IpBlockTable {
public:
    explicit IpBlockTable(std::uint32_t threshold = 10);

    bool is_blocked(Ipv4 ip) const { return blocked_.contains(ip); }
    std::uint32_t failures(Ipv4 ip) const;
    std::uint32_t threshold() const { return threshold_; }
    std::size_t blocked_count() const { return blocked_.size(); }

    // Returns true if this failure crossed the threshold and blocked the ip.
    bool record_failure(Ipv4 ip);
    void record_success(Ipv4 ip);

    // Absent ip clears every block. Unblock zeroes the failure count.
    void unblock(std::optional<Ipv4> ip);

private:
    std::uint32_t threshold_;
    std::map<Ipv4, std::uint32_t> failure_counts_;
    std::set<Ipv4> blocked_;
};

enum class LoginResult { Blocked, Failed, Success };

// Minimal SSH login front-end over the shared block table. Blocked sources
// never reach credential evaluation.
class SshService {
public:
    SshService(std::string valid_password, IpBlockTable& table);

    LoginResult attempt_login(Ipv4 src, std::string_view password);

private:
    std::string valid_password_;
    IpBlockTable& table_;
};

} // namespace smsgw::protection
