#include "smsgw/auth.hpp"

#include <cctype>
#include <stdexcept>

#include "smsgw/crypto.hpp"

namespace smsgw::auth {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// splits off the first whitespace-separated token
std::pair<std::string_view, std::string_view> split_token(std::string_view s) {
    s = trim(s);
    std::size_t sp = s.find(' ');
    if (sp == std::string_view::npos)
        return {s, std::string_view{}};
    return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

bool is_hex32(std::string_view s) {
    if (s.size() != 32)
        return false;
    for (char c : s)
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

bool equals_constant_time(std::string_view a, std::string_view b) {
    unsigned char diff = a.size() == b.size() ? 0 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        diff |= static_cast<unsigned char>(a[i]) ^
                static_cast<unsigned char>(b[i % (b.empty() ? 1 : b.size())]);
    return diff == 0;
}

OriginAllowlist::OriginAllowlist(std::set<PhoneNumber> allowed) : allowed_(std::move(allowed)) {
    if (allowed_.empty())
        throw std::invalid_argument("origin allowlist must be nonempty");
}

Result OriginAllowlist::check(const PhoneNumber& origin, std::string_view text, LogicalTime) {
    if (allowed_.contains(origin))
        return Result::pass(std::string(text), "origin allowed");
    return Result::fail("origin not in allowlist");
}

StaticPassword::StaticPassword(std::string password) : password_(std::move(password)) {
    if (password_.empty() || password_.size() > 64)
        throw std::invalid_argument("static password must be 1-64 characters");
}

Result StaticPassword::check(const PhoneNumber&, std::string_view text, LogicalTime) {
    auto [token, rest] = split_token(text);
    if (equals_constant_time(token, password_))
        return Result::pass(std::string(rest), "password ok");
    return Result::fail("wrong password");
}

ChallengeResponse::ChallengeResponse(std::string password, std::uint64_t rng_seed,
                                     std::uint64_t nonce_ttl_ticks, HashFn hash)
    : password_(std::move(password)),
      nonce_ttl_(nonce_ttl_ticks),
      hash_(hash ? std::move(hash) : [](std::string_view d) { return crypto::md5_hex(d); }),
      rng_(rng_seed) {}

std::string ChallengeResponse::issue_challenge(const PhoneNumber& requester, LogicalTime now) {
    std::uint8_t nonce[16];
    for (auto& b : nonce)
        b = static_cast<std::uint8_t>(rng_());
    Session s{crypto::to_hex(nonce, sizeof nonce), now};
    sessions_[requester] = s; // a second "auth" overwrites the old nonce
    return "CHALLENGE " + s.nonce_hex;
}

std::string ChallengeResponse::compute_digest(std::string_view nonce_hex) const {
    std::string material = password_;
    material += nonce_hex;
    return hash_(material);
}

Result ChallengeResponse::verify_response(const PhoneNumber& origin, std::string_view text,
                                          LogicalTime now) {
    auto [keyword, rest] = split_token(text);
    if (keyword != "RESP")
        return Result::fail("expected RESP message");
    auto [digest, command] = split_token(rest);
    if (!is_hex32(digest))
        return Result::fail("malformed digest");

    auto it = sessions_.find(origin);
    if (it == sessions_.end())
        return Result::fail("no session for origin");
    const Session& s = it->second;
    if (now.tick > s.issued_at.tick + nonce_ttl_) {
        sessions_.erase(it);
        return Result::fail("nonce expired");
    }
    if (used_nonces_.contains(s.nonce_hex))
        return Result::fail("nonce already used");

    if (!equals_constant_time(lowercase(digest), compute_digest(s.nonce_hex)))
        return Result::fail("wrong digest");

    used_nonces_.insert(s.nonce_hex);
    sessions_.erase(it);
    return Result::pass(std::string(command), "challenge-response ok");
}

Result ChallengeResponse::check(const PhoneNumber& origin, std::string_view text,
                                LogicalTime now) {
    std::string_view trimmed = trim(text);
    if (trimmed == "auth")
        return Result::challenge(issue_challenge(origin, now), "challenge issued");
    return verify_response(origin, trimmed, now);
}

OmaDmBasic::OmaDmBasic(std::string user_id, std::string password)
    : user_id_(std::move(user_id)), password_(std::move(password)) {}

std::string OmaDmBasic::expected_token() const {
    return crypto::base64_encode(user_id_ + ":" + password_);
}

bool OmaDmBasic::verify_token(std::string_view token) const {
    return !token.empty() && equals_constant_time(token, expected_token());
}

Result OmaDmBasic::check(const PhoneNumber&, std::string_view text, LogicalTime) {
    auto [token, rest] = split_token(text);
    if (verify_token(token))
        return Result::pass(std::string(rest), "basic credential ok");
    return Result::fail("bad basic credential");
}

OmaDmDigest::OmaDmDigest(std::string user_id, std::string password, std::uint64_t rng_seed)
    : user_id_(std::move(user_id)), password_(std::move(password)), rng_(rng_seed) {
    rotate_nonce();
}

void OmaDmDigest::rotate_nonce() {
    std::uint8_t nonce[16];
    for (auto& b : nonce)
        b = static_cast<std::uint8_t>(rng_());
    server_nonce_ = crypto::to_hex(nonce, sizeof nonce);
}

std::string OmaDmDigest::expected_digest_hex() const {
    auto inner = crypto::md5(user_id_ + ":" + password_);
    std::string material =
        crypto::base64_encode(std::string_view(reinterpret_cast<const char*>(inner.data()),
                                               inner.size()));
    material += ":";
    material += server_nonce_;
    return crypto::md5_hex(material);
}

bool OmaDmDigest::verify_digest_hex(std::string_view digest_hex) {
    if (!is_hex32(digest_hex))
        return false;
    if (!equals_constant_time(lowercase(digest_hex), expected_digest_hex()))
        return false;
    rotate_nonce();
    return true;
}

Result OmaDmDigest::check(const PhoneNumber&, std::string_view text, LogicalTime) {
    auto [digest, rest] = split_token(text);
    if (verify_digest_hex(digest))
        return Result::pass(std::string(rest), "digest ok");
    return Result::fail("bad digest");
}

} // namespace smsgw::auth
