#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smsgw {

// Canonical phone number: 1-15 decimal digits, no "+", no separators.
// Equality is exact digit-string identity; there is deliberately no
// prefix or national-format matching.
class PhoneNumber {
public:
    PhoneNumber() = default;
    explicit PhoneNumber(std::string digits);

    const std::string& digits() const { return digits_; }
    bool empty() const { return digits_.empty(); }

    auto operator<=>(const PhoneNumber&) const = default;

private:
    std::string digits_;
};

struct PhoneParseError : std::runtime_error {
    enum class Kind { EmptyNumber, InvalidCharacter, TooLong };
    Kind kind;
    std::size_t position; // for InvalidCharacter: offset into the raw input
    PhoneParseError(Kind k, std::size_t pos, const std::string& what)
        : std::runtime_error(what), kind(k), position(pos) {}
};

// Strips one leading "+" plus any spaces and hyphens, then validates.
PhoneNumber parse_phone_number(std::string_view raw);

inline bool same_number(const PhoneNumber& a, const PhoneNumber& b) {
    return a.digits() == b.digits();
}

enum class Ton : std::uint8_t { International = 1, National = 2, Unknown = 0 };
enum class Npi : std::uint8_t { Isdn = 1, Unknown = 0 };

struct SmsAddress {
    Ton ton = Ton::International;
    Npi npi = Npi::Isdn;
    PhoneNumber number;

    bool operator==(const SmsAddress&) const = default;
};

inline SmsAddress make_address(PhoneNumber n) {
    return SmsAddress{Ton::International, Npi::Isdn, std::move(n)};
}

} // namespace smsgw
