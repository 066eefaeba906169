#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace smsgw::crypto {

std::array<std::uint8_t, 16> md5(std::string_view data);

// lowercase hex
std::string md5_hex(std::string_view data);

std::string to_hex(const std::uint8_t* data, std::size_t len);

std::string base64_encode(std::string_view data);

} // namespace smsgw::crypto
