#pragma once

#include <string>
#include <string_view>

namespace testref {

// bit-buffer style base64, independent of the library's triple-at-a-time encoder
std::string base64(std::string_view data);

} // namespace testref
