// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/hash.hpp"

#include <array>

namespace fixcrew {

std::string to_hex(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::array<char, 16> buf;
    for (int i = 15; i >= 0; --i) {
        buf[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return std::string(buf.data(), buf.size());
}

std::string digest(std::string_view data) {
    return to_hex(fnv1a64(data));
}

} // namespace fixcrew
