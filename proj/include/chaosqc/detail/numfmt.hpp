// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <string>

namespace chaosqc::detail {

// Shortest decimal that round-trips to the same double.
inline std::string repr(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

}  // namespace chaosqc::detail
