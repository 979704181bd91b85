#pragma once

#include <stdexcept>
#include <string>

namespace wordseed {

/// Bad invocation: unknown flags, malformed arguments, missing required options.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad data: unreadable files, malformed word lists, domain violations.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wordseed
