#pragma once

#include <stdexcept>
#include <string>

namespace lexatom {

// Exit codes: 0 success, 2 argument/config error, 3 data/contract error, 4 I/O error.

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 2;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 3;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
    static constexpr int exit_code = 4;
};

}  // namespace lexatom
