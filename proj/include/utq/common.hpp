#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace utq {

using Bigint = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for every error the library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed domain data (bad root bounds, zero parameter, mismatched ambients, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// A configured resource cap was exceeded (enumeration, cosets, table size).
struct CapExceeded : Error {
    using Error::Error;
};

/// A request outside the partial function's supported domain.
struct Unsupported : Error {
    using Error::Error;
};

/// Resource caps for the concrete-group engine.  All limits are explicit so
/// callers can widen them deliberately (the stretch tier) instead of by accident.
struct Caps {
    std::uint64_t enumeration = std::uint64_t{1} << 21;  // elements per group
    std::uint64_t char_table = std::uint64_t{1} << 16;   // group order for irr tables
    std::uint64_t cosets = std::uint64_t{1} << 14;       // right cosets in Mackey sums
};

inline Caps& default_caps() {
    static Caps caps;
    return caps;
}

}  // namespace utq
