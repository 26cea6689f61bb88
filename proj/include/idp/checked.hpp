#pragma once

#include <cstdint>
#include <string>

#include "idp/error.hpp"

namespace idp {

// Overflow-checked 64-bit arithmetic. Wrapping is never silent.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("int64 overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

/// Floor division for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

/// Ceiling division for b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

}  // namespace idp
