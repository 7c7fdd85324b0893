// Copyright 2026 The foldkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

#include "foldkit/errors.hpp"

namespace foldkit {

/// Two's-complement W.F format: W total bits, F fraction bits.
struct FixedPointConfig {
    int width = 16;
    int frac = 8;
    enum class Overflow { Saturate, Wrap };
    Overflow mode = Overflow::Saturate;

    void check() const {
        if (width < 2 || width > 64) throw BadSpecError("width", "need 1 <= frac < width <= 64");
        if (frac < 1 || frac >= width) throw BadSpecError("frac", "need 1 <= frac < width <= 64");
    }

    std::int64_t max_raw() const {
        return width == 64 ? INT64_MAX : (std::int64_t(1) << (width - 1)) - 1;
    }
    std::int64_t min_raw() const {
        return width == 64 ? INT64_MIN : -(std::int64_t(1) << (width - 1));
    }
    double scale() const { return std::ldexp(1.0, frac); }

    friend bool operator==(const FixedPointConfig&, const FixedPointConfig&) = default;
};

namespace detail {

inline std::int64_t fx_wrap_bits(__int128 v, int width) {
    if (width == 64) return static_cast<std::int64_t>(v);
    const std::uint64_t mask = (std::uint64_t(1) << width) - 1;
    std::uint64_t low = static_cast<std::uint64_t>(v) & mask;
    if (low & (std::uint64_t(1) << (width - 1))) low |= ~mask;  // sign-extend
    return static_cast<std::int64_t>(low);
}

}  // namespace detail

/// Clamps (or wraps) a wide intermediate into the configured format.
/// `saturated` is set only when saturate mode actually clipped.
inline std::int64_t fx_fit(__int128 v, const FixedPointConfig& cfg, bool* saturated = nullptr) {
    if (cfg.mode == FixedPointConfig::Overflow::Wrap) return detail::fx_wrap_bits(v, cfg.width);
    if (v > cfg.max_raw()) {
        if (saturated) *saturated = true;
        return cfg.max_raw();
    }
    if (v < cfg.min_raw()) {
        if (saturated) *saturated = true;
        return cfg.min_raw();
    }
    return static_cast<std::int64_t>(v);
}

/// Rounds half away from zero, then fits.
inline std::int64_t fx_quantize(double v, const FixedPointConfig& cfg, bool* saturated = nullptr) {
    const double scaled = v * cfg.scale();
    // llround saturates UB-free only within int64 range; clamp first.
    if (scaled >= 9.2e18) return fx_fit(__int128(INT64_MAX) + 1, cfg, saturated);
    if (scaled <= -9.2e18) return fx_fit(__int128(INT64_MIN) - 1, cfg, saturated);
    return fx_fit(static_cast<__int128>(std::llround(scaled)), cfg, saturated);
}

inline std::int64_t fx_add(std::int64_t a, std::int64_t b, const FixedPointConfig& cfg,
                           bool* saturated = nullptr) {
    return fx_fit(static_cast<__int128>(a) + b, cfg, saturated);
}

/// Multiply by 2^k. Negative k is an arithmetic right shift and rounds
/// toward negative infinity.
inline std::int64_t fx_shift(std::int64_t a, int k, const FixedPointConfig& cfg,
                             bool* saturated = nullptr) {
    if (k >= 0) return fx_fit(static_cast<__int128>(a) << k, cfg, saturated);
    return fx_fit(static_cast<__int128>(a >> -k), cfg, saturated);
}

inline double fx_to_double(std::int64_t raw, const FixedPointConfig& cfg) {
    return static_cast<double>(raw) / cfg.scale();
}

}  // namespace foldkit
