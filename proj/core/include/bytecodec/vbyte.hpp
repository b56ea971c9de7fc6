// Copyright 2026 the bytecodec authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bytecodec/codec.hpp"

namespace bytecodec {

// Classic continuation-bit format: each integer is stored least significant
// 7-bit group first; a set most significant bit means another byte follows.
// A run is 1..5 bytes and its value must fit in 32 bits.

std::vector<uint8_t> vbyte_encode(std::span<const uint32_t> values);

/// Decode exactly n runs; the stream must be fully consumed.
/// Throws codec_error with errc::truncated, errc::run_too_long,
/// errc::value_overflow or errc::trailing_bytes.
void vbyte_decode(std::span<const uint8_t> bytes, size_t n, uint32_t* out);
std::vector<uint32_t> vbyte_decode(std::span<const uint8_t> bytes, size_t n);

/// Fused decode + prefix sum; returns the last reconstructed value.
uint32_t vbyte_decode_delta(std::span<const uint8_t> bytes, size_t n, uint32_t base,
                            uint32_t* out);

/// Bit-identical to vbyte_decode on every input, malformed ones included.
/// Works on 16-byte chunks: the 16 continuation bits are gathered into a
/// mask that indexes shuffle-pattern tables expanding whole runs into
/// 32-bit lanes. Falls back to the scalar decoder for the trailing chunk
/// and on platforms without a 16-byte shuffle.
void vbyte_decode_accelerated(std::span<const uint8_t> bytes, size_t n, uint32_t* out);
std::vector<uint32_t> vbyte_decode_accelerated(std::span<const uint8_t> bytes, size_t n);

/// True when the SIMD kernel is compiled in and supported by this CPU.
bool vbyte_accelerated_available() noexcept;

}  // namespace bytecodec
