// Copyright 2026 the bytecodec authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bytecodec/codec.hpp"

namespace bytecodec {

// varint-G8IU: fixed blocks of one control byte plus eight data bytes.
// Control bit i (least significant first) describes data byte i: 0 completes
// an integer, 1 continues one or marks waste. Trailing 1-bits after the last
// 0-bit are wasted bytes, written as 0x00. An integer never spans blocks and
// never exceeds four data bytes.

inline constexpr size_t g8_block_size = 9;
inline constexpr size_t g8_data_bytes = 8;

std::vector<uint8_t> g8_encode(std::span<const uint32_t> values);

void g8_decode(std::span<const uint8_t> bytes, size_t n, uint32_t* out);
std::vector<uint32_t> g8_decode(std::span<const uint8_t> bytes, size_t n);

uint32_t g8_decode_delta(std::span<const uint8_t> bytes, size_t n, uint32_t base,
                         uint32_t* out);

}  // namespace bytecodec
