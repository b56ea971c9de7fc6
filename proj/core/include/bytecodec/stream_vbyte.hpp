// Copyright 2026 the bytecodec authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bytecodec/codec.hpp"

namespace bytecodec {

// Stream VByte: the varint-GB layout split into two contiguous regions.
// The first ceil(N/4) bytes are control bytes (integer 4k in the least
// significant two bits of control byte k), followed by all data bytes in
// little-endian order. Control byte k always lives at offset k, so block
// positions carry no data dependency.

/// Shuffle entries >= 16 produce a zero byte.
inline constexpr uint8_t svb_shuffle_fill = 0xFF;

struct decode_tables {
    // total data bytes consumed by a control byte, in [4,16]
    std::array<uint8_t, 256> length;
    // maps 16 loaded data bytes onto four little-endian 32-bit lanes
    std::array<std::array<uint8_t, 16>, 256> shuffle;
};

/// The process-wide tables, generated programmatically on first use.
const decode_tables& svb_tables();

inline size_t svb_control_bytes(size_t n) { return (n + 3) / 4; }

std::vector<uint8_t> svb_encode(std::span<const uint32_t> values);

void svb_decode(std::span<const uint8_t> bytes, size_t n, uint32_t* out);
std::vector<uint32_t> svb_decode(std::span<const uint8_t> bytes, size_t n);

uint32_t svb_decode_delta(std::span<const uint8_t> bytes, size_t n, uint32_t base,
                          uint32_t* out);

/// Append one integer, keeping the buffer byte-identical to a one-shot
/// svb_encode of the extended sequence. Requires codec == stream_vbyte.
void svb_append(encoded_buffer& buf, uint32_t value);

/// Data-region offset of every block, computed from the control stream alone.
std::vector<size_t> svb_block_data_offsets(std::span<const uint8_t> bytes, size_t n);

/// Decode block `k` in isolation given its data offset; returns the number
/// of integers in the block (4, or fewer for the final partial block).
size_t svb_decode_block(std::span<const uint8_t> bytes, size_t n, size_t block,
                        size_t data_offset, uint32_t out[4]);

}  // namespace bytecodec
