// Copyright 2026 the bytecodec authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bytecodec/codec.hpp"

namespace bytecodec {

// varint-GB: groups of four integers behind one control byte. Field i of the
// control byte (integer i in the least significant two bits) holds
// byte_length(x_i) - 1. The final group may be incomplete; its unused fields
// are zero and carry no data bytes.

std::vector<uint8_t> gb_encode(std::span<const uint32_t> values);

void gb_decode(std::span<const uint8_t> bytes, size_t n, uint32_t* out);
std::vector<uint32_t> gb_decode(std::span<const uint8_t> bytes, size_t n);

uint32_t gb_decode_delta(std::span<const uint8_t> bytes, size_t n, uint32_t base,
                         uint32_t* out);

namespace detail {
// Field-by-field group decode without the all-small fast path; used to
// check the fast path against the general one.
const uint8_t* gb_decode_group_general(uint8_t control, const uint8_t* data,
                                       const uint8_t* end, size_t k, uint32_t* out);
}  // namespace detail

}  // namespace bytecodec
