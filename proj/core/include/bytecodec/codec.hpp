// Copyright 2026 the bytecodec authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bytecodec {

/// Stable wire tags for the four supported formats. Never renumber.
enum class codec_id : uint8_t {
    vbyte = 0,
    varint_gb = 1,
    varint_g8iu = 2,
    stream_vbyte = 3,
};

std::string_view codec_name(codec_id id);
std::optional<codec_id> codec_from_name(std::string_view name);
std::optional<codec_id> codec_from_tag(uint8_t tag);

enum class errc {
    // malformed payloads
    truncated,
    trailing_bytes,
    run_too_long,
    value_overflow,
    oversized_integer,
    count_mismatch,
    bad_stream_size,
    // container
    bad_magic,
    unknown_codec,
    reserved_flags,
    length_mismatch,
    // usage
    unsupported,
    out_of_range,
    io_failure,
    bad_config,
};

class codec_error : public std::runtime_error {
public:
    codec_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// One compressed array plus the metadata needed to decode it.
/// `bytes` holds exactly the bytes the codec defines for `count` integers.
struct encoded_buffer {
    codec_id codec = codec_id::vbyte;
    uint32_t count = 0;
    bool delta = false;
    std::vector<uint8_t> bytes;
};

/// Data bytes (1..4) needed to store x in the block formats; zero takes one byte.
inline uint32_t byte_length(uint32_t x) {
    return x < (1u << 8) ? 1u : x < (1u << 16) ? 2u : x < (1u << 24) ? 3u : 4u;
}

/// Bytes (1..5) the vbyte format uses for x; zero takes one byte.
inline uint32_t vbyte_length(uint32_t x) {
    return x < (1u << 7)    ? 1u
           : x < (1u << 14) ? 2u
           : x < (1u << 21) ? 3u
           : x < (1u << 28) ? 4u
                            : 5u;
}

// Raw payload codecs, dispatched on codec_id. `out` must hold n integers.
std::vector<uint8_t> encode_payload(codec_id id, std::span<const uint32_t> values);
void decode_payload(codec_id id, std::span<const uint8_t> bytes, size_t n, uint32_t* out);

// Fused decode + prefix-sum reconstruction; returns the last reconstructed
// value (the base for a following chunk).
uint32_t decode_payload_delta(codec_id id, std::span<const uint8_t> bytes, size_t n,
                              uint32_t base, uint32_t* out);

/// Compress `values`, optionally delta-transforming them first.
encoded_buffer encode(codec_id id, std::span<const uint32_t> values, bool delta = false);

/// Recover the original values from an encoded_buffer.
std::vector<uint32_t> decode(const encoded_buffer& buf);

}  // namespace bytecodec
