#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rptrim {

/// Counter-based splittable generator. A stream is identified by a
/// (seed, label) key; identical keys reproduce identical draw sequences,
/// and derived streams behave independently of how much of the parent
/// has been consumed.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_double();

    /// Standard normal via Box-Muller (two uniforms per draw).
    double next_normal();

    /// Substream keyed by an extra label; depends only on this stream's
    /// key, not on its current position.
    RngStream derive(std::string_view label) const;
    RngStream derive(std::uint64_t index) const;

    std::uint64_t key() const { return key_; }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b);
    static std::uint64_t hash_label(std::string_view label);

private:
    RngStream(std::uint64_t key) : key_(key), state_(key) {}

    std::uint64_t key_;
    std::uint64_t state_;
};

}  // namespace rptrim
