#include "rptrim/rng.hpp"

#include <cmath>
#include <numbers>

namespace rptrim {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RngStream::hash_label(std::string_view label) {
    // FNV-1a 64
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t RngStream::mix(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ b);
}

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : RngStream(mix(seed, hash_label(label))) {}

RngStream RngStream::derive(std::string_view label) const {
    return RngStream(mix(key_, hash_label(label)));
}

RngStream RngStream::derive(std::uint64_t index) const {
    return RngStream(mix(key_, index));
}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rptrim
