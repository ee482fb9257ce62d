#pragma once

#include <array>
#include <cstdint>

namespace dsm {

// Philox4x32-10 block function. Counter-based: the caller addresses any
// position in the stream directly, so draws can be evaluated in parallel
// in any order and still match the serial stream bit for bit.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// Inverse of the standard normal CDF (Wichura's AS241 rational
// approximations, accurate to ~1e-15). p must lie in (0, 1).
double inverse_normal_cdf(double p);

// One uniform draw in [0, 1) addressed by (seed, index, slot, tag).
// The counter layout is {index_lo, index_hi, slot, tag} with key = seed.
// Synthesis uses index = row-major cell, slot = frame, tag = draw purpose.
double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint32_t slot,
                       std::uint32_t tag);

// One standard normal draw at the same address, via inverse CDF of a
// uniform that is strictly inside (0, 1).
double counter_normal(std::uint64_t seed, std::uint64_t index, std::uint32_t slot,
                      std::uint32_t tag);

}  // namespace dsm
