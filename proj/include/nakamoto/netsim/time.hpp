#pragma once

#include <cstdint>
#include <string>

#include "nakamoto/crypto/rng.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::netsim {

/// Simulated time on a grid of 2^-20 ticks. Every time is an exact rational
/// number of ticks (raw / 2^20) while the event loop compares plain integers.
using SimTime = std::int64_t;

inline constexpr int kSubtickBits = 20;
inline constexpr SimTime kTick = SimTime(1) << kSubtickBits;

inline constexpr SimTime ticks(std::int64_t whole) { return whole * kTick; }
/// Largest grid point not after `t` ticks.
SimTime from_rat(const numerics::Rat& t);
numerics::Rat to_rat(SimTime t);
std::string format_time(SimTime t);

/// Exponential delay with the given mean in ticks, at least one grid step.
SimTime draw_exponential(crypto::Rng& rng, double mean_ticks);
/// Uniform grid point in [lo, hi].
SimTime draw_uniform(crypto::Rng& rng, SimTime lo, SimTime hi);

}  // namespace nakamoto::netsim
