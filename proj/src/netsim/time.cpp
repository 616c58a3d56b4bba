#include "nakamoto/netsim/time.hpp"

#include <cmath>
#include <stdexcept>

namespace nakamoto::netsim {

SimTime from_rat(const numerics::Rat& t) {
  numerics::BigInt raw = (t * numerics::Rat::pow2(kSubtickBits)).floor();
  if (raw > numerics::BigInt(INT64_MAX / 2) || raw < numerics::BigInt(INT64_MIN / 2))
    throw std::out_of_range("time " + t.str() + " is out of range");
  return static_cast<SimTime>(raw);
}

numerics::Rat to_rat(SimTime t) { return numerics::Rat(t) * numerics::Rat::pow2(-kSubtickBits); }

std::string format_time(SimTime t) { return to_rat(t).str(); }

SimTime draw_exponential(crypto::Rng& rng, double mean_ticks) {
  double x = rng.exponential(1.0 / mean_ticks) * static_cast<double>(kTick);
  if (!(x < 4e18)) return SimTime(4) << 60;
  return std::max<SimTime>(1, static_cast<SimTime>(x));
}

SimTime draw_uniform(crypto::Rng& rng, SimTime lo, SimTime hi) {
  if (hi < lo) throw std::invalid_argument("uniform draw with hi < lo");
  return lo + static_cast<SimTime>(rng.uniform_int(0, static_cast<std::uint64_t>(hi - lo)));
}

}  // namespace nakamoto::netsim
