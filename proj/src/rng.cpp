#include "declab/rng.hpp"

#include <cmath>

#include "declab/errors.hpp"

namespace declab {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
constexpr double kTwoPi = 6.283185307179586476925287;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t absorb(std::uint64_t state, std::uint64_t value) {
  return mix64((state + kGolden) ^ value);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, Stream purpose, std::uint64_t worker,
                     std::uint64_t iteration) {
  std::uint64_t s = mix64(seed + kGolden);
  s = absorb(s, static_cast<std::uint64_t>(purpose));
  s = absorb(s, worker);
  s = absorb(s, iteration);
  state_ = s;
}

std::uint64_t StreamRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double StreamRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t StreamRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw ConfigError("next_below: bound must be positive");
  // Largest value that maps to [0, bound) without modulo bias.
  const std::uint64_t m = (UINT64_MAX % bound + 1) % bound;
  const std::uint64_t limit = UINT64_MAX - m;
  std::uint64_t x = next_u64();
  while (x > limit) x = next_u64();
  return x % bound;
}

double StreamRng::next_normal() {
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double StreamRng::next_normal(double mean, double stddev) {
  return mean + stddev * next_normal();
}

double sample_speed_multiplier(StreamRng& rng, double sigma2) {
  if (sigma2 < 0.0)
    throw ConfigError("sample_speed_multiplier: sigma2 must be >= 0");
  if (sigma2 == 0.0) return 1.0;
  const double sd = std::sqrt(sigma2);
  for (;;) {
    const double p = 1.0 + sd * rng.next_normal();
    if (p >= 0.5 && p <= 1.5) return p;
  }
}

}  // namespace declab
