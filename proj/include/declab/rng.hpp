#pragma once

#include <cstdint>

namespace declab {

// Stream purposes keep draws for unrelated uses disjoint even when the
// (worker, iteration) part of the key collides.
enum class Stream : std::uint32_t {
  Dataset = 1,
  Minibatch = 2,
  SpeedNoise = 3,
  InitModel = 4,
  TauSample = 5,
  ConsensusInit = 6,
};

// Counter-based keyed generator. The state is derived from
// (seed, purpose, worker, iteration) through a SplitMix64 chain, so a stream
// can be created on the fly for any key, in any order, and reproduce the
// same draws. This is what makes worker-parallel and sequential execution
// agree bit for bit.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, Stream purpose, std::uint64_t worker,
            std::uint64_t iteration);

  std::uint64_t next_u64();
  // Uniform in [0, 1), 53-bit resolution.
  double next_unit();
  // Uniform integer in [0, bound), bound > 0. Unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound);
  // Standard normal, Box-Muller.
  double next_normal();
  double next_normal(double mean, double stddev);

 private:
  std::uint64_t state_;
};

// Workload-noise multiplier p: parent normal with location 1 and variance
// sigma2, rejection-truncated to [0.5, 1.5]. The symmetric truncation keeps
// the mean at exactly 1; the realized variance is <= sigma2. sigma2 == 0
// returns exactly 1.
double sample_speed_multiplier(StreamRng& rng, double sigma2);

}  // namespace declab
