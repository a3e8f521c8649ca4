// Copyright 2026 The tropicurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROPICURV_RNG_HPP_
#define TROPICURV_RNG_HPP_

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>

#include "tropicurv/rational.hpp"

namespace tropicurv {

// A reproducible random stream. The pair (master_seed, stream_index)
// fixes the whole sequence; experiments give every trial its own index so
// results do not depend on scheduling.
//
// Not thread-safe: each stream has a single owner.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // k / 2^53 for a uniform 53-bit k, as a double in [0, 1).
  double UniformDouble();

  // The same draw as an exact rational in [0, 1).
  Rational UniformRational();

  // Uniform on the open interval (0, 1); zero draws are redrawn.
  double OpenUniformDouble();

  // Uniform integer in [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Standard normal and unit-rate exponential deviates.
  double Normal();
  double Exponential();

  boost::random::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  boost::random::mt19937_64 engine_;
};

}  // namespace tropicurv

#endif  // TROPICURV_RNG_HPP_
