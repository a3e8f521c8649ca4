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

#include "tropicurv/rng.hpp"

#include <cmath>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/seed_seq.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace tropicurv {
namespace {

boost::random::mt19937_64 MakeEngine(std::uint64_t master_seed, std::uint64_t stream_index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  boost::random::seed_seq seq{lo(master_seed), hi(master_seed), lo(stream_index),
                              hi(stream_index)};
  return boost::random::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(MakeEngine(master_seed, stream_index)) {}

double RngStream::UniformDouble() {
  return std::ldexp(static_cast<double>(engine_() >> 11), -53);
}

Rational RngStream::UniformRational() { return Dyadic(engine_() >> 11, 53); }

double RngStream::OpenUniformDouble() {
  double u = 0;
  while (u == 0) u = UniformDouble();
  return u;
}

std::int64_t RngStream::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("UniformInt needs lo <= hi");
  return boost::random::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

double RngStream::Normal() { return boost::random::normal_distribution<double>()(engine_); }

double RngStream::Exponential() {
  return boost::random::exponential_distribution<double>()(engine_);
}

}  // namespace tropicurv
