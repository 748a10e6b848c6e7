// Copyright 2026 The gmmvqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMMVQC_RNG_HPP_
#define GMMVQC_RNG_HPP_

#include <cstdint>
#include <random>

namespace gmmvqc {

// Fixed-increment splitmix64 step; used only to mix seeds, never as the
// sampling generator itself.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a child seed from a base seed and a stream tag. Every random
// quantity in the library draws from a generator seeded this way, so results
// depend only on (seed, tag), never on evaluation order or thread schedule.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(splitmix64(seed) ^ splitmix64(tag));
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t tag) {
  return std::mt19937_64(mix_seed(seed, tag));
}

}  // namespace gmmvqc

#endif  // GMMVQC_RNG_HPP_
