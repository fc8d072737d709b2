// Copyright 2026 The qsd authors
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

#pragma once

#include <cstdint>

#include "qsd/diagram.hpp"
#include "qsd/stochmat.hpp"

namespace qsd {

/// Deterministic 64-bit generator (splitmix64). Identical sequences on
/// every platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();
  /// Uniform integer in [0, n); n must be positive.
  uint64_t below(uint64_t n);
  /// Uniform double in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  uint64_t state_;
};

/// Independent stream for one trial: the base seed is mixed with the trial
/// counter so trials can run in any order or in parallel.
SplitMix64 trial_stream(uint64_t seed, uint64_t trial);

/// Random exact-rational distribution: integer weights uniform in
/// [0, 2^16], with zero_rate of them forced to zero (at least one stays
/// positive), then normalized.
Distribution random_distribution(SplitMix64& rng, int len, double zero_rate);

/// Column-wise random stochastic matrix; rows >= 1 unless cols == 0.
StochMatrix random_stoch_matrix(SplitMix64& rng, int rows, int cols, double zero_rate);

/// Random parameter in [0,1]: with probability zero_rate one of the
/// endpoints, otherwise k/2^16.
Rat random_param(SplitMix64& rng, double zero_rate);

/// A random well-typed term of the theory: a random input layer followed
/// by a few random generator layers. Objects stay at most max_obj
/// (wires for the circuit theory, dimension for the convex theory).
TermPtr random_term(SplitMix64& rng, TheoryKind k, int max_obj, int layers, double zero_rate);

/// A random term whose outermost node is one of the sugar constructors;
/// sized to keep macro expansion cheap to evaluate.
TermPtr random_macro_term(SplitMix64& rng, TheoryKind k, double zero_rate);

}  // namespace qsd
