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
#include <optional>
#include <ostream>
#include <string>

#include "qsd/proofs.hpp"

namespace qsd {

struct FuzzOptions {
  uint64_t seed = 0;
  int trials = 1000;
  int max_wires = 3;
  int max_dim = 6;
  double zero_rate = 0.2;
};

struct FuzzReport {
  bool ok = true;
  int failed_trial = -1;
  std::string suite;
  std::string message;
  int zero_branch_trials = 0;  // trials whose inputs carried a zero entry
};

/// Runs seeded property trials round-robin over four suites: chain-rule
/// oracles, enrichment (in)equalities, synthesis tightness, and checker
/// soundness under bound perturbations. Stops at the first counterexample.
FuzzReport run_fuzz(const FuzzOptions& opts);

/// Wraps the node at `path` (indices into premises, root is the empty
/// path) in a Mono node with an inflated bound, restating every ancestor's
/// conclusion accordingly.
DerivPtr inflate_at(const TheoryConfig& cfg, const DerivPtr& d, const std::vector<int>& path,
                    double amount);

/// Understates the node's stated conclusion bound by `amount` (clamped at
/// zero; an infinite bound is replaced by a large finite one), leaving the
/// rest of the tree alone.
DerivPtr deflate_at(const DerivPtr& d, const std::vector<int>& path, double amount);

/// All node paths of a derivation, in preorder.
std::vector<std::vector<int>> derivation_paths(const DerivPtr& d);

}  // namespace qsd
