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

#include <vector>

#include "qsd/diagram.hpp"

namespace qsd {

/// One ground instance of a presentation axiom: two terms that must denote
/// the same matrix.
struct AxiomInstance {
  std::string name;
  TermPtr lhs;
  TermPtr rhs;
};

/// The parameter grid used to instantiate universally quantified axiom
/// parameters: {0, 1/4, 1/3, 1/2, 2/3, 3/4, 1}.
std::vector<Rat> default_param_grid();

/// All instances of the circuit presentation axioms over the grid.
/// Derived parameters follow the side conditions rtilde = rp + (1-r)q,
/// ptilde = rp/rtilde, qtilde = r(1-p)/(1-rtilde), stilde = st and
/// ttilde = s(1-t)/(1-st), reading 0/0 as 1. Schemas quantified over
/// arbitrary subterms are instantiated from a small fixed pool.
std::vector<AxiomInstance> circuit_axiom_instances(const std::vector<Rat>& grid);

/// All instances of the convex presentation axioms over the grid, with
/// ptilde = pq and qtilde = (p - pq)/(1 - pq), 0/0 read as 1.
std::vector<AxiomInstance> convex_axiom_instances(const std::vector<Rat>& grid);

}  // namespace qsd
