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

#include "qsd/proofs.hpp"

namespace qsd {

/// Constructs a checkable derivation of f =_e g for circuit states 0 -> m,
/// with e equal to the column-max divergence of the denotations: recursive
/// conditional splits wrapped in ChainProd, glued to f and g by SemEq.
DerivPtr derive_states_prod(const Order& a, const TermPtr& f, const TermPtr& g);

/// Same for arbitrary circuit terms n -> m: states at the base, an IfMax
/// step per input bit.
DerivPtr derive_prod(const Order& a, const TermPtr& f, const TermPtr& g);

/// Convex states 1 -> m via ChainSum along first-entry splits.
DerivPtr derive_state_sum(const Order& a, const TermPtr& f, const TermPtr& g);

/// Arbitrary convex terms n -> m: per-column derivations folded with
/// ParMax, then composed with the codiagonal under SeqComp.
DerivPtr derive_sum(const Order& a, const TermPtr& f, const TermPtr& g);

/// Dispatch on the theory.
DerivPtr derive(const TheoryConfig& cfg, const TermPtr& f, const TermPtr& g);

}  // namespace qsd
