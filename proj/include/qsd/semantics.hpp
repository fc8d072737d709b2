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

#include "qsd/diagram.hpp"
#include "qsd/stochmat.hpp"

namespace qsd {

/// Interprets a term as a column-stochastic matrix. Circuit terms n -> m
/// denote 2^m x 2^n matrices over the bit basis (value 1 before value 0,
/// first wire most significant); convex terms n -> m denote m x n matrices.
StochMatrix eval(const TermPtr& t, TheoryKind k);

/// Canonical circuit state with the given denotation, built by recursive
/// conditional splitting; requires a power-of-two length.
TermPtr state_term_circuit(const Distribution& mu);

/// Canonical convex state 1 -> m with the given denotation.
TermPtr column_term_convex(const Distribution& mu);

/// Canonical convex term denoting the given matrix: parallel columns merged
/// through a codiagonal.
TermPtr matrix_term_convex(const StochMatrix& a);

/// Canonical circuit term denoting the given matrix: an if-gate tree over
/// the input bits with conditional states at the leaves. Dimensions must be
/// powers of two.
TermPtr matrix_term_circuit(const StochMatrix& a);

}  // namespace qsd
