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

#include <memory>
#include <string>
#include <vector>

#include "qsd/rational.hpp"
#include "qsd/stochmat.hpp"

namespace qsd {

/// The two signatures: causal circuits on bits (Kronecker structure) and
/// convex algebra (direct-sum structure).
enum class TheoryKind { Circuit, Convex };

std::string theory_name(TheoryKind k);

enum class GenName { Del, Copy, And, Not, Flip, Cop, Cc };

enum class NodeKind {
  Gen,        // a signature generator, Flip/Cc carry a rational parameter
  Id,         // identity on n
  SwapElem,   // elementary 1,1 wire crossing (circuit)
  SwapDim,    // direct-sum crossing of blocks n, m (convex)
  Seq,        // sequential composition
  Par,        // monoidal product
  Or,         // circuit sugar: binary or gate
  IfGate,     // circuit sugar: selector bit chooses between two branches
  CondState,  // circuit sugar: weighted pairing of two states with a fresh bit
  ConvComb,   // circuit sugar: pointwise convex combination of equal-type maps
  ConvPair,   // convex sugar: cc(p) followed by f (+) g
  Codiag      // convex sugar: [I_m | ... | I_m]
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// An immutable term tree. Terms are shared freely; all operations on them
/// are pure.
class Term {
 public:
  NodeKind kind;
  GenName gen = GenName::Del;  // Gen only
  Rat param;                   // Gen(Flip/Cc), CondState, ConvComb, ConvPair
  int a = 0, b = 0;            // Id(a); SwapDim(a,b); Codiag(a,b)
  TermPtr left, right;         // binary nodes

  Term(NodeKind k) : kind(k) {}
};

TermPtr gen_del();
TermPtr gen_copy();
TermPtr gen_and();
TermPtr gen_not();
TermPtr gen_flip(Rat p);
TermPtr gen_cop();
TermPtr gen_cc(Rat p);
TermPtr id_term(int n);
TermPtr swap_elem();
TermPtr swap_dim(int n, int m);
TermPtr seq(TermPtr l, TermPtr r);
TermPtr par(TermPtr l, TermPtr r);
TermPtr or_gate();
TermPtr if_gate(TermPtr f1, TermPtr f0);
TermPtr cond_state(Rat p, TermPtr f1, TermPtr f0);
TermPtr conv_comb(Rat p, TermPtr l, TermPtr r);
TermPtr conv_pair(Rat p, TermPtr f, TermPtr g);
TermPtr codiag_term(int n, int m);

/// Left-associated folds; empty lists give id(0).
TermPtr seq_chain(const std::vector<TermPtr>& ts);
TermPtr par_chain(const std::vector<TermPtr>& ts);

bool structural_equal(const TermPtr& s, const TermPtr& t);

struct TermType {
  int dom = 0;
  int cod = 0;
  bool operator==(const TermType& o) const { return dom == o.dom && cod == o.cod; }
};

/// Computes the unique type of a term under a theory, or throws
/// TypeCheckError naming the offending subterm.
TermType typecheck(const TermPtr& t, TheoryKind k);

/// Canonical fully parenthesized rendering; parse(print(t)) == t.
std::string print_term(const TermPtr& t);

/// Parses the textual term grammar for the given theory. Errors carry
/// line/column positions.
TermPtr parse_term(const std::string& src, TheoryKind k);

/// Rewrites every sugar node into core generators (Gen/Id/Swap/Seq/Par),
/// preserving the type and the denotation.
TermPtr expand(const TermPtr& t, TheoryKind k);

// Core routing combinators used by macro expansion and term synthesis.

/// Circuit fan-out 1 -> k built from copy (k = 0 gives del).
TermPtr dup_wire(int k);

/// Circuit bundle copy n -> 2n sending u to (u, u).
TermPtr copy_bundle(int n);

/// Circuit permutation term on k wires: output position i carries input
/// wire out_of_in[i]. Built from elementary crossings.
TermPtr wire_perm(const std::vector<int>& out_of_in);

}  // namespace qsd
