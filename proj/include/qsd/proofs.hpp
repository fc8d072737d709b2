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
#include "qsd/divergence.hpp"
#include "qsd/extreal.hpp"

namespace qsd {

/// Which quantitative theory a derivation lives in.
struct TheoryConfig {
  TheoryKind kind;
  Order alpha;
};

/// Either strict equality or equality up to a bound.
struct Bound {
  bool strict = false;
  ExtReal eps;

  static Bound strict_eq() { return Bound{true, ExtReal::zero()}; }
  static Bound up_to(ExtReal e) { return Bound{false, e}; }
};

/// A typed judgement between two terms of equal type.
struct Judgement {
  TermPtr lhs;
  TermPtr rhs;
  Bound bound;
};

/// The fixed rule catalogue. Structural rules apply under both theories;
/// ChainProd/IfMax are circuit-only and ChainSum/ParMax convex-only.
enum class Rule {
  Refl0,      //                       |- t =_0 t
  SemEq,      //                       |- s = t     when both denote the same matrix
  Mono,       // f =_e g               |- f =_e' g  for any stated e' >= e
  MinJoin,    // f =_e g, f =_d g      |- f =_min(e,d) g
  SeqComp,    // f =_e g, f' =_d g'    |- f;f' =_{e+d} g;g'
  ParComp,    // f =_e g, f' =_d g'    |- f+f' =_{e+d} g+g'
  EqSubstL,   // f = f', f =_e g       |- f' =_e g
  EqSubstR,   // g = g', f =_e g       |- f =_e g'
  ChainProd,  // f1 =_e g1, f0 =_d g0  |- condstate(p,f1,f0) =_{C(p,q,e,d)} condstate(q,g1,g0)
  IfMax,      // f1 =_e g1, f0 =_d g0  |- ifgate(f1,f0) =_{max(e,d)} ifgate(g1,g0)
  ChainSum,   // f =_e g, f' =_d g'    |- convpair(p,f,f') =_{C(p,q,e,d)} convpair(q,g,g')
  ParMax      // f =_e g, f' =_d g'    |- f+f' =_{max(e,d)} g+g'
};

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);

class Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

/// A node of a proof tree. Rule parameters are explicit; the conclusion is
/// the stated one, which checking recomputes and verifies.
class Derivation {
 public:
  Rule rule;
  Rat p, q;             // ChainProd / ChainSum weights
  ExtReal mono_eps;     // Mono target bound
  TermPtr term_a;       // Refl0 term; SemEq lhs
  TermPtr term_b;       // SemEq rhs
  std::vector<DerivPtr> premises;
  Judgement conclusion;

  explicit Derivation(Rule r) : rule(r) {}
};

// Node builders; each computes and stores the conclusion the checker will
// expect, so synthesized trees verify bit-for-bit.
DerivPtr mk_refl0(const TheoryConfig& cfg, TermPtr t);
DerivPtr mk_semeq(const TheoryConfig& cfg, TermPtr lhs, TermPtr rhs);
DerivPtr mk_mono(const TheoryConfig& cfg, ExtReal eps, DerivPtr premise);
DerivPtr mk_minjoin(const TheoryConfig& cfg, DerivPtr a, DerivPtr b);
DerivPtr mk_seqcomp(const TheoryConfig& cfg, DerivPtr a, DerivPtr b);
DerivPtr mk_parcomp(const TheoryConfig& cfg, DerivPtr a, DerivPtr b);
DerivPtr mk_eqsubst_l(const TheoryConfig& cfg, DerivPtr eq, DerivPtr quant);
DerivPtr mk_eqsubst_r(const TheoryConfig& cfg, DerivPtr eq, DerivPtr quant);
DerivPtr mk_chain_prod(const TheoryConfig& cfg, Rat p, Rat q, DerivPtr one, DerivPtr zero);
DerivPtr mk_if_max(const TheoryConfig& cfg, DerivPtr one, DerivPtr zero);
DerivPtr mk_chain_sum(const TheoryConfig& cfg, Rat p, Rat q, DerivPtr f, DerivPtr fp);
DerivPtr mk_par_max(const TheoryConfig& cfg, DerivPtr a, DerivPtr b);

/// Same rule, params, and stated-conclusion recomputation with different
/// premises; used for perturbing proof trees.
DerivPtr rebuild_with_premises(const TheoryConfig& cfg, const Derivation& node,
                               std::vector<DerivPtr> premises);

/// Recursively verifies a derivation: recomputes every node's conclusion
/// from its rule, parameters and (recursively checked) premises, and
/// compares against the stated conclusion. Returns the verified root
/// judgement; throws a CheckError subclass naming the offending node path.
Judgement check(const DerivPtr& d, const TheoryConfig& cfg);

/// The bound of a verified judgement; strict equality reports 0.
ExtReal bound_of(const Judgement& j);

std::string derivation_to_json(const DerivPtr& d);
DerivPtr derivation_from_json(const std::string& text, TheoryKind kind);

}  // namespace qsd
