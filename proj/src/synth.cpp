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

#include "qsd/synth.hpp"

#include "qsd/semantics.hpp"

namespace qsd {

namespace {

TermType checked_equal_types(const TermPtr& f, const TermPtr& g, TheoryKind k) {
  TermType tf = typecheck(f, k);
  TermType tg = typecheck(g, k);
  if (!(tf == tg))
    throw TypeCheckError("cannot derive between types " + std::to_string(tf.dom) + "->" +
                         std::to_string(tf.cod) + " and " + std::to_string(tg.dom) + "->" +
                         std::to_string(tg.cod));
  return tf;
}

/// Connects a derivation between canonical terms to the user's terms via
/// SemEq and the two substitution rules.
DerivPtr glue(const TheoryConfig& cfg, const DerivPtr& core, const TermPtr& f, const TermPtr& g) {
  DerivPtr left = mk_eqsubst_l(cfg, mk_semeq(cfg, core->conclusion.lhs, f), core);
  return mk_eqsubst_r(cfg, mk_semeq(cfg, core->conclusion.rhs, g), left);
}

/// Derivation between the canonical state terms of mu and nu.
DerivPtr states_prod_core(const TheoryConfig& cfg, const Distribution& mu,
                          const Distribution& nu) {
  if (mu.size() == 1) return mk_refl0(cfg, id_term(0));
  BitSplit ms = cond_split_bit(mu);
  BitSplit ns = cond_split_bit(nu);
  DerivPtr one = states_prod_core(cfg, ms.on_one, ns.on_one);
  DerivPtr zero = states_prod_core(cfg, ms.on_zero, ns.on_zero);
  return mk_chain_prod(cfg, ms.p.value(), ns.p.value(), one, zero);
}

/// Derivation between the canonical matrix terms of A and B (circuit).
DerivPtr prod_core(const TheoryConfig& cfg, const StochMatrix& A, const StochMatrix& B) {
  if (A.cols() == 1) return states_prod_core(cfg, column(A, 0), column(B, 0));
  DerivPtr one = prod_core(cfg, restrict_first_bit(A, true), restrict_first_bit(B, true));
  DerivPtr zero = prod_core(cfg, restrict_first_bit(A, false), restrict_first_bit(B, false));
  DerivPtr gate = mk_if_max(cfg, one, zero);
  if (A.cols() == 2) return gate;
  int sub_wires = 0;
  for (int c = A.cols() / 2; c > 1; c /= 2) ++sub_wires;
  DerivPtr plumb = mk_refl0(cfg, par(id_term(1), copy_bundle(sub_wires)));
  return mk_seqcomp(cfg, plumb, gate);
}

/// Derivation between the canonical column terms of mu and nu (convex).
DerivPtr state_sum_core(const TheoryConfig& cfg, const Distribution& mu, const Distribution& nu) {
  if (mu.size() == 1) return mk_refl0(cfg, id_term(1));
  FirstSplit ms = cond_split_first(mu);
  FirstSplit ns = cond_split_first(nu);
  DerivPtr head = mk_refl0(cfg, id_term(1));
  DerivPtr rest = state_sum_core(cfg, ms.rest, ns.rest);
  return mk_chain_sum(cfg, ms.p.value(), ns.p.value(), head, rest);
}

DerivPtr sum_core(const TheoryConfig& cfg, const StochMatrix& A, const StochMatrix& B) {
  if (A.cols() == 0) return mk_refl0(cfg, id_term(0));
  if (A.rows() == 0) {
    std::vector<TermPtr> dels(static_cast<size_t>(A.cols()), gen_del());
    return mk_refl0(cfg, par_chain(dels));
  }
  DerivPtr acc = state_sum_core(cfg, column(A, 0), column(B, 0));
  for (int j = 1; j < A.cols(); ++j)
    acc = mk_par_max(cfg, acc, state_sum_core(cfg, column(A, j), column(B, j)));
  DerivPtr merge = mk_refl0(cfg, codiag_term(A.cols(), A.rows()));
  return mk_seqcomp(cfg, acc, merge);
}

}  // namespace

DerivPtr derive_states_prod(const Order& a, const TermPtr& f, const TermPtr& g) {
  TheoryConfig cfg{TheoryKind::Circuit, a};
  TermType t = checked_equal_types(f, g, cfg.kind);
  if (t.dom != 0) throw TypeCheckError("derive_states_prod expects states 0 -> m");
  return derive_prod(a, f, g);
}

DerivPtr derive_prod(const Order& a, const TermPtr& f, const TermPtr& g) {
  TheoryConfig cfg{TheoryKind::Circuit, a};
  checked_equal_types(f, g, cfg.kind);
  StochMatrix A = eval(f, cfg.kind);
  StochMatrix B = eval(g, cfg.kind);
  return glue(cfg, prod_core(cfg, A, B), f, g);
}

DerivPtr derive_state_sum(const Order& a, const TermPtr& f, const TermPtr& g) {
  TheoryConfig cfg{TheoryKind::Convex, a};
  TermType t = checked_equal_types(f, g, cfg.kind);
  if (t.dom != 1) throw TypeCheckError("derive_state_sum expects terms 1 -> m");
  if (t.cod == 0) {
    DerivPtr core = mk_refl0(cfg, gen_del());
    return glue(cfg, core, f, g);
  }
  DerivPtr core = state_sum_core(cfg, column(eval(f, cfg.kind), 0), column(eval(g, cfg.kind), 0));
  return glue(cfg, core, f, g);
}

DerivPtr derive_sum(const Order& a, const TermPtr& f, const TermPtr& g) {
  TheoryConfig cfg{TheoryKind::Convex, a};
  checked_equal_types(f, g, cfg.kind);
  StochMatrix A = eval(f, cfg.kind);
  StochMatrix B = eval(g, cfg.kind);
  return glue(cfg, sum_core(cfg, A, B), f, g);
}

DerivPtr derive(const TheoryConfig& cfg, const TermPtr& f, const TermPtr& g) {
  return cfg.kind == TheoryKind::Circuit ? derive_prod(cfg.alpha, f, g)
                                         : derive_sum(cfg.alpha, f, g);
}

}  // namespace qsd
