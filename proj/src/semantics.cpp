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

#include "qsd/semantics.hpp"

namespace qsd {

namespace {

using Storage = StochMatrix::Storage;

StochMatrix circuit_gen_matrix(const Term& t) {
  switch (t.gen) {
    case GenName::Del: {
      Storage m(1, 2);
      m(0, 0) = 1;
      m(0, 1) = 1;
      return StochMatrix(std::move(m));
    }
    case GenName::Copy: {
      Storage m = Storage::Zero(4, 2);
      m(0, 0) = 1;  // input 1 copies to 11
      m(3, 1) = 1;  // input 0 copies to 00
      return StochMatrix(std::move(m));
    }
    case GenName::And: {
      Storage m = Storage::Zero(2, 4);
      m(0, 0) = 1;  // 11 -> 1
      m(1, 1) = 1;
      m(1, 2) = 1;
      m(1, 3) = 1;
      return StochMatrix(std::move(m));
    }
    case GenName::Not: {
      Storage m = Storage::Zero(2, 2);
      m(0, 1) = 1;
      m(1, 0) = 1;
      return StochMatrix(std::move(m));
    }
    case GenName::Flip: {
      Storage m(2, 1);
      m(0, 0) = t.param;
      m(1, 0) = 1 - t.param;
      return StochMatrix(std::move(m));
    }
    default:
      throw TypeCheckError("generator not in the circuit signature");
  }
}

StochMatrix convex_gen_matrix(const Term& t) {
  switch (t.gen) {
    case GenName::Del:
      return StochMatrix::empty(0, 1);
    case GenName::Cop: {
      Storage m(1, 2);
      m(0, 0) = 1;
      m(0, 1) = 1;
      return StochMatrix(std::move(m));
    }
    case GenName::Cc: {
      Storage m(2, 1);
      m(0, 0) = t.param;
      m(1, 0) = 1 - t.param;
      return StochMatrix(std::move(m));
    }
    default:
      throw TypeCheckError("generator not in the convex signature");
  }
}

StochMatrix or_matrix() {
  Storage m = Storage::Zero(2, 4);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(0, 2) = 1;
  m(1, 3) = 1;
  return StochMatrix(std::move(m));
}

/// Column-wise stack [p * top; (1-p) * bottom] of two single-column blocks.
StochMatrix weighted_stack(const Rat& p, const StochMatrix& top, const StochMatrix& bottom) {
  Storage out(top.rows() + bottom.rows(), 1);
  for (int i = 0; i < top.rows(); ++i) out(i, 0) = p * top.at(i, 0);
  for (int i = 0; i < bottom.rows(); ++i) out(top.rows() + i, 0) = (1 - p) * bottom.at(i, 0);
  return StochMatrix(std::move(out));
}

StochMatrix if_gate_matrix(const StochMatrix& m1, const StochMatrix& m0) {
  int cols1 = m1.cols(), cols0 = m0.cols();
  Storage out(m1.rows(), 2 * cols1 * cols0);
  for (int c = 0; c < 2 * cols1 * cols0; ++c) {
    bool bit_one = c < cols1 * cols0;
    int rem = c % (cols1 * cols0);
    int u = rem / cols0;
    int v = rem % cols0;
    const StochMatrix& src = bit_one ? m1 : m0;
    int j = bit_one ? u : v;
    for (int i = 0; i < out.rows(); ++i) out(i, c) = src.at(i, j);
  }
  return StochMatrix(std::move(out));
}

StochMatrix conv_comb_matrix(const Rat& p, const StochMatrix& a, const StochMatrix& b) {
  Storage out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = p * a.at(i, j) + (1 - p) * b.at(i, j);
  return StochMatrix(std::move(out));
}

StochMatrix eval_rec(const TermPtr& t, TheoryKind k) {
  bool circuit = k == TheoryKind::Circuit;
  switch (t->kind) {
    case NodeKind::Gen:
      return circuit ? circuit_gen_matrix(*t) : convex_gen_matrix(*t);
    case NodeKind::Id:
      if (circuit && t->a > 20) throw DomainError("identity on too many wires to evaluate");
      return StochMatrix::identity(circuit ? 1 << t->a : t->a);
    case NodeKind::SwapElem:
      return swap_kron(1, 1);
    case NodeKind::SwapDim:
      return swap_dsum(t->a, t->b);
    case NodeKind::Seq:
      return matmul(eval_rec(t->right, k), eval_rec(t->left, k));
    case NodeKind::Par: {
      StochMatrix l = eval_rec(t->left, k);
      StochMatrix r = eval_rec(t->right, k);
      return circuit ? kron(l, r) : dsum(l, r);
    }
    case NodeKind::Or:
      return or_matrix();
    case NodeKind::IfGate:
      return if_gate_matrix(eval_rec(t->left, k), eval_rec(t->right, k));
    case NodeKind::CondState:
      return weighted_stack(t->param, eval_rec(t->left, k), eval_rec(t->right, k));
    case NodeKind::ConvComb:
      return conv_comb_matrix(t->param, eval_rec(t->left, k), eval_rec(t->right, k));
    case NodeKind::ConvPair:
      return weighted_stack(t->param, eval_rec(t->left, k), eval_rec(t->right, k));
    case NodeKind::Codiag:
      return codiag(t->a, t->b);
  }
  throw TypeCheckError("unreachable term kind in eval");
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

StochMatrix eval(const TermPtr& t, TheoryKind k) {
  typecheck(t, k);
  return eval_rec(t, k);
}

TermPtr state_term_circuit(const Distribution& mu) {
  if (!is_power_of_two(mu.size()))
    throw DimensionError("state_term_circuit needs a power-of-two length");
  if (mu.size() == 1) return id_term(0);
  BitSplit split = cond_split_bit(mu);
  return cond_state(split.p.value(), state_term_circuit(split.on_one),
                    state_term_circuit(split.on_zero));
}

TermPtr column_term_convex(const Distribution& mu) {
  if (mu.size() == 1) return id_term(1);
  FirstSplit split = cond_split_first(mu);
  return conv_pair(split.p.value(), id_term(1), column_term_convex(split.rest));
}

TermPtr matrix_term_convex(const StochMatrix& a) {
  if (a.cols() == 0) return id_term(0);
  if (a.rows() < 1) throw DimensionError("matrix_term_convex needs rows >= 1 or no columns");
  std::vector<TermPtr> cols;
  cols.reserve(static_cast<size_t>(a.cols()));
  for (int j = 0; j < a.cols(); ++j) cols.push_back(column_term_convex(column(a, j)));
  return seq(par_chain(cols), codiag_term(a.cols(), a.rows()));
}

TermPtr matrix_term_circuit(const StochMatrix& a) {
  if (!is_power_of_two(a.rows()) || !is_power_of_two(a.cols()))
    throw DimensionError("matrix_term_circuit needs power-of-two dimensions");
  if (a.cols() == 1) return state_term_circuit(column(a, 0));
  TermPtr on_one = matrix_term_circuit(restrict_first_bit(a, true));
  TermPtr on_zero = matrix_term_circuit(restrict_first_bit(a, false));
  if (a.cols() == 2) return if_gate(on_one, on_zero);
  int sub_wires = 0;
  for (int c = a.cols() / 2; c > 1; c /= 2) ++sub_wires;
  return seq(par(id_term(1), copy_bundle(sub_wires)), if_gate(on_one, on_zero));
}

}  // namespace qsd
