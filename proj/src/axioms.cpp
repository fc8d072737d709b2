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

#include "qsd/axioms.hpp"

namespace qsd {

std::vector<Rat> default_param_grid() {
  return {Rat(0), make_rat(1, 4), make_rat(1, 3), make_rat(1, 2),
          make_rat(2, 3), make_rat(3, 4), Rat(1)};
}

namespace {

// 0/0 = 1; otherwise the denominator must divide exactly in the intended
// parameter range, which the callers guarantee.
Rat tilde_div(const Rat& num, const Rat& den) {
  if (den == 0) {
    if (num != 0) throw DomainError("derived axiom parameter divides a nonzero by zero");
    return Rat(1);
  }
  return Rat(num / den);
}

void push(std::vector<AxiomInstance>& out, const std::string& name, TermPtr lhs, TermPtr rhs) {
  out.push_back({name, std::move(lhs), std::move(rhs)});
}

}  // namespace

std::vector<AxiomInstance> circuit_axiom_instances(const std::vector<Rat>& grid) {
  std::vector<AxiomInstance> out;
  TermPtr one = gen_flip(Rat(1));
  TermPtr zero = gen_flip(Rat(0));

  // Comonoid laws for copy/del.
  push(out, "copy_assoc", seq(gen_copy(), par(gen_copy(), id_term(1))),
       seq(gen_copy(), par(id_term(1), gen_copy())));
  push(out, "copy_unit", seq(gen_copy(), par(gen_del(), id_term(1))), id_term(1));
  push(out, "copy_comm", seq(gen_copy(), swap_elem()), gen_copy());

  // Monoid laws for and, with true as unit.
  push(out, "and_assoc", seq(par(gen_and(), id_term(1)), gen_and()),
       seq(par(id_term(1), gen_and()), gen_and()));
  push(out, "and_unit", seq(par(one, id_term(1)), gen_and()), id_term(1));
  push(out, "and_comm", seq(swap_elem(), gen_and()), gen_and());

  push(out, "notnot", seq(gen_not(), gen_not()), id_term(1));
  push(out, "copyand", seq(gen_copy(), gen_and()), id_term(1));
  push(out, "copynotand", seq(seq(gen_copy(), par(id_term(1), gen_not())), gen_and()),
       seq(gen_del(), zero));

  // x and (y or z) = (x and y) or (x and z).
  push(out, "andordist", seq(par(id_term(1), or_gate()), gen_and()),
       seq(seq(seq(par(gen_copy(), id_term(2)), par(par(id_term(1), swap_elem()), id_term(1))),
               par(gen_and(), gen_and())),
           or_gate()));

  push(out, "copyzero", seq(zero, gen_copy()), par(zero, zero));
  push(out, "copyone", seq(one, gen_copy()), par(one, one));
  push(out, "andcopy", seq(gen_and(), gen_copy()),
       seq(seq(par(gen_copy(), gen_copy()), par(par(id_term(1), swap_elem()), id_term(1))),
           par(gen_and(), gen_and())));
  push(out, "notcopy", seq(gen_not(), gen_copy()), seq(gen_copy(), par(gen_not(), gen_not())));
  push(out, "anddel", seq(gen_and(), gen_del()), par(gen_del(), gen_del()));
  push(out, "notdel", seq(gen_not(), gen_del()), gen_del());

  for (const Rat& p : grid) {
    push(out, "pdel", seq(gen_flip(p), gen_del()), id_term(0));
    push(out, "pnot", seq(gen_flip(p), gen_not()), gen_flip(Rat(1 - p)));
  }

  // Inverting the conditioning order of a two-bit state.
  for (const Rat& r : grid)
    for (const Rat& p : grid)
      for (const Rat& q : grid) {
        Rat rt = r * p + (1 - r) * q;
        Rat pt = tilde_div(Rat(r * p), rt);
        Rat qt = tilde_div(Rat(r * (1 - p)), Rat(1 - rt));
        push(out, "geninverse", cond_state(r, gen_flip(p), gen_flip(q)),
             seq(cond_state(rt, gen_flip(pt), gen_flip(qt)), swap_elem()));
      }

  // Reassociating a three-way convex combination.
  std::vector<TermPtr> pool = {id_term(1), gen_not(), seq(gen_del(), gen_flip(make_rat(1, 2)))};
  for (const Rat& s : grid)
    for (const Rat& t : grid) {
      Rat st = s * t;
      Rat tt = tilde_div(Rat(s * (1 - t)), Rat(1 - st));
      for (const TermPtr& a : pool)
        for (const TermPtr& b : pool)
          for (const TermPtr& c : pool)
            push(out, "ifassoc", conv_comb(s, conv_comb(t, a, b), c),
                 conv_comb(st, a, conv_comb(tt, b, c)));
    }

  // Copying the selector of an if commutes with tagging the branches.
  auto disint = [&](const TermPtr& f1, int n1, const TermPtr& f0, int n0) {
    TermPtr lhs = seq(par(gen_copy(), id_term(n1 + n0)), par(id_term(1), if_gate(f1, f0)));
    TermPtr rhs = if_gate(par(one, f1), par(zero, f0));
    push(out, "ifdisintegration", lhs, rhs);
  };
  for (const TermPtr& f1 : pool)
    for (const TermPtr& f0 : pool) disint(f1, 1, f0, 1);
  disint(gen_flip(make_rat(1, 4)), 0, gen_not(), 1);
  disint(seq(gen_copy(), gen_and()), 1, gen_flip(make_rat(3, 4)), 0);

  return out;
}

std::vector<AxiomInstance> convex_axiom_instances(const std::vector<Rat>& grid) {
  std::vector<AxiomInstance> out;

  // Commutative semigroup laws for cop.
  push(out, "assoc", seq(par(gen_cop(), id_term(1)), gen_cop()),
       seq(par(id_term(1), gen_cop()), gen_cop()));
  push(out, "comm", seq(swap_dim(1, 1), gen_cop()), gen_cop());

  for (const Rat& p : grid) {
    push(out, "convcomm", seq(gen_cc(p), swap_dim(1, 1)), gen_cc(Rat(1 - p)));
    push(out, "idemp", seq(gen_cc(p), gen_cop()), id_term(1));
    push(out, "natdel", seq(gen_cc(p), par(gen_del(), gen_del())), gen_del());
    push(out, "cccop", seq(gen_cop(), gen_cc(p)),
         seq(seq(par(gen_cc(p), gen_cc(p)), par(par(id_term(1), swap_dim(1, 1)), id_term(1))),
             par(gen_cop(), gen_cop())));
    for (const Rat& q : grid) {
      Rat pt = p * q;
      Rat qt = tilde_div(Rat(p - p * q), Rat(1 - p * q));
      push(out, "convassoc", seq(gen_cc(p), par(gen_cc(q), id_term(1))),
           seq(gen_cc(pt), par(id_term(1), gen_cc(qt))));
    }
  }

  push(out, "copdel", seq(gen_cop(), gen_del()), par(gen_del(), gen_del()));

  return out;
}

}  // namespace qsd
