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

#include "qsd/fuzz.hpp"

#include <cmath>
#include <functional>

#include "qsd/rng.hpp"
#include "qsd/semantics.hpp"
#include "qsd/synth.hpp"

namespace qsd {

namespace {

Order alpha_pool(SplitMix64& rng) {
  switch (rng.below(6)) {
    case 0: return Order::zero();
    case 1: return Order::general(make_rat(1, 2));
    case 2: return Order::one();
    case 3: return Order::general(Rat(2));
    case 4: return Order::general(Rat(3));
    default: return Order::infinity();
  }
}

bool has_zero(const StochMatrix& a) {
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (a.at(i, j) == 0) return true;
  return false;
}

bool has_zero(const Distribution& d) {
  for (int i = 0; i < d.size(); ++i)
    if (d[i] == 0) return true;
  return false;
}

std::string describe(const Order& a) { return "alpha=" + a.to_string(); }

std::optional<std::string> chain_suite(SplitMix64& rng, const FuzzOptions& opts, bool& zero) {
  Order a = alpha_pool(rng);
  int m = static_cast<int>(rng.below(5));
  Distribution mu = random_distribution(rng, 1 << (m + 1), opts.zero_rate);
  Distribution nu = random_distribution(rng, 1 << (m + 1), opts.zero_rate);
  zero = has_zero(mu) || has_zero(nu);
  auto [plhs, prhs] = chain_oracle_prod(a, mu, nu);
  if (!approx_equal(plhs, prhs))
    return "product chain rule: " + describe(a) + " lhs=" + to_string(plhs) +
           " rhs=" + to_string(prhs);
  int len = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(2 * opts.max_dim - 1)));
  Distribution ms = random_distribution(rng, len, opts.zero_rate);
  Distribution ns = random_distribution(rng, len, opts.zero_rate);
  zero = zero || has_zero(ms) || has_zero(ns);
  auto [slhs, srhs] = chain_oracle_sum(a, ms, ns);
  if (!approx_equal(slhs, srhs))
    return "sum chain rule: " + describe(a) + " lhs=" + to_string(slhs) +
           " rhs=" + to_string(srhs);
  return std::nullopt;
}

std::optional<std::string> enrichment_suite(SplitMix64& rng, const FuzzOptions& opts,
                                            bool& zero) {
  Order a = alpha_pool(rng);
  auto dim = [&](int cap) { return 1 + static_cast<int>(rng.below(static_cast<uint64_t>(cap))); };
  int n = dim(opts.max_dim), m = dim(opts.max_dim), k = dim(opts.max_dim);
  StochMatrix f = random_stoch_matrix(rng, m, n, opts.zero_rate);
  StochMatrix fp = random_stoch_matrix(rng, m, n, opts.zero_rate);
  StochMatrix g = random_stoch_matrix(rng, k, m, opts.zero_rate);
  StochMatrix gp = random_stoch_matrix(rng, k, m, opts.zero_rate);
  zero = has_zero(f) || has_zero(fp) || has_zero(g) || has_zero(gp);
  ExtReal parts = add(div_max(a, f, fp), div_max(a, g, gp));
  if (!approx_leq(div_max(a, matmul(g, f), matmul(gp, fp)), parts))
    return "composition enrichment violated at " + describe(a);

  int a1 = dim(3), b1 = dim(3), a2 = dim(3), b2 = dim(3);
  StochMatrix u = random_stoch_matrix(rng, a1, b1, opts.zero_rate);
  StochMatrix up = random_stoch_matrix(rng, a1, b1, opts.zero_rate);
  StochMatrix v = random_stoch_matrix(rng, a2, b2, opts.zero_rate);
  StochMatrix vp = random_stoch_matrix(rng, a2, b2, opts.zero_rate);
  if (!approx_leq(div_max(a, kron(u, v), kron(up, vp)), add(div_max(a, u, up), div_max(a, v, vp))))
    return "kron enrichment violated at " + describe(a);
  if (!approx_equal(div_max(a, dsum(u, v), dsum(up, vp)),
                    ext_max(div_max(a, u, up), div_max(a, v, vp))))
    return "dsum max-equality violated at " + describe(a);

  int wa = static_cast<int>(rng.below(3)), wb = static_cast<int>(rng.below(3));
  int wc = static_cast<int>(rng.below(3));
  StochMatrix m1 = random_stoch_matrix(rng, 1 << wa, 1 << wb, opts.zero_rate);
  StochMatrix n1 = random_stoch_matrix(rng, 1 << wa, 1 << wb, opts.zero_rate);
  StochMatrix m0 = random_stoch_matrix(rng, 1 << wa, 1 << wc, opts.zero_rate);
  StochMatrix n0 = random_stoch_matrix(rng, 1 << wa, 1 << wc, opts.zero_rate);
  StochMatrix iff = eval(if_gate(matrix_term_circuit(m1), matrix_term_circuit(m0)),
                         TheoryKind::Circuit);
  StochMatrix ifg = eval(if_gate(matrix_term_circuit(n1), matrix_term_circuit(n0)),
                         TheoryKind::Circuit);
  if (!approx_equal(div_max(a, iff, ifg),
                    ext_max(div_max(a, m1, n1), div_max(a, m0, n0))))
    return "if-gate max-equality violated at " + describe(a);
  return std::nullopt;
}

struct SynthCase {
  TheoryConfig cfg{TheoryKind::Circuit, Order::one()};
  TermPtr f, g;
  StochMatrix A{StochMatrix::identity(1)};
  StochMatrix B{StochMatrix::identity(1)};
};

SynthCase random_synth_case(SplitMix64& rng, const FuzzOptions& opts, bool& zero) {
  SynthCase c;
  bool circuit = rng.below(2) == 0;
  c.cfg.kind = circuit ? TheoryKind::Circuit : TheoryKind::Convex;
  c.cfg.alpha = alpha_pool(rng);
  if (circuit) {
    if (rng.below(3) == 0) {
      // A pure state pair, wider than the general case.
      int m = static_cast<int>(rng.below(6));
      c.A = random_stoch_matrix(rng, 1 << m, 1, opts.zero_rate);
      c.B = random_stoch_matrix(rng, 1 << m, 1, opts.zero_rate);
    } else {
      int n = static_cast<int>(rng.below(static_cast<uint64_t>(opts.max_wires) + 1));
      int m = static_cast<int>(rng.below(static_cast<uint64_t>(opts.max_wires) + 1));
      c.A = random_stoch_matrix(rng, 1 << m, 1 << n, opts.zero_rate);
      c.B = random_stoch_matrix(rng, 1 << m, 1 << n, opts.zero_rate);
    }
    c.f = matrix_term_circuit(c.A);
    c.g = matrix_term_circuit(c.B);
  } else {
    int n = 1 + static_cast<int>(rng.below(4));
    int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(opts.max_dim)));
    c.A = random_stoch_matrix(rng, m, n, opts.zero_rate);
    c.B = random_stoch_matrix(rng, m, n, opts.zero_rate);
    c.f = matrix_term_convex(c.A);
    c.g = matrix_term_convex(c.B);
  }
  zero = has_zero(c.A) || has_zero(c.B);
  return c;
}

std::optional<std::string> tightness_suite(SplitMix64& rng, const FuzzOptions& opts, bool& zero) {
  SynthCase c = random_synth_case(rng, opts, zero);
  // Half the time replace one side by a free-form random term of equal type,
  // re-deriving its matrix.
  if (rng.below(2) == 0) {
    TermPtr t = random_term(rng, c.cfg.kind, c.cfg.kind == TheoryKind::Circuit ? opts.max_wires
                                                                               : opts.max_dim,
                            3, opts.zero_rate);
    TermType ty = typecheck(t, c.cfg.kind);
    StochMatrix T = eval(t, c.cfg.kind);
    if (T.rows() >= 1 || T.cols() == 0) {
      StochMatrix other =
          T.cols() == 0 || T.rows() == 0
              ? T
              : random_stoch_matrix(rng, T.rows(), T.cols(), opts.zero_rate);
      c.f = t;
      c.A = T;
      c.g = c.cfg.kind == TheoryKind::Circuit ? matrix_term_circuit(other)
                                              : matrix_term_convex(other);
      c.B = other;
      (void)ty;
    }
  }
  zero = zero || has_zero(c.A) || has_zero(c.B);
  DerivPtr d = derive(c.cfg, c.f, c.g);
  Judgement j = check(d, c.cfg);
  ExtReal want = div_max(c.cfg.alpha, c.A, c.B);
  ExtReal got = bound_of(j);
  if (!approx_equal(got, want))
    return "synthesis bound " + to_string(got) + " differs from divergence " + to_string(want) +
           " at " + describe(c.cfg.alpha);
  return std::nullopt;
}

std::optional<std::string> soundness_suite(SplitMix64& rng, const FuzzOptions& opts, bool& zero) {
  SynthCase c = random_synth_case(rng, opts, zero);
  DerivPtr d = derive(c.cfg, c.f, c.g);
  Judgement j = check(d, c.cfg);
  ExtReal truth = div_max(c.cfg.alpha, c.A, c.B);
  if (!approx_leq(truth, bound_of(j))) return "synthesized bound is unsound";

  auto paths = derivation_paths(d);
  std::vector<std::vector<int>> quantitative;
  for (auto& p : paths) {
    const Derivation* node = d.get();
    for (int i : p) node = node->premises[static_cast<size_t>(i)].get();
    if (!node->conclusion.bound.strict) quantitative.push_back(p);
  }
  if (quantitative.empty()) return std::nullopt;

  const auto& ipath = quantitative[rng.below(quantitative.size())];
  double amount = 0.25 + rng.unit();
  DerivPtr inflated = inflate_at(c.cfg, d, ipath, amount);
  Judgement ij = check(inflated, c.cfg);
  if (!approx_leq(bound_of(j), bound_of(ij)))
    return "inflating a premise shrank the root bound";
  if (!approx_leq(truth, bound_of(ij))) return "inflated derivation is unsound";

  std::vector<std::vector<int>> deflatable;
  for (auto& p : quantitative) {
    const Derivation* node = d.get();
    for (int i : p) node = node->premises[static_cast<size_t>(i)].get();
    ExtReal e = node->conclusion.bound.eps;
    if (e.is_infinite() || e.value() > 2e-6) deflatable.push_back(p);
  }
  if (deflatable.empty()) return std::nullopt;
  DerivPtr deflated = deflate_at(d, deflatable[rng.below(deflatable.size())], 1e-4);
  try {
    check(deflated, c.cfg);
    return "deflated derivation was accepted";
  } catch (const BoundMismatchError&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::vector<int>> derivation_paths(const DerivPtr& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  struct Walk {
    std::vector<std::vector<int>>& out;
    void go(const Derivation& n, std::vector<int>& path) {
      out.push_back(path);
      for (size_t i = 0; i < n.premises.size(); ++i) {
        path.push_back(static_cast<int>(i));
        go(*n.premises[i], path);
        path.pop_back();
      }
    }
  } walk{out};
  walk.go(*d, cur);
  return out;
}

DerivPtr inflate_at(const TheoryConfig& cfg, const DerivPtr& d, const std::vector<int>& path,
                    double amount) {
  std::function<DerivPtr(const DerivPtr&, size_t)> go = [&](const DerivPtr& node,
                                                            size_t depth) -> DerivPtr {
    if (depth == path.size()) {
      ExtReal target = add(bound_of(node->conclusion), ExtReal::from_value(amount));
      return mk_mono(cfg, target, node);
    }
    auto idx = static_cast<size_t>(path[depth]);
    std::vector<DerivPtr> premises = node->premises;
    premises[idx] = go(premises[idx], depth + 1);
    return rebuild_with_premises(cfg, *node, std::move(premises));
  };
  return go(d, 0);
}

DerivPtr deflate_at(const DerivPtr& d, const std::vector<int>& path, double amount) {
  std::function<DerivPtr(const DerivPtr&, size_t)> go = [&](const DerivPtr& node,
                                                            size_t depth) -> DerivPtr {
    auto n = std::make_shared<Derivation>(*node);
    if (depth == path.size()) {
      if (n->conclusion.bound.strict)
        throw DomainError("cannot deflate a strict-equality conclusion");
      ExtReal e = n->conclusion.bound.eps;
      n->conclusion.bound.eps =
          e.is_infinite() ? ExtReal::from_value(1e6)
                          : ExtReal::from_value(std::max(0.0, e.value() - amount));
    } else {
      auto idx = static_cast<size_t>(path[depth]);
      n->premises[idx] = go(n->premises[idx], depth + 1);
    }
    return n;
  };
  return go(d, 0);
}

FuzzReport run_fuzz(const FuzzOptions& opts) {
  FuzzReport rep;
  for (int trial = 0; trial < opts.trials; ++trial) {
    SplitMix64 rng = trial_stream(opts.seed, static_cast<uint64_t>(trial));
    bool zero = false;
    std::optional<std::string> fail;
    const char* suite = "";
    try {
      switch (trial % 4) {
        case 0:
          suite = "chain";
          fail = chain_suite(rng, opts, zero);
          break;
        case 1:
          suite = "enrichment";
          fail = enrichment_suite(rng, opts, zero);
          break;
        case 2:
          suite = "tightness";
          fail = tightness_suite(rng, opts, zero);
          break;
        default:
          suite = "soundness";
          fail = soundness_suite(rng, opts, zero);
          break;
      }
    } catch (const std::exception& e) {
      fail = std::string("unexpected error: ") + e.what();
    }
    if (zero) ++rep.zero_branch_trials;
    if (fail) {
      rep.ok = false;
      rep.failed_trial = trial;
      rep.suite = suite;
      rep.message = *fail;
      return rep;
    }
  }
  return rep;
}

}  // namespace qsd
