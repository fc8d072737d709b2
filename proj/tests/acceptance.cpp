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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsd/axioms.hpp"
#include "qsd/fuzz.hpp"
#include "qsd/rng.hpp"
#include "qsd/semantics.hpp"
#include "qsd/synth.hpp"

using namespace qsd;

namespace {

const std::vector<Order> kOrders = {Order::zero(),          Order::general(make_rat(1, 2)),
                                    Order::one(),           Order::general(Rat(2)),
                                    Order::general(Rat(3)), Order::infinity()};

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// --- 1: generator fidelity --------------------------------------------------

std::optional<std::string> generator_fidelity() {
  auto expect = [](const StochMatrix& got, int rows, int cols,
                   std::vector<std::vector<Rat>> want) -> std::optional<std::string> {
    if (got.rows() != rows || got.cols() != cols) return "wrong shape";
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (got.at(i, j) != want[static_cast<size_t>(i)][static_cast<size_t>(j)])
          return "wrong entry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return std::nullopt;
  };
  Rat z(0), o(1);
  if (auto e = expect(eval(gen_copy(), TheoryKind::Circuit), 4, 2,
                      {{o, z}, {z, z}, {z, z}, {z, o}}))
    return "copy: " + *e;
  if (auto e = expect(eval(gen_and(), TheoryKind::Circuit), 2, 4, {{o, z, z, z}, {z, o, o, o}}))
    return "and: " + *e;
  if (auto e = expect(eval(gen_not(), TheoryKind::Circuit), 2, 2, {{z, o}, {o, z}}))
    return "not: " + *e;
  if (auto e = expect(eval(gen_del(), TheoryKind::Circuit), 1, 2, {{o, o}}))
    return "circuit del: " + *e;
  if (auto e = expect(eval(gen_cop(), TheoryKind::Convex), 1, 2, {{o, o}})) return "cop: " + *e;
  StochMatrix cdel = eval(gen_del(), TheoryKind::Convex);
  if (cdel.rows() != 0 || cdel.cols() != 1) return "convex del is not the empty matrix";
  for (const Rat& p : default_param_grid()) {
    if (auto e = expect(eval(gen_flip(p), TheoryKind::Circuit), 2, 1, {{p}, {Rat(1 - p)}}))
      return "flip(" + rat_to_string(p) + "): " + *e;
    if (auto e = expect(eval(gen_cc(p), TheoryKind::Convex), 2, 1, {{p}, {Rat(1 - p)}}))
      return "cc(" + rat_to_string(p) + "): " + *e;
  }
  return std::nullopt;
}

// --- 2: base axioms on the parameter grid -----------------------------------

std::optional<std::string> base_axioms() {
  std::vector<Rat> grid = default_param_grid();
  int count = 0;
  for (const AxiomInstance& ax : circuit_axiom_instances(grid)) {
    if (eval(ax.lhs, TheoryKind::Circuit) != eval(ax.rhs, TheoryKind::Circuit))
      return "circuit axiom '" + ax.name + "' fails at instance " + std::to_string(count);
    ++count;
  }
  for (const AxiomInstance& ax : convex_axiom_instances(grid)) {
    if (eval(ax.lhs, TheoryKind::Convex) != eval(ax.rhs, TheoryKind::Convex))
      return "convex axiom '" + ax.name + "' fails at instance " + std::to_string(count);
    ++count;
  }
  return std::nullopt;
}

// --- 3: chain-rule oracles ---------------------------------------------------

std::optional<std::string> chain_oracles() {
  const int pairs = 1000;
  for (int i = 0; i < pairs; ++i) {
    SplitMix64 rng = trial_stream(301, static_cast<uint64_t>(i));
    int m = static_cast<int>(rng.below(5));
    Distribution mu = random_distribution(rng, 1 << (m + 1), 0.2);
    Distribution nu = random_distribution(rng, 1 << (m + 1), 0.2);
    int len = 2 + static_cast<int>(rng.below(11));
    Distribution ms = random_distribution(rng, len, 0.2);
    Distribution ns = random_distribution(rng, len, 0.2);
    for (const Order& a : kOrders) {
      auto [pl, pr] = chain_oracle_prod(a, mu, nu);
      if (!approx_equal(pl, pr))
        return "product pair " + std::to_string(i) + " at alpha=" + a.to_string() + ": lhs " +
               to_string(pl) + " rhs " + to_string(pr);
      auto [sl, sr] = chain_oracle_sum(a, ms, ns);
      if (!approx_equal(sl, sr))
        return "sum pair " + std::to_string(i) + " at alpha=" + a.to_string() + ": lhs " +
               to_string(sl) + " rhs " + to_string(sr);
    }
  }
  return std::nullopt;
}

// --- 4: enrichment -----------------------------------------------------------

std::optional<std::string> enrichment() {
  const int instances = 1000;
  for (int i = 0; i < instances; ++i) {
    SplitMix64 rng = trial_stream(401, static_cast<uint64_t>(i));
    int n = 1 + static_cast<int>(rng.below(5));
    int m = 1 + static_cast<int>(rng.below(5));
    int k = 1 + static_cast<int>(rng.below(5));
    StochMatrix f = random_stoch_matrix(rng, m, n, 0.2);
    StochMatrix fp = random_stoch_matrix(rng, m, n, 0.2);
    StochMatrix g = random_stoch_matrix(rng, k, m, 0.2);
    StochMatrix gp = random_stoch_matrix(rng, k, m, 0.2);
    int a1 = 1 + static_cast<int>(rng.below(3)), b1 = 1 + static_cast<int>(rng.below(3));
    int a2 = 1 + static_cast<int>(rng.below(3)), b2 = 1 + static_cast<int>(rng.below(3));
    StochMatrix u = random_stoch_matrix(rng, a1, b1, 0.2);
    StochMatrix up = random_stoch_matrix(rng, a1, b1, 0.2);
    StochMatrix v = random_stoch_matrix(rng, a2, b2, 0.2);
    StochMatrix vp = random_stoch_matrix(rng, a2, b2, 0.2);
    int wa = static_cast<int>(rng.below(3)), wb = static_cast<int>(rng.below(3));
    int wc = static_cast<int>(rng.below(3));
    StochMatrix m1 = random_stoch_matrix(rng, 1 << wa, 1 << wb, 0.2);
    StochMatrix n1 = random_stoch_matrix(rng, 1 << wa, 1 << wb, 0.2);
    StochMatrix m0 = random_stoch_matrix(rng, 1 << wa, 1 << wc, 0.2);
    StochMatrix n0 = random_stoch_matrix(rng, 1 << wa, 1 << wc, 0.2);
    StochMatrix iff =
        eval(if_gate(matrix_term_circuit(m1), matrix_term_circuit(m0)), TheoryKind::Circuit);
    StochMatrix ifg =
        eval(if_gate(matrix_term_circuit(n1), matrix_term_circuit(n0)), TheoryKind::Circuit);
    for (const Order& a : kOrders) {
      std::string tag = " instance " + std::to_string(i) + " at alpha=" + a.to_string();
      if (!approx_leq(div_max(a, matmul(g, f), matmul(gp, fp)),
                      add(div_max(a, f, fp), div_max(a, g, gp))))
        return "composition bound" + tag;
      if (!approx_leq(div_max(a, kron(u, v), kron(up, vp)),
                      add(div_max(a, u, up), div_max(a, v, vp))))
        return "kron bound" + tag;
      if (!approx_equal(div_max(a, dsum(u, v), dsum(up, vp)),
                        ext_max(div_max(a, u, up), div_max(a, v, vp))))
        return "dsum max-equality" + tag;
      if (!approx_equal(div_max(a, iff, ifg), ext_max(div_max(a, m1, n1), div_max(a, m0, n0))))
        return "if-gate max-equality" + tag;
    }
  }
  return std::nullopt;
}

// --- 5: checker soundness under perturbation ---------------------------------

struct PoolEntry {
  TheoryConfig cfg;
  DerivPtr deriv;
  ExtReal truth;
};

std::vector<PoolEntry> derivation_pool(uint64_t seed, int size) {
  std::vector<PoolEntry> pool;
  int i = 0;
  while (static_cast<int>(pool.size()) < size) {
    SplitMix64 rng = trial_stream(seed, static_cast<uint64_t>(i++));
    bool circuit = rng.below(2) == 0;
    // KL and above have plenty of nonzero bounds; order 0 is often all-zero.
    const Order& a = kOrders[1 + rng.below(5)];
    TheoryConfig cfg{circuit ? TheoryKind::Circuit : TheoryKind::Convex, a};
    TermPtr f, g;
    StochMatrix A = StochMatrix::identity(1), B = StochMatrix::identity(1);
    if (circuit) {
      int n = static_cast<int>(rng.below(3));
      int m = static_cast<int>(rng.below(3));
      A = random_stoch_matrix(rng, 1 << m, 1 << n, 0.25);
      B = random_stoch_matrix(rng, 1 << m, 1 << n, 0.25);
      f = matrix_term_circuit(A);
      g = matrix_term_circuit(B);
    } else {
      int n = 1 + static_cast<int>(rng.below(4));
      int m = 1 + static_cast<int>(rng.below(5));
      A = random_stoch_matrix(rng, m, n, 0.25);
      B = random_stoch_matrix(rng, m, n, 0.25);
      f = matrix_term_convex(A);
      g = matrix_term_convex(B);
    }
    pool.push_back({cfg, derive(cfg, f, g), div_max(a, A, B)});
  }
  return pool;
}

std::optional<std::string> checker_soundness() {
  std::vector<PoolEntry> pool = derivation_pool(501, 120);
  for (size_t i = 0; i < pool.size(); ++i) {
    Judgement j = check(pool[i].deriv, pool[i].cfg);
    if (!approx_leq(pool[i].truth, bound_of(j)))
      return "synthesized derivation " + std::to_string(i) + " is unsound";
  }

  int inflations = 0, deflations = 0, attempts = 0;
  SplitMix64 rng(777);
  while ((inflations < 500 || deflations < 500) && attempts < 20000) {
    ++attempts;
    const PoolEntry& entry = pool[rng.below(pool.size())];
    auto paths = derivation_paths(entry.deriv);
    std::vector<std::vector<int>> quantitative, deflatable;
    for (auto& p : paths) {
      const Derivation* node = entry.deriv.get();
      for (int ix : p) node = node->premises[static_cast<size_t>(ix)].get();
      if (node->conclusion.bound.strict) continue;
      quantitative.push_back(p);
      ExtReal e = node->conclusion.bound.eps;
      if (e.is_infinite() || e.value() > 2e-6) deflatable.push_back(p);
    }
    if (inflations < 500 && !quantitative.empty()) {
      const auto& path = quantitative[rng.below(quantitative.size())];
      DerivPtr up = inflate_at(entry.cfg, entry.deriv, path, 0.1 + rng.unit());
      try {
        Judgement j = check(up, entry.cfg);
        if (!approx_leq(entry.truth, bound_of(j))) return "inflated derivation became unsound";
      } catch (const CheckError& e) {
        return std::string("inflated derivation rejected: ") + e.what();
      }
      ++inflations;
    }
    if (deflations < 500 && !deflatable.empty()) {
      const auto& path = deflatable[rng.below(deflatable.size())];
      DerivPtr down = deflate_at(entry.deriv, path, 1e-4);
      try {
        check(down, entry.cfg);
        return "deflated derivation was accepted";
      } catch (const BoundMismatchError&) {
        ++deflations;
      } catch (const CheckError& e) {
        return std::string("deflation rejected with the wrong error: ") + e.what();
      }
    }
  }
  if (inflations < 500 || deflations < 500)
    return "could not assemble 500 perturbations of each kind";
  return std::nullopt;
}

// --- 6: completeness / tightness ----------------------------------------------

std::optional<std::string> tightness() {
  int zero_trials = 0, total = 0;
  auto run_config = [&](const char* name, int count, uint64_t seed,
                        const std::function<std::pair<StochMatrix, StochMatrix>(SplitMix64&)>&
                            sample,
                        TheoryKind kind) -> std::optional<std::string> {
    for (int i = 0; i < count; ++i) {
      SplitMix64 rng = trial_stream(seed, static_cast<uint64_t>(i));
      auto [A, B] = sample(rng);
      bool zero = false;
      for (int j = 0; j < A.cols() && !zero; ++j)
        for (int r = 0; r < A.rows() && !zero; ++r)
          if (A.at(r, j) == 0 || B.at(r, j) == 0) zero = true;
      TermPtr f = kind == TheoryKind::Circuit ? matrix_term_circuit(A) : matrix_term_convex(A);
      TermPtr g = kind == TheoryKind::Circuit ? matrix_term_circuit(B) : matrix_term_convex(B);
      for (const Order& a : kOrders) {
        TheoryConfig cfg{kind, a};
        DerivPtr d = derive(cfg, f, g);
        Judgement j;
        try {
          j = check(d, cfg);
        } catch (const CheckError& e) {
          return std::string(name) + ": derivation rejected: " + e.what();
        }
        ExtReal want = div_max(a, A, B);
        if (!approx_equal(bound_of(j), want))
          return std::string(name) + " pair " + std::to_string(i) +
                 " at alpha=" + a.to_string() + ": bound " + to_string(bound_of(j)) +
                 " vs divergence " + to_string(want);
        ++total;
        if (zero) ++zero_trials;
      }
    }
    return std::nullopt;
  };

  if (auto e = run_config(
          "circuit states", 500, 601,
          [](SplitMix64& rng) {
            int m = static_cast<int>(rng.below(6));
            return std::pair{random_stoch_matrix(rng, 1 << m, 1, 0.2),
                             random_stoch_matrix(rng, 1 << m, 1, 0.2)};
          },
          TheoryKind::Circuit))
    return e;
  if (auto e = run_config(
          "circuit general", 500, 602,
          [](SplitMix64& rng) {
            int n = static_cast<int>(rng.below(4));
            int m = static_cast<int>(rng.below(4));
            return std::pair{random_stoch_matrix(rng, 1 << m, 1 << n, 0.2),
                             random_stoch_matrix(rng, 1 << m, 1 << n, 0.2)};
          },
          TheoryKind::Circuit))
    return e;
  if (auto e = run_config(
          "convex", 500, 603,
          [](SplitMix64& rng) {
            int n = 1 + static_cast<int>(rng.below(4));
            int m = 1 + static_cast<int>(rng.below(6));
            return std::pair{random_stoch_matrix(rng, m, n, 0.2),
                             random_stoch_matrix(rng, m, n, 0.2)};
          },
          TheoryKind::Convex))
    return e;

  if (zero_trials * 10 < total)
    return "only " + std::to_string(zero_trials) + "/" + std::to_string(total) +
           " trials exercised zero-probability branches";
  return std::nullopt;
}

// --- 7: point values -----------------------------------------------------------

std::optional<std::string> point_values() {
  Distribution half({make_rat(1, 2), make_rat(1, 2)});
  Distribution sure({Rat(1), Rat(0)});
  if (!kl(half, sure).is_infinite()) return "kl([1/2,1/2],[1,0]) should be infinite";
  SplitMix64 rng(701);
  for (int i = 0; i < 50; ++i) {
    Distribution mu = random_distribution(rng, 1 + static_cast<int>(rng.below(8)), 0.25);
    if (kl(mu, mu) != ExtReal::zero()) return "kl(mu,mu) not exactly zero";
    for (const Order& a : kOrders)
      if (renyi(a, mu, mu) != ExtReal::zero()) return "renyi(alpha,mu,mu) not exactly zero";
  }
  ExtReal lg = kl(sure, half);
  if (std::fabs(lg.value() - std::log(2.0)) > 1e-12) return "kl([1,0],[1/2,1/2]) is not log 2";
  if (div_max(Order::one(), StochMatrix::empty(0, 0), StochMatrix::empty(0, 0)) !=
      ExtReal::zero())
    return "div_max on empty matrices is not 0";
  return std::nullopt;
}

// --- 8: round trips --------------------------------------------------------------

std::optional<std::string> round_trips() {
  SplitMix64 rng(801);
  for (int i = 0; i < 1000; ++i) {
    TheoryKind k = i % 2 == 0 ? TheoryKind::Circuit : TheoryKind::Convex;
    TermPtr t = i % 4 == 0 ? random_macro_term(rng, k, 0.2) : random_term(rng, k, 4, 3, 0.2);
    if (!structural_equal(parse_term(print_term(t), k), t))
      return "parse(print) differs on term " + std::to_string(i) + ": " + print_term(t);
  }
  for (int i = 0; i < 500; ++i) {
    SplitMix64 s = trial_stream(802, static_cast<uint64_t>(i));
    Distribution mu = random_distribution(s, 1 << s.below(6), 0.25);
    if (column(eval(state_term_circuit(mu), TheoryKind::Circuit), 0) != mu)
      return "state_term_circuit round trip failed at " + std::to_string(i);
    Distribution nu = random_distribution(s, 1 + static_cast<int>(s.below(8)), 0.25);
    if (column(eval(column_term_convex(nu), TheoryKind::Convex), 0) != nu)
      return "column_term_convex round trip failed at " + std::to_string(i);
    StochMatrix A = random_stoch_matrix(s, 1 + static_cast<int>(s.below(6)),
                                        1 + static_cast<int>(s.below(4)), 0.25);
    if (eval(matrix_term_convex(A), TheoryKind::Convex) != A)
      return "matrix_term_convex round trip failed at " + std::to_string(i);
    StochMatrix C = random_stoch_matrix(s, 1 << s.below(4), 1 << s.below(4), 0.25);
    if (eval(matrix_term_circuit(C), TheoryKind::Circuit) != C)
      return "matrix_term_circuit round trip failed at " + std::to_string(i);
  }
  return std::nullopt;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::optional<std::string>()> run;
  };
  std::vector<Criterion> criteria = {
      {"generator fidelity", generator_fidelity},
      {"base axioms on the parameter grid", base_axioms},
      {"chain-rule oracles", chain_oracles},
      {"enrichment bounds and max-equalities", enrichment},
      {"checker soundness under perturbation", checker_soundness},
      {"completeness tightness", tightness},
      {"point values", point_values},
      {"round trips", round_trips},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> err;
    try {
      err = criteria[i].run();
    } catch (const std::exception& e) {
      err = std::string("unexpected error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err) {
      ++failures;
      std::printf("FAIL criterion %zu (%s): %s%s\n", i + 1, criteria[i].name, err->c_str(),
                  fmt(" [%.2f s]", secs).c_str());
    } else {
      std::printf("PASS criterion %zu (%s)%s\n", i + 1, criteria[i].name,
                  fmt(" [%.2f s]", secs).c_str());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
