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

#include "qsd/rng.hpp"

#include "qsd/semantics.hpp"

namespace qsd {

uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n) {
  if (n == 0) throw DomainError("below(0)");
  return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SplitMix64 trial_stream(uint64_t seed, uint64_t trial) {
  SplitMix64 base(seed);
  uint64_t mixed = base.next() + trial * 0x9E3779B97F4A7C15ULL;
  SplitMix64 stream(mixed);
  stream.next();
  return stream;
}

Distribution random_distribution(SplitMix64& rng, int len, double zero_rate) {
  if (len < 1) throw DomainError("distribution length must be positive");
  std::vector<unsigned long> w(static_cast<size_t>(len));
  unsigned long total = 0;
  for (auto& x : w) {
    x = rng.chance(zero_rate) ? 0ul : static_cast<unsigned long>(rng.below(65537));
    total += x;
  }
  if (total == 0) {
    w[rng.below(static_cast<uint64_t>(len))] = 1 + static_cast<unsigned long>(rng.below(65536));
    total = 0;
    for (auto x : w) total += x;
  }
  std::vector<Rat> weights;
  weights.reserve(w.size());
  for (auto x : w) weights.push_back(make_rat(static_cast<long>(x), static_cast<long>(total)));
  return Distribution(std::move(weights));
}

StochMatrix random_stoch_matrix(SplitMix64& rng, int rows, int cols, double zero_rate) {
  if (cols == 0) return StochMatrix::empty(rows == 0 ? 0 : rows, 0);
  std::vector<Distribution> columns;
  columns.reserve(static_cast<size_t>(cols));
  for (int j = 0; j < cols; ++j) columns.push_back(random_distribution(rng, rows, zero_rate));
  return StochMatrix::from_columns(rows, columns);
}

Rat random_param(SplitMix64& rng, double zero_rate) {
  if (rng.chance(zero_rate)) return Rat(rng.below(2) == 0 ? 0 : 1);
  return make_rat(static_cast<long>(rng.below(65537)), 65536);
}

namespace {

/// One random generator layer w -> ? for the circuit theory.
TermPtr circuit_layer(SplitMix64& rng, int wires, int max_obj, double zero_rate) {
  std::vector<TermPtr> factors;
  int remaining = wires;
  int produced = 0;
  while (remaining > 0) {
    int room = max_obj - produced - remaining;  // extra outputs we may add
    uint64_t pick = rng.below(10);
    if (pick < 2) {
      factors.push_back(id_term(1));
      produced += 1;
      remaining -= 1;
    } else if (pick < 4) {
      factors.push_back(gen_not());
      produced += 1;
      remaining -= 1;
    } else if (pick == 4) {
      factors.push_back(gen_del());
      remaining -= 1;
    } else if (pick == 5 && room >= 1) {
      factors.push_back(gen_copy());
      produced += 2;
      remaining -= 1;
    } else if (pick == 6 && remaining >= 2) {
      factors.push_back(gen_and());
      produced += 1;
      remaining -= 2;
    } else if (pick == 7 && remaining >= 2) {
      factors.push_back(swap_elem());
      produced += 2;
      remaining -= 2;
    } else if (pick == 8 && remaining >= 2) {
      factors.push_back(or_gate());
      produced += 1;
      remaining -= 2;
    } else if (pick == 9 && room >= 1) {
      factors.push_back(gen_flip(random_param(rng, zero_rate)));
      produced += 1;
    } else {
      factors.push_back(id_term(1));
      produced += 1;
      remaining -= 1;
    }
  }
  if (wires == 0 && produced == 0 && rng.below(2) == 0 && max_obj >= 1)
    factors.push_back(gen_flip(random_param(rng, zero_rate)));
  return par_chain(factors);
}

/// One random generator layer for the convex theory; deleting layers are
/// all-or-nothing because a zero-output block beside live outputs does not
/// denote a stochastic matrix.
TermPtr convex_layer(SplitMix64& rng, int dim, int max_obj, double zero_rate) {
  if (dim >= 1 && rng.below(12) == 0) {
    std::vector<TermPtr> dels(static_cast<size_t>(dim), gen_del());
    return par_chain(dels);
  }
  std::vector<TermPtr> factors;
  int remaining = dim;
  int produced = 0;
  while (remaining > 0) {
    int room = max_obj - produced - remaining;
    uint64_t pick = rng.below(8);
    if (pick < 3) {
      factors.push_back(id_term(1));
      produced += 1;
      remaining -= 1;
    } else if (pick < 5 && room >= 1) {
      factors.push_back(gen_cc(random_param(rng, zero_rate)));
      produced += 2;
      remaining -= 1;
    } else if (pick == 5 && remaining >= 2) {
      factors.push_back(gen_cop());
      produced += 1;
      remaining -= 2;
    } else if (pick == 6 && remaining >= 2) {
      int a = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(remaining - 1)));
      int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(remaining - a)));
      factors.push_back(swap_dim(a, b));
      produced += a + b;
      remaining -= a + b;
    } else if (pick == 7 && room >= 1) {
      factors.push_back(conv_pair(random_param(rng, zero_rate), id_term(1), id_term(1)));
      produced += 2;
      remaining -= 1;
    } else {
      factors.push_back(id_term(1));
      produced += 1;
      remaining -= 1;
    }
  }
  return par_chain(factors);
}

TermPtr rand_typed_circuit(SplitMix64& rng, int in_wires, int out_wires, double zero_rate) {
  return matrix_term_circuit(random_stoch_matrix(rng, 1 << out_wires, 1 << in_wires, zero_rate));
}

}  // namespace

TermPtr random_term(SplitMix64& rng, TheoryKind k, int max_obj, int layers, double zero_rate) {
  if (max_obj < 1) throw DomainError("max_obj must be positive");
  int start = static_cast<int>(rng.below(static_cast<uint64_t>(max_obj) + 1));
  TermPtr t = id_term(start);
  int cod = start;
  for (int i = 0; i < layers; ++i) {
    TermPtr layer = k == TheoryKind::Circuit ? circuit_layer(rng, cod, max_obj, zero_rate)
                                             : convex_layer(rng, cod, max_obj, zero_rate);
    TermType ty = typecheck(layer, k);
    t = seq(t, layer);
    cod = ty.cod;
  }
  return t;
}

TermPtr random_macro_term(SplitMix64& rng, TheoryKind k, double zero_rate) {
  if (k == TheoryKind::Circuit) {
    switch (rng.below(4)) {
      case 0:
        return or_gate();
      case 1: {
        int n = static_cast<int>(rng.below(2));
        int np = static_cast<int>(rng.below(2));
        int m = static_cast<int>(rng.below(3));
        return if_gate(rand_typed_circuit(rng, n, m, zero_rate),
                       rand_typed_circuit(rng, np, m, zero_rate));
      }
      case 2: {
        int m = static_cast<int>(rng.below(3));
        return cond_state(random_param(rng, zero_rate), rand_typed_circuit(rng, 0, m, zero_rate),
                          rand_typed_circuit(rng, 0, m, zero_rate));
      }
      default: {
        int n = static_cast<int>(rng.below(2));
        int m = static_cast<int>(rng.below(2));
        return conv_comb(random_param(rng, zero_rate), rand_typed_circuit(rng, n, m, zero_rate),
                         rand_typed_circuit(rng, n, m, zero_rate));
      }
    }
  }
  if (rng.below(3) == 0) {
    int n = 1 + static_cast<int>(rng.below(3));
    int m = static_cast<int>(rng.below(3));
    return codiag_term(n, m);
  }
  int a = 1 + static_cast<int>(rng.below(3));
  int b = 1 + static_cast<int>(rng.below(3));
  return conv_pair(random_param(rng, zero_rate),
                   column_term_convex(random_distribution(rng, a, zero_rate)),
                   column_term_convex(random_distribution(rng, b, zero_rate)));
}

}  // namespace qsd
