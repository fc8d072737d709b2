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

#include "doctest.h"
#include "qsd/rng.hpp"
#include "qsd/stochmat.hpp"

using namespace qsd;

namespace {

StochMatrix from_rows(int rows, int cols, std::vector<std::vector<long>> num,
                      std::vector<std::vector<long>> den) {
  StochMatrix::Storage m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = make_rat(num[static_cast<size_t>(i)][static_cast<size_t>(j)],
                         den[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return StochMatrix(std::move(m));
}

Distribution dist(std::vector<Rat> w) { return Distribution(std::move(w)); }

}  // namespace

TEST_CASE("construction validates column sums and entry ranges") {
  StochMatrix::Storage bad(2, 1);
  bad(0, 0) = make_rat(1, 2);
  bad(1, 0) = make_rat(1, 3);
  CHECK_THROWS_AS(StochMatrix(std::move(bad)), InvalidMatrixError);
  CHECK_NOTHROW(StochMatrix::empty(0, 3));
  CHECK_NOTHROW(StochMatrix::empty(4, 0));
  CHECK_THROWS_AS(Distribution({make_rat(1, 2)}), DomainError);
}

TEST_CASE("matmul follows the composite conventions") {
  StochMatrix not2 = from_rows(2, 2, {{0, 1}, {1, 0}}, {{1, 1}, {1, 1}});
  CHECK(matmul(StochMatrix::identity(2), not2) == not2);
  CHECK(matmul(not2, not2) == StochMatrix::identity(2));
  StochMatrix ones = from_rows(1, 2, {{1, 1}}, {{1, 1}});
  StochMatrix coin = from_rows(2, 1, {{1}, {1}}, {{2}, {2}});
  CHECK(matmul(ones, coin) == StochMatrix::identity(1));
  CHECK_THROWS_AS(matmul(ones, ones), DimensionError);
}

TEST_CASE("kron matches the block formula") {
  StochMatrix p = from_rows(2, 1, {{1}, {3}}, {{4}, {4}});
  StochMatrix q = from_rows(2, 1, {{1}, {2}}, {{3}, {3}});
  StochMatrix pq = kron(p, q);
  CHECK(pq.rows() == 4);
  CHECK(pq.at(0, 0) == make_rat(1, 12));
  CHECK(pq.at(1, 0) == make_rat(2, 12));
  CHECK(pq.at(2, 0) == make_rat(3, 12));
  CHECK(pq.at(3, 0) == make_rat(6, 12));
  CHECK(kron(StochMatrix::identity(1), q) == q);
  CHECK(kron(StochMatrix::identity(2), StochMatrix::identity(2)) == StochMatrix::identity(4));
}

TEST_CASE("dsum lays out blocks diagonally") {
  StochMatrix coin = from_rows(2, 1, {{1}, {1}}, {{2}, {2}});
  StochMatrix s = dsum(coin, StochMatrix::identity(1));
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 2);
  CHECK(s.at(0, 0) == make_rat(1, 2));
  CHECK(s.at(1, 0) == make_rat(1, 2));
  CHECK(s.at(2, 1) == 1);
  CHECK(s.at(2, 0) == 0);
  CHECK(dsum(coin, StochMatrix::empty(0, 0)) == coin);
  CHECK(dsum(StochMatrix::identity(1), StochMatrix::identity(1)) == StochMatrix::identity(2));
}

TEST_CASE("swaps match their displayed permutations") {
  StochMatrix sd = swap_dsum(1, 1);
  CHECK(sd.at(0, 1) == 1);
  CHECK(sd.at(1, 0) == 1);
  CHECK(swap_dsum(3, 0) == StochMatrix::identity(3));

  StochMatrix sk = swap_kron(1, 1);
  CHECK(sk.at(0, 0) == 1);
  CHECK(sk.at(2, 1) == 1);  // basis index 1 = "10" maps to index 2 = "01"
  CHECK(sk.at(1, 2) == 1);
  CHECK(sk.at(3, 3) == 1);
}

TEST_CASE("multi-wire kron swap equals a composite of elementary swaps") {
  // sigma_{1,2} on three wires = (swap x id) ; (id x swap).
  StochMatrix s11 = swap_kron(1, 1);
  StochMatrix step1 = kron(s11, StochMatrix::identity(2));
  StochMatrix step2 = kron(StochMatrix::identity(2), s11);
  CHECK(matmul(step2, step1) == swap_kron(1, 2));
}

TEST_CASE("codiag stacks identity blocks") {
  CHECK(codiag(1, 3) == StochMatrix::identity(3));
  StochMatrix c21 = codiag(2, 1);
  CHECK(c21.rows() == 1);
  CHECK(c21.cols() == 2);
  CHECK(c21.at(0, 0) == 1);
  CHECK(c21.at(0, 1) == 1);
  StochMatrix c32 = codiag(3, 2);
  CHECK(c32.cols() == 6);
  for (int b = 0; b < 3; ++b) {
    CHECK(c32.at(0, 2 * b) == 1);
    CHECK(c32.at(1, 2 * b + 1) == 1);
  }
}

TEST_CASE("codiag after a direct sum of columns concatenates them") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int m = 1 + static_cast<int>(rng.below(4));
    StochMatrix a = random_stoch_matrix(rng, m, n, 0.2);
    StochMatrix stacked = StochMatrix::from_columns(m, {column(a, 0)});
    for (int j = 1; j < n; ++j)
      stacked = dsum(stacked, StochMatrix::from_columns(m, {column(a, j)}));
    CHECK(matmul(codiag(n, m), stacked) == a);
  }
}

TEST_CASE("column extraction and bounds") {
  CHECK(column(StochMatrix::identity(2), 0) == dist({Rat(1), Rat(0)}));
  StochMatrix a = from_rows(2, 2, {{1, 1}, {1, 0}}, {{2, 1}, {2, 1}});
  CHECK(column(a, 0) == dist({make_rat(1, 2), make_rat(1, 2)}));
  CHECK_THROWS_AS(column(a, 2), DimensionError);
}

TEST_CASE("restrict_first_bit splits the input basis in half") {
  StochMatrix i4 = StochMatrix::identity(4);
  StochMatrix top = restrict_first_bit(i4, true);
  CHECK(top.cols() == 2);
  CHECK(top.at(0, 0) == 1);
  CHECK(top.at(1, 1) == 1);
  StochMatrix bot = restrict_first_bit(i4, false);
  CHECK(bot.at(2, 0) == 1);
  CHECK(bot.at(3, 1) == 1);
  StochMatrix three = from_rows(1, 3, {{1, 1, 1}}, {{1, 1, 1}});
  CHECK_THROWS_AS(restrict_first_bit(three, true), DimensionError);

  // An and-gate with first input 0 is the constant 0.
  StochMatrix andm = from_rows(2, 4, {{1, 0, 0, 0}, {0, 1, 1, 1}},
                               {{1, 1, 1, 1}, {1, 1, 1, 1}});
  StochMatrix low = restrict_first_bit(andm, false);
  CHECK(low == from_rows(2, 2, {{0, 0}, {1, 1}}, {{1, 1}, {1, 1}}));
}

TEST_CASE("conditional bit split renormalizes and defaults to uniform") {
  Distribution mu = dist({make_rat(1, 2), Rat(0), Rat(0), make_rat(1, 2)});
  BitSplit s = cond_split_bit(mu);
  CHECK(s.p.value() == make_rat(1, 2));
  CHECK(s.on_one == dist({Rat(1), Rat(0)}));
  CHECK(s.on_zero == dist({Rat(0), Rat(1)}));

  BitSplit t = cond_split_bit(dist({Rat(1), Rat(0)}));
  CHECK(t.p.value() == 1);
  CHECK(t.on_one == dist({Rat(1)}));
  CHECK(t.on_zero == dist({Rat(1)}));

  BitSplit u = cond_split_bit(dist({Rat(0), Rat(0), make_rat(1, 3), make_rat(2, 3)}));
  CHECK(u.p.value() == 0);
  CHECK(u.on_one == Distribution::uniform(2));
  CHECK(u.on_zero == dist({make_rat(1, 3), make_rat(2, 3)}));
}

TEST_CASE("conditional first split renormalizes the tail") {
  FirstSplit s = cond_split_first(dist({make_rat(1, 4), make_rat(1, 4), make_rat(1, 2)}));
  CHECK(s.p.value() == make_rat(1, 4));
  CHECK(s.rest == dist({make_rat(1, 3), make_rat(2, 3)}));

  FirstSplit t = cond_split_first(dist({Rat(1), Rat(0), Rat(0)}));
  CHECK(t.p.value() == 1);
  CHECK(t.rest == Distribution::uniform(2));

  FirstSplit u = cond_split_first(dist({Rat(0), Rat(1)}));
  CHECK(u.p.value() == 0);
  CHECK(u.rest == dist({Rat(1)}));
}

TEST_CASE("split round trips reconstruct the distribution exactly") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int m = static_cast<int>(rng.below(4));
    Distribution mu = random_distribution(rng, 1 << (m + 1), 0.3);
    BitSplit s = cond_split_bit(mu);
    for (int i = 0; i < (1 << m); ++i) {
      CHECK(Rat(s.p.value() * s.on_one[i]) == mu[i]);
      CHECK(Rat((1 - s.p.value()) * s.on_zero[i]) == mu[(1 << m) + i]);
    }
    int len = 2 + static_cast<int>(rng.below(6));
    Distribution nu = random_distribution(rng, len, 0.3);
    FirstSplit f = cond_split_first(nu);
    CHECK(f.p.value() == nu[0]);
    for (int i = 0; i + 1 < len; ++i)
      CHECK(Rat((1 - f.p.value()) * f.rest[i]) == nu[i + 1]);
  }
}

TEST_CASE("products and monoidal products preserve stochasticity and interchange") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    int m = 1 + static_cast<int>(rng.below(3));
    int k = 1 + static_cast<int>(rng.below(3));
    StochMatrix f = random_stoch_matrix(rng, m, n, 0.2);
    StochMatrix fp = random_stoch_matrix(rng, m, n, 0.2);
    StochMatrix g = random_stoch_matrix(rng, k, m, 0.2);
    StochMatrix gp = random_stoch_matrix(rng, k, m, 0.2);
    // Construction of each result revalidates stochasticity.
    CHECK(kron(matmul(g, f), matmul(gp, fp)) == matmul(kron(g, gp), kron(f, fp)));
    CHECK(dsum(matmul(g, f), matmul(gp, fp)) == matmul(dsum(g, gp), dsum(f, fp)));
  }
}

TEST_CASE("matrix text format round trips") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(5));
    int cols = static_cast<int>(rng.below(5));
    StochMatrix a = cols == 0 ? StochMatrix::empty(0, 0)
                              : random_stoch_matrix(rng, rows, cols, 0.25);
    CHECK(matrix_from_text(matrix_to_text(a)) == a);
  }
  CHECK_THROWS_AS(matrix_from_text("2 2\n1 0\n0"), DomainError);
}
