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

#include <string>
#include <vector>

#include "qsd/rational.hpp"

namespace qsd {

/// An exact rational probability in [0,1].
class Prob {
 public:
  Prob() : v_(0) {}
  explicit Prob(Rat v);
  static Prob one() { return Prob(Rat(1)); }

  const Rat& value() const { return v_; }
  Rat complement() const { return Rat(1 - v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  bool operator==(const Prob& o) const { return v_ == o.v_; }

 private:
  Rat v_;
};

/// A finitely supported probability distribution: exact rational weights
/// over outcomes 0..m-1, summing to exactly 1.
class Distribution {
 public:
  explicit Distribution(std::vector<Rat> weights);
  static Distribution dirac(int size, int at);
  static Distribution uniform(int size);

  int size() const { return static_cast<int>(w_.size()); }
  const Rat& operator[](int i) const { return w_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& weights() const { return w_; }

  bool operator==(const Distribution& o) const { return w_ == o.w_; }
  bool operator!=(const Distribution& o) const { return w_ != o.w_; }

 private:
  std::vector<Rat> w_;
};

/// Hard cap on dense storage, guarding against runaway Kronecker growth.
inline constexpr long long kMaxMatrixEntries = 1LL << 22;

/// A column-stochastic matrix with exact rational entries. Entry (i, j) is
/// the probability of output i given input j. Zero rows or columns give the
/// unique empty matrix of that shape.
class StochMatrix {
 public:
  using Storage = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

  explicit StochMatrix(Storage entries);
  static StochMatrix identity(int n);
  static StochMatrix empty(int rows, int cols);
  static StochMatrix from_columns(int rows, const std::vector<Distribution>& cols);

  int rows() const { return static_cast<int>(m_.rows()); }
  int cols() const { return static_cast<int>(m_.cols()); }
  const Rat& at(int i, int j) const { return m_(i, j); }
  const Storage& data() const { return m_; }

  bool operator==(const StochMatrix& o) const;
  bool operator!=(const StochMatrix& o) const { return !(*this == o); }

 private:
  Storage m_;
};

/// Composite g after f, by exact matrix product; requires cols(g) == rows(f).
StochMatrix matmul(const StochMatrix& g, const StochMatrix& f);

/// Kronecker product (block formula a_ij * B).
StochMatrix kron(const StochMatrix& a, const StochMatrix& b);

/// Direct sum (block diagonal).
StochMatrix dsum(const StochMatrix& a, const StochMatrix& b);

/// Wire-bundle crossing for the Kronecker structure on bits: the
/// 2^(n+m)-dimensional permutation sending a bundle pair (u, v) to (v, u).
StochMatrix swap_kron(int n_wires, int m_wires);

/// Same crossing for arbitrary factor dimensions a and b.
StochMatrix swap_kron_dims(int a, int b);

/// Block crossing [[0, I_m], [I_n, 0]] for the direct-sum structure.
StochMatrix swap_dsum(int n, int m);

/// The m x (n*m) matrix [I_m | I_m | ... | I_m] (n blocks), n >= 1.
StochMatrix codiag(int n, int m);

/// The j-th column as a distribution; requires rows >= 1.
Distribution column(const StochMatrix& a, int j);

/// Restriction of a matrix with 2^(n+1) columns to those columns whose
/// first input bit is b (first half for bit 1, second half for bit 0).
StochMatrix restrict_first_bit(const StochMatrix& f, bool bit_one);

struct BitSplit {
  Prob p;                // total mass on the first-bit-one half
  Distribution on_one;   // renormalized first half (uniform if massless)
  Distribution on_zero;  // renormalized second half (uniform if massless)
};

/// Conditional split of a distribution over 2^(m+1) outcomes on its first
/// bit. A zero-mass half yields the uniform distribution.
BitSplit cond_split_bit(const Distribution& mu);

struct FirstSplit {
  Prob p;             // first entry
  Distribution rest;  // remaining entries / (1-p), uniform if p = 1
};

/// Convex split of a distribution over m >= 2 outcomes at its first entry.
FirstSplit cond_split_first(const Distribution& mu);

/// Text format: first line "m n", then m lines of n rationals.
std::string matrix_to_text(const StochMatrix& a);
StochMatrix matrix_from_text(const std::string& text);

}  // namespace qsd
