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

#include <utility>

#include "qsd/extreal.hpp"
#include "qsd/stochmat.hpp"

namespace qsd {

/// A divergence order: 0, 1 (relative entropy), infinity, or a general
/// positive rational different from 1.
class Order {
 public:
  static Order zero();
  static Order one();
  static Order infinity();
  /// Normalizing constructor: 0 and 1 dispatch to the symbolic cases.
  static Order general(Rat alpha);
  /// Accepts "0", "1", "inf", a positive rational "a/b", or a decimal.
  static Order parse(const std::string& text);

  bool is_zero() const { return tag_ == Tag::Zero; }
  bool is_one() const { return tag_ == Tag::One; }
  bool is_infinity() const { return tag_ == Tag::Infinity; }
  bool is_general() const { return tag_ == Tag::General; }
  /// The numeric order; only for finite orders.
  const Rat& alpha() const;

  std::string to_string() const;
  bool operator==(const Order& o) const { return tag_ == o.tag_ && alpha_ == o.alpha_; }

 private:
  enum class Tag { Zero, One, Infinity, General };
  Order(Tag t, Rat a) : tag_(t), alpha_(std::move(a)) {}
  Tag tag_;
  Rat alpha_;
};

/// Relative entropy sum mu(x) log(mu(x)/nu(x)), with log(x/0) = inf and
/// 0 * inf = 0; infinite exactly when mu puts mass outside supp(nu).
ExtReal kl(const Distribution& mu, const Distribution& nu);

/// Divergence of the given order between equal-length distributions.
ExtReal renyi(const Order& a, const Distribution& mu, const Distribution& nu);

/// Column-wise maximum divergence between equal-shape matrices; empty
/// matrices are at distance 0.
ExtReal div_max(const Order& a, const StochMatrix& A, const StochMatrix& B);

/// The chain-rule combinator: how the divergence of a joint decomposes into
/// the binary divergence of the split weights and the divergences of the
/// conditionals. Monotone in eps and delta.
ExtReal c_alpha(const Order& a, const Prob& p, const Prob& q, ExtReal eps, ExtReal delta);

/// Both sides of the product-style chain rule (split on the first bit),
/// computed independently: lhs directly, rhs through c_alpha.
std::pair<ExtReal, ExtReal> chain_oracle_prod(const Order& a, const Distribution& mu,
                                              const Distribution& nu);

/// Both sides of the sum-style chain rule (split at the first outcome).
std::pair<ExtReal, ExtReal> chain_oracle_sum(const Order& a, const Distribution& mu,
                                             const Distribution& nu);

}  // namespace qsd
