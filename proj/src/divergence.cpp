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

#include "qsd/divergence.hpp"

#include <cmath>
#include <limits>

namespace qsd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Order Order::zero() { return Order(Tag::Zero, Rat(0)); }
Order Order::one() { return Order(Tag::One, Rat(1)); }
Order Order::infinity() { return Order(Tag::Infinity, Rat(0)); }

Order Order::general(Rat alpha) {
  if (alpha < 0) throw DomainError("divergence order must be nonnegative");
  if (alpha == 0) return zero();
  if (alpha == 1) return one();
  return Order(Tag::General, std::move(alpha));
}

Order Order::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  return general(rat_from_string(text));
}

const Rat& Order::alpha() const {
  if (tag_ == Tag::Infinity) throw DomainError("infinite order has no numeric alpha");
  return alpha_;
}

std::string Order::to_string() const {
  switch (tag_) {
    case Tag::Zero: return "0";
    case Tag::One: return "1";
    case Tag::Infinity: return "inf";
    case Tag::General: return rat_to_string(alpha_);
  }
  return "?";
}

ExtReal kl(const Distribution& mu, const Distribution& nu) {
  if (mu.size() != nu.size()) throw DimensionError("kl between different lengths");
  double acc = 0.0;
  for (int i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;
    if (nu[i] == 0) return ExtReal::infinity();
    acc += rat_to_double(mu[i]) * std::log(rat_to_double(Rat(mu[i] / nu[i])));
  }
  return ExtReal::from_signed(SignedExt(acc));
}

namespace {

ExtReal renyi_zero(const Distribution& mu, const Distribution& nu) {
  Rat mass = 0;
  for (int i = 0; i < mu.size(); ++i)
    if (mu[i] > 0) mass += nu[i];
  if (mass == 0) return ExtReal::infinity();
  return ExtReal::from_signed(SignedExt(-std::log(rat_to_double(mass))));
}

ExtReal renyi_sup(const Distribution& mu, const Distribution& nu) {
  // Exact rational maximum of the ratios, one log at the end.
  bool any = false;
  Rat best = 0;
  for (int i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;  // 0/x ratios never attain the supremum
    if (nu[i] == 0) return ExtReal::infinity();
    Rat ratio = mu[i] / nu[i];
    if (!any || ratio > best) {
      best = ratio;
      any = true;
    }
  }
  return ExtReal::from_signed(SignedExt(std::log(rat_to_double(best))));
}

ExtReal renyi_general(const Rat& alpha, const Distribution& mu, const Distribution& nu) {
  double a = rat_to_double(alpha);
  double acc = 0.0;
  if (alpha > 1) {
    for (int i = 0; i < mu.size(); ++i) {
      if (mu[i] == 0) continue;
      if (nu[i] == 0) return ExtReal::infinity();
      acc += std::pow(rat_to_double(mu[i]), a) / std::pow(rat_to_double(nu[i]), a - 1.0);
    }
  } else {
    // 0 < alpha < 1: the summand is mu^alpha * nu^(1-alpha), zero whenever
    // either side vanishes.
    for (int i = 0; i < mu.size(); ++i) {
      if (mu[i] == 0 || nu[i] == 0) continue;
      acc += std::pow(rat_to_double(mu[i]), a) * std::pow(rat_to_double(nu[i]), 1.0 - a);
    }
    if (acc == 0.0) return ExtReal::infinity();
  }
  return ExtReal::from_signed(SignedExt(std::log(acc) / (a - 1.0)));
}

}  // namespace

ExtReal renyi(const Order& a, const Distribution& mu, const Distribution& nu) {
  if (mu.size() != nu.size()) throw DimensionError("renyi between different lengths");
  if (mu == nu) return ExtReal::zero();
  if (a.is_one()) return kl(mu, nu);
  if (a.is_zero()) return renyi_zero(mu, nu);
  if (a.is_infinity()) return renyi_sup(mu, nu);
  return renyi_general(a.alpha(), mu, nu);
}

ExtReal div_max(const Order& a, const StochMatrix& A, const StochMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionError("div_max between different shapes");
  if (A.rows() == 0 || A.cols() == 0) return ExtReal::zero();
  ExtReal best = ExtReal::zero();
  for (int j = 0; j < A.cols(); ++j) best = ext_max(best, renyi(a, column(A, j), column(B, j)));
  return best;
}

namespace {

// Coefficient w^alpha / w'^(alpha-1) under the order-specific conventions,
// as a double with +inf marking the divergent case. Zero annihilates the
// paired exponential regardless of its value.
double chain_coef(const Rat& alpha, const Rat& w, const Rat& wp) {
  double a = rat_to_double(alpha);
  if (alpha > 1) {
    if (w == 0) return 0.0;
    if (wp == 0) return kInf;
    return std::pow(rat_to_double(w), a) / std::pow(rat_to_double(wp), a - 1.0);
  }
  if (alpha == 0) return w > 0 ? rat_to_double(wp) : 0.0;
  if (w == 0 || wp == 0) return 0.0;
  return std::pow(rat_to_double(w), a) * std::pow(rat_to_double(wp), 1.0 - a);
}

double chain_exp(const Rat& alpha, ExtReal e) {
  double factor = rat_to_double(alpha) - 1.0;
  if (e.is_infinite()) return factor > 0 ? kInf : 0.0;
  return std::exp(factor * e.value());
}

ExtReal c_alpha_general(const Rat& alpha, const Prob& p, const Prob& q, ExtReal eps,
                        ExtReal delta) {
  double s = 0.0;
  const Rat& pv = p.value();
  const Rat& qv = q.value();
  Rat pc = 1 - pv, qc = 1 - qv;
  double c1 = chain_coef(alpha, pv, qv);
  double c0 = chain_coef(alpha, pc, qc);
  double t1 = c1 == 0.0 ? 0.0 : c1 * chain_exp(alpha, eps);
  double t0 = c0 == 0.0 ? 0.0 : c0 * chain_exp(alpha, delta);
  s = t1 + t0;
  if (s == kInf) return ExtReal::infinity();
  double factor = rat_to_double(alpha) - 1.0;
  if (s == 0.0) return ExtReal::infinity();  // only reachable for alpha < 1
  return ExtReal::from_signed(SignedExt(std::log(s) / factor));
}

ExtReal c_alpha_sup(const Prob& p, const Prob& q, ExtReal eps, ExtReal delta) {
  auto branch = [](const Rat& w, const Rat& wp, ExtReal e) {
    if (w == 0) return SignedExt::neg_infinity();  // massless branch never wins
    return signed_add(log_ratio(w, wp), e);
  };
  SignedExt b1 = branch(p.value(), q.value(), eps);
  SignedExt b0 = branch(p.complement(), q.complement(), delta);
  return ExtReal::from_signed(signed_max(b1, b0));
}

}  // namespace

ExtReal c_alpha(const Order& a, const Prob& p, const Prob& q, ExtReal eps, ExtReal delta) {
  if (a.is_one()) {
    Distribution dp({p.value(), p.complement()});
    Distribution dq({q.value(), q.complement()});
    return add(kl(dp, dq), add(scale_conv(p.value(), eps), scale_conv(p.complement(), delta)));
  }
  if (a.is_infinity()) return c_alpha_sup(p, q, eps, delta);
  return c_alpha_general(a.alpha(), p, q, eps, delta);
}

std::pair<ExtReal, ExtReal> chain_oracle_prod(const Order& a, const Distribution& mu,
                                              const Distribution& nu) {
  if (mu.size() != nu.size()) throw DimensionError("chain_oracle_prod lengths differ");
  ExtReal lhs = renyi(a, mu, nu);
  BitSplit ms = cond_split_bit(mu);
  BitSplit ns = cond_split_bit(nu);
  ExtReal eps = renyi(a, ms.on_one, ns.on_one);
  ExtReal delta = renyi(a, ms.on_zero, ns.on_zero);
  return {lhs, c_alpha(a, ms.p, ns.p, eps, delta)};
}

std::pair<ExtReal, ExtReal> chain_oracle_sum(const Order& a, const Distribution& mu,
                                             const Distribution& nu) {
  if (mu.size() != nu.size()) throw DimensionError("chain_oracle_sum lengths differ");
  ExtReal lhs = renyi(a, mu, nu);
  FirstSplit ms = cond_split_first(mu);
  FirstSplit ns = cond_split_first(nu);
  Distribution point({Rat(1)});
  ExtReal eps = renyi(a, point, point);
  ExtReal delta = renyi(a, ms.rest, ns.rest);
  return {lhs, c_alpha(a, ms.p, ns.p, eps, delta)};
}

}  // namespace qsd
