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

#include "qsd/extreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace qsd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kClampFloor = -1e-9;
}  // namespace

SignedExt::SignedExt(double v) : v_(v) {
  if (std::isnan(v)) throw DomainError("SignedExt cannot hold NaN");
}

SignedExt SignedExt::pos_infinity() { return SignedExt(kInf); }
SignedExt SignedExt::neg_infinity() { return SignedExt(-kInf); }
bool SignedExt::is_pos_infinite() const { return v_ == kInf; }
bool SignedExt::is_neg_infinite() const { return v_ == -kInf; }
bool SignedExt::is_finite() const { return std::isfinite(v_); }

ExtReal ExtReal::infinity() {
  ExtReal r;
  r.v_ = kInf;
  return r;
}

ExtReal ExtReal::from_value(double v) {
  if (std::isnan(v)) throw DomainError("ExtReal cannot hold NaN");
  if (v < 0) throw DomainError("ExtReal cannot hold a negative value");
  ExtReal r;
  r.v_ = v;
  return r;
}

ExtReal ExtReal::from_signed(SignedExt s) {
  double v = s.value();
  if (s.is_neg_infinite() || v < kClampFloor)
    throw InternalError("divergence came out negative: " + std::to_string(v));
  return from_value(v < 0 ? 0.0 : v);
}

bool ExtReal::is_infinite() const { return v_ == kInf; }

ExtReal add(ExtReal x, ExtReal y) {
  if (x.is_infinite() || y.is_infinite()) return ExtReal::infinity();
  return ExtReal::from_value(x.value() + y.value());
}

bool qleq(ExtReal x, ExtReal y) { return x.value() >= y.value(); }

ExtReal qjoin(const std::vector<ExtReal>& xs) {
  ExtReal acc = ExtReal::infinity();
  for (const ExtReal& x : xs) acc = ext_min(acc, x);
  return acc;
}

ExtReal scale_conv(const Rat& p, ExtReal x) {
  if (p < 0 || p > 1) throw DomainError("scale_conv weight outside [0,1]");
  if (p == 0) return ExtReal::zero();
  if (x.is_infinite()) return ExtReal::infinity();
  return ExtReal::from_value(rat_to_double(p) * x.value());
}

SignedExt log_ratio(const Rat& a, const Rat& b) {
  if (a < 0 || b < 0) throw DomainError("log_ratio arguments must be nonnegative");
  if (b == 0) return a == 0 ? SignedExt(0.0) : SignedExt::pos_infinity();
  if (a == 0) return SignedExt::neg_infinity();
  return SignedExt(std::log(rat_to_double(Rat(a / b))));
}

ExtReal ext_max(ExtReal x, ExtReal y) { return qleq(x, y) ? x : y; }
ExtReal ext_min(ExtReal x, ExtReal y) { return qleq(x, y) ? y : x; }

SignedExt signed_add(SignedExt x, ExtReal y) {
  if (x.is_neg_infinite()) return x;
  if (x.is_pos_infinite() || y.is_infinite()) return SignedExt::pos_infinity();
  return SignedExt(x.value() + y.value());
}

SignedExt signed_max(SignedExt x, SignedExt y) { return x.value() >= y.value() ? x : y; }

std::string to_string(ExtReal x) {
  if (x.is_infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x.value());
  return buf;
}

bool approx_equal(ExtReal x, ExtReal y, double rel, double abs) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() == y.is_infinite();
  double diff = std::fabs(x.value() - y.value());
  double scale = std::max(std::fabs(x.value()), std::fabs(y.value()));
  return diff <= std::max(abs, rel * scale);
}

bool approx_equal(ExtReal x, ExtReal y) { return approx_equal(x, y, 1e-9, 1e-12); }

bool approx_leq(ExtReal x, ExtReal y) {
  if (y.is_infinite()) return true;
  if (x.is_infinite()) return false;
  double scale = std::max(std::fabs(x.value()), std::fabs(y.value()));
  return x.value() <= y.value() + std::max(1e-12, 1e-9 * scale);
}

}  // namespace qsd
