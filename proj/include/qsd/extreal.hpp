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

/// Intermediate log-ratio value: finite of either sign, or +/-infinity.
/// Never stored in a judgement; it exists so that expressions like
/// log(p/q) + eps can be formed before the final nonnegativity check.
class SignedExt {
 public:
  SignedExt() : v_(0.0) {}
  explicit SignedExt(double v);
  static SignedExt pos_infinity();
  static SignedExt neg_infinity();

  double value() const { return v_; }
  bool is_pos_infinite() const;
  bool is_neg_infinite() const;
  bool is_finite() const;

 private:
  double v_;
};

/// Element of [0, infinity]: a finite nonnegative double or the single
/// canonical +infinity. These carry the quantale structure with reversed
/// order (infinity is the bottom, 0 the top and unit).
class ExtReal {
 public:
  ExtReal() : v_(0.0) {}

  static ExtReal zero() { return ExtReal(); }
  static ExtReal infinity();
  /// Finite nonnegative value (or +inf); rejects NaN and negatives.
  static ExtReal from_value(double v);
  /// Conversion applying the divergence noise rule: values in (-1e-9, 0)
  /// clamp to 0, anything below -1e-9 is an internal error.
  static ExtReal from_signed(SignedExt s);

  bool is_infinite() const;
  double value() const { return v_; }

  bool operator==(const ExtReal& o) const { return v_ == o.v_; }
  bool operator!=(const ExtReal& o) const { return v_ != o.v_; }

 private:
  double v_;
};

/// Quantale addition: ordinary sum with infinity absorbing.
ExtReal add(ExtReal x, ExtReal y);

/// Quantale order: x below y iff x >= y as extended reals.
bool qleq(ExtReal x, ExtReal y);

/// Finite join, i.e. the real infimum; the empty join is infinity.
ExtReal qjoin(const std::vector<ExtReal>& xs);

/// p * x with the 0 * infinity = 0 convention; p must lie in [0,1].
ExtReal scale_conv(const Rat& p, ExtReal x);

/// Natural log of a/b for nonnegative rationals: a>0,b=0 gives +inf;
/// a=0,b>0 gives -inf; 0/0 is defined as 0 (callers weight it by zero).
SignedExt log_ratio(const Rat& a, const Rat& b);

ExtReal ext_max(ExtReal x, ExtReal y);
ExtReal ext_min(ExtReal x, ExtReal y);

/// SignedExt + ExtReal. +inf on either side dominates; adding a finite
/// ExtReal to -inf stays -inf. The -inf + +inf case is a caller bug.
SignedExt signed_add(SignedExt x, ExtReal y);

SignedExt signed_max(SignedExt x, SignedExt y);

/// Decimal with at least 12 significant digits, or the token "inf".
std::string to_string(ExtReal x);

/// Relative comparison at 1e-9 with absolute floor 1e-12; infinities must
/// match exactly.
bool approx_equal(ExtReal x, ExtReal y);
bool approx_equal(ExtReal x, ExtReal y, double rel, double abs);

/// x <= y up to the same tolerance.
bool approx_leq(ExtReal x, ExtReal y);

}  // namespace qsd
