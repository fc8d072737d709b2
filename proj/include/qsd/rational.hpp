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

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "qsd/errors.hpp"

namespace qsd {

/// Exact rational scalar used throughout the semantic core.
using Rat = mpq_class;

/// Canonicalized rational num/den. GMP does not canonicalize two-argument
/// construction on its own.
inline Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a", "a/b", or a plain decimal like "0.25" into an exact rational.
inline Rat rat_from_string(const std::string& text) {
  auto fail = [&] { throw DomainError("malformed rational: '" + text + "'"); };
  if (text.empty()) fail();
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string body = text;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  Rat r;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    Rat d{mpz_class(den)};
    if (d == 0) throw DomainError("rational with zero denominator: '" + text + "'");
    r = Rat(mpz_class(num)) / d;
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) fail();
    mpz_class scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    r = Rat(mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp))) / Rat(scale);
  } else {
    if (!all_digits(body)) fail();
    r = Rat(mpz_class(body));
  }
  return negative ? Rat(-r) : r;
}

/// Renders canonically as "a" or "a/b".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace qsd

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
