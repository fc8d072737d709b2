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

#include <cmath>

#include "doctest.h"
#include "qsd/extreal.hpp"
#include "qsd/rng.hpp"

using namespace qsd;

namespace {

ExtReal ext(double v) { return ExtReal::from_value(v); }

ExtReal random_ext(SplitMix64& rng) {
  if (rng.below(5) == 0) return ExtReal::infinity();
  if (rng.below(5) == 0) return ExtReal::zero();
  return ExtReal::from_value(rng.unit() * 8.0);
}

}  // namespace

TEST_CASE("addition is absorbing at infinity and unital at zero") {
  CHECK(add(ExtReal::zero(), ExtReal::zero()) == ExtReal::zero());
  CHECK(add(ext(3.5), ExtReal::infinity()).is_infinite());
  CHECK(add(ExtReal::infinity(), ext(3.5)).is_infinite());
  CHECK(add(ext(1.25), ext(2.75)) == ext(4.0));
}

TEST_CASE("quantale order reverses the numeric order") {
  CHECK(qleq(ExtReal::infinity(), ext(5)));
  CHECK_FALSE(qleq(ExtReal::zero(), ext(5)));
  CHECK(qleq(ext(2), ext(2)));
}

TEST_CASE("join is the infimum with empty join at the bottom") {
  CHECK(qjoin({}).is_infinite());
  CHECK(qjoin({ext(3), ext(1), ext(2)}) == ext(1));
  CHECK(qjoin({ExtReal::infinity(), ext(4)}) == ext(4));
}

TEST_CASE("scaling annihilates infinity at weight zero") {
  CHECK(scale_conv(Rat(0), ExtReal::infinity()) == ExtReal::zero());
  CHECK(scale_conv(make_rat(1, 2), ext(4)) == ext(2));
  CHECK(scale_conv(Rat(1), ExtReal::infinity()).is_infinite());
}

TEST_CASE("log_ratio follows the divergence conventions") {
  CHECK(log_ratio(Rat(1), make_rat(1, 2)).value() == doctest::Approx(std::log(2.0)));
  CHECK(log_ratio(make_rat(1, 2), Rat(0)).is_pos_infinite());
  CHECK(log_ratio(Rat(0), make_rat(1, 3)).is_neg_infinite());
  CHECK(log_ratio(Rat(0), Rat(0)).value() == 0.0);
  CHECK(log_ratio(make_rat(1, 3), make_rat(1, 3)).value() == 0.0);
}

TEST_CASE("signed conversion clamps noise and rejects real negatives") {
  CHECK(ExtReal::from_signed(SignedExt(-1e-10)) == ExtReal::zero());
  CHECK_THROWS_AS(ExtReal::from_signed(SignedExt(-1e-3)), InternalError);
  CHECK_THROWS_AS(ExtReal::from_value(-1.0), DomainError);
}

TEST_CASE("associativity, unit, and monotonicity on sampled values") {
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    ExtReal x = random_ext(rng), y = random_ext(rng), z = random_ext(rng);
    CHECK(approx_equal(add(x, add(y, z)), add(add(x, y), z)));
    CHECK(add(x, ExtReal::zero()) == x);
    if (qleq(x, y)) {
      CHECK(qleq(add(x, z), add(y, z)));
      CHECK(qleq(add(z, x), add(z, y)));
    }
  }
}

TEST_CASE("addition distributes over nonempty joins") {
  SplitMix64 rng(13);
  for (int i = 0; i < 200; ++i) {
    ExtReal x = random_ext(rng);
    std::vector<ExtReal> s;
    int len = 1 + static_cast<int>(rng.below(4));
    for (int j = 0; j < len; ++j) s.push_back(random_ext(rng));
    std::vector<ExtReal> shifted;
    for (ExtReal v : s) shifted.push_back(add(x, v));
    CHECK(add(x, qjoin(s)) == qjoin(shifted));
  }
}

TEST_CASE("convex scaling stays below the maximum") {
  SplitMix64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Rat p = make_rat(static_cast<long>(rng.below(65537)), 65536);
    ExtReal x = random_ext(rng), y = random_ext(rng);
    ExtReal mix = add(scale_conv(p, x), scale_conv(Rat(1 - p), y));
    CHECK(approx_leq(mix, ext_max(x, y)));
  }
}

TEST_CASE("rendering uses at least 12 significant digits or inf") {
  CHECK(to_string(ExtReal::infinity()) == "inf");
  CHECK(to_string(ext(std::log(2.0))) == "0.693147180559945");
  CHECK(to_string(ExtReal::zero()) == "0");
}
