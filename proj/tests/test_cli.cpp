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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qsd/cli.hpp"
#include "qsd/semantics.hpp"

using namespace qsd;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/qsd_test_") + name;
}

}  // namespace

TEST_CASE("eval prints the matrix text format") {
  RunResult r = run({"eval", "--theory", "circuit", "--term", "flip(1/2) ; not"});
  CHECK(r.status == 0);
  CHECK(r.out == "2 1\n1/2\n1/2\n");
  StochMatrix m = matrix_from_text(r.out);
  CHECK(m == eval(parse_term("flip(1/2) ; not", TheoryKind::Circuit), TheoryKind::Circuit));
}

TEST_CASE("div reports the expected boundary values") {
  RunResult inf = run({"div", "--theory", "circuit", "--alpha", "1", "--lhs", "flip(1/2)",
                       "--rhs", "flip(1)"});
  CHECK(inf.status == 0);
  CHECK(inf.out == "inf\n");

  RunResult zero = run({"div", "--theory", "convex", "--alpha", "1", "--lhs", "cc(1/3)", "--rhs",
                        "cc(1/3)"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "0\n");
}

TEST_CASE("derive then check round trips through a file") {
  std::string path = temp_path("derive.json");
  RunResult d = run({"derive", "--theory", "circuit", "--alpha", "1", "--lhs", "flip(1/2)",
                     "--rhs", "flip(1/4)", "-o", path});
  CHECK(d.status == 0);
  CHECK(d.out.substr(0, 8) == "0.143841");

  RunResult c = run({"check", path, "--theory", "circuit", "--alpha", "1"});
  CHECK(c.status == 0);
  CHECK(c.out.find("flip(1/2)") != std::string::npos);
  CHECK(c.out.find("=_0.143841") != std::string::npos);

  // The same file under a different order must be rejected.
  RunResult wrong = run({"check", path, "--theory", "circuit", "--alpha", "2"});
  CHECK(wrong.status == 1);
  CHECK(wrong.err.find("rejected") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("derive without an output file still prints the bound") {
  RunResult r = run({"derive", "--theory", "convex", "--alpha", "inf", "--lhs", "cc(1/2)",
                     "--rhs", "cc(1/2)"});
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("derive accepts terms from files") {
  std::string term_path = temp_path("term.txt");
  {
    std::ofstream f(term_path);
    f << "cc(1/2)\n";
  }
  RunResult r = run({"div", "--theory", "convex", "--alpha", "inf", "--lhs",
                     "@" + term_path, "--rhs", "cc(1/4)"});
  CHECK(r.status == 0);
  CHECK(r.out.substr(0, 7) == "0.69314");
  std::remove(term_path.c_str());
}

TEST_CASE("malformed input exits with status 2") {
  CHECK(run({"eval", "--theory", "circuit", "--term", "flip(3/2)"}).status == 2);
  CHECK(run({"eval", "--theory", "convex", "--term", "copy"}).status == 2);
  CHECK(run({"div", "--theory", "circuit", "--alpha", "1", "--lhs", "not", "--rhs",
             "copy"}).status == 2);
  CHECK(run({"nonsense"}).status == 2);
}

TEST_CASE("fuzz runs reproducibly and reports success") {
  RunResult a = run({"fuzz", "--trials", "24", "--seed", "5"});
  CHECK(a.status == 0);
  RunResult b = run({"fuzz", "--trials", "24", "--seed", "5"});
  CHECK(b.out == a.out);
  CHECK(a.out.find("24 trials passed") != std::string::npos);
}
