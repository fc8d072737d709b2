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

#include "qsd/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qsd/fuzz.hpp"
#include "qsd/semantics.hpp"
#include "qsd/synth.hpp"

namespace qsd::cli {

namespace {

TheoryKind parse_theory(const std::string& name) {
  if (name == "circuit") return TheoryKind::Circuit;
  if (name == "convex") return TheoryKind::Convex;
  throw DomainError("unknown theory '" + name + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A term argument is either literal text or @path.
std::string term_source(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

std::string render(const Judgement& j) {
  if (j.bound.strict) return print_term(j.lhs) + " = " + print_term(j.rhs);
  return print_term(j.lhs) + " =_" + to_string(j.bound.eps) + " " + print_term(j.rhs);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"string-diagram calculi for stochastic matrices with relative-entropy bounds"};
  app.require_subcommand(1);

  std::string theory;
  std::string alpha = "1";
  std::string lhs, rhs, term_text, out_path, deriv_path;
  FuzzOptions fuzz_opts;

  auto add_theory = [&](CLI::App* cmd) {
    cmd->add_option("--theory", theory, "circuit or convex")
        ->required()
        ->check(CLI::IsMember({"circuit", "convex"}));
  };
  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "divergence order: 0, 1, inf, a rational, or a decimal");
  };

  CLI::App* c_eval = app.add_subcommand("eval", "print the matrix of a term");
  add_theory(c_eval);
  c_eval->add_option("--term", term_text, "term text or @file")->required();

  CLI::App* c_div = app.add_subcommand("div", "column-max divergence between two terms");
  add_theory(c_div);
  add_alpha(c_div);
  c_div->add_option("--lhs", lhs, "term text or @file")->required();
  c_div->add_option("--rhs", rhs, "term text or @file")->required();

  CLI::App* c_derive =
      app.add_subcommand("derive", "synthesize a tight derivation between two terms");
  add_theory(c_derive);
  add_alpha(c_derive);
  c_derive->add_option("--lhs", lhs, "term text or @file")->required();
  c_derive->add_option("--rhs", rhs, "term text or @file")->required();
  c_derive->add_option("-o,--output", out_path, "derivation file to write");

  CLI::App* c_check = app.add_subcommand("check", "verify a derivation file");
  c_check->add_option("file", deriv_path, "derivation JSON file")->required();
  add_theory(c_check);
  add_alpha(c_check);

  CLI::App* c_fuzz = app.add_subcommand("fuzz", "run seeded property trials");
  c_fuzz->add_option("--trials", fuzz_opts.trials, "number of trials")->check(CLI::PositiveNumber);
  c_fuzz->add_option("--seed", fuzz_opts.seed, "base seed");
  c_fuzz->add_option("--max-wires", fuzz_opts.max_wires, "circuit wire cap")
      ->check(CLI::PositiveNumber);
  c_fuzz->add_option("--max-dim", fuzz_opts.max_dim, "convex dimension cap")
      ->check(CLI::PositiveNumber);
  c_fuzz->add_option("--zero-rate", fuzz_opts.zero_rate, "zero-inflation rate")
      ->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (c_eval->parsed()) {
      TheoryKind kind = parse_theory(theory);
      out << matrix_to_text(eval(parse_term(term_source(term_text), kind), kind));
      return 0;
    }
    if (c_div->parsed()) {
      TheoryKind kind = parse_theory(theory);
      Order a = Order::parse(alpha);
      StochMatrix A = eval(parse_term(term_source(lhs), kind), kind);
      StochMatrix B = eval(parse_term(term_source(rhs), kind), kind);
      out << to_string(div_max(a, A, B)) << "\n";
      return 0;
    }
    if (c_derive->parsed()) {
      TheoryConfig cfg{parse_theory(theory), Order::parse(alpha)};
      TermPtr f = parse_term(term_source(lhs), cfg.kind);
      TermPtr g = parse_term(term_source(rhs), cfg.kind);
      DerivPtr d = derive(cfg, f, g);
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw DomainError("cannot write file '" + out_path + "'");
        file << derivation_to_json(d) << "\n";
      }
      out << to_string(bound_of(d->conclusion)) << "\n";
      return 0;
    }
    if (c_check->parsed()) {
      TheoryConfig cfg{parse_theory(theory), Order::parse(alpha)};
      DerivPtr d = derivation_from_json(slurp(deriv_path), cfg.kind);
      try {
        Judgement j = check(d, cfg);
        out << render(j) << "\n";
        return 0;
      } catch (const CheckError& e) {
        err << "rejected: " << e.what() << "\n";
        return 1;
      }
    }
    if (c_fuzz->parsed()) {
      FuzzReport rep = run_fuzz(fuzz_opts);
      if (!rep.ok) {
        out << "trial " << rep.failed_trial << " (" << rep.suite << "): " << rep.message << "\n";
        return 1;
      }
      out << "fuzz: " << fuzz_opts.trials << " trials passed (seed " << fuzz_opts.seed
          << ", zero-branch trials " << rep.zero_branch_trials << ")\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const TypeCheckError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DerivationFormatError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const InvalidMatrixError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace qsd::cli
