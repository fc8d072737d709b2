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

#include "qsd/proofs.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"
#include "qsd/semantics.hpp"

namespace qsd {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Refl0: return "Refl0";
    case Rule::SemEq: return "SemEq";
    case Rule::Mono: return "Mono";
    case Rule::MinJoin: return "MinJoin";
    case Rule::SeqComp: return "SeqComp";
    case Rule::ParComp: return "ParComp";
    case Rule::EqSubstL: return "EqSubstL";
    case Rule::EqSubstR: return "EqSubstR";
    case Rule::ChainProd: return "ChainProd";
    case Rule::IfMax: return "IfMax";
    case Rule::ChainSum: return "ChainSum";
    case Rule::ParMax: return "ParMax";
  }
  return "?";
}

Rule rule_from_name(const std::string& name) {
  for (Rule r : {Rule::Refl0, Rule::SemEq, Rule::Mono, Rule::MinJoin, Rule::SeqComp,
                 Rule::ParComp, Rule::EqSubstL, Rule::EqSubstR, Rule::ChainProd, Rule::IfMax,
                 Rule::ChainSum, Rule::ParMax})
    if (rule_name(r) == name) return r;
  throw DerivationFormatError("unknown rule '" + name + "'");
}

namespace {

ExtReal eps_of(const Judgement& j) { return j.bound.strict ? ExtReal::zero() : j.bound.eps; }

void require_premises(Rule r, const std::vector<Judgement>& prem, size_t n,
                      const std::string& path) {
  if (prem.size() != n)
    throw ShapeError(path, rule_name(r) + " expects " + std::to_string(n) + " premises, got " +
                               std::to_string(prem.size()));
}

/// Recomputes what a node with the given rule and parameters concludes from
/// the given premise judgements. Shared by the checker and the builders.
Judgement conclusion_of(const Derivation& d, const std::vector<Judgement>& prem,
                        const TheoryConfig& cfg, const std::string& path) {
  bool circuit = cfg.kind == TheoryKind::Circuit;
  auto typecheck_both = [&](const TermPtr& l, const TermPtr& r) {
    TermType tl, tr;
    try {
      tl = typecheck(l, cfg.kind);
      tr = typecheck(r, cfg.kind);
    } catch (const TypeCheckError& e) {
      throw ShapeError(path, e.what());
    }
    if (!(tl == tr)) throw ShapeError(path, "judgement sides have different types");
  };
  switch (d.rule) {
    case Rule::Refl0: {
      require_premises(d.rule, prem, 0, path);
      if (!d.term_a) throw ShapeError(path, "Refl0 needs a term parameter");
      typecheck_both(d.term_a, d.term_a);
      return {d.term_a, d.term_a, Bound::up_to(ExtReal::zero())};
    }
    case Rule::SemEq: {
      require_premises(d.rule, prem, 0, path);
      if (!d.term_a || !d.term_b) throw ShapeError(path, "SemEq needs two term parameters");
      typecheck_both(d.term_a, d.term_b);
      if (eval(d.term_a, cfg.kind) != eval(d.term_b, cfg.kind))
        throw SemEqError(path, "terms denote different matrices");
      return {d.term_a, d.term_b, Bound::strict_eq()};
    }
    case Rule::Mono: {
      require_premises(d.rule, prem, 1, path);
      ExtReal from = eps_of(prem[0]);
      if (d.mono_eps.value() < from.value() && !approx_equal(from, d.mono_eps))
        throw BoundMismatchError(path, "Mono target " + to_string(d.mono_eps) +
                                           " undercuts premise bound " + to_string(from));
      return {prem[0].lhs, prem[0].rhs, Bound::up_to(d.mono_eps)};
    }
    case Rule::MinJoin: {
      require_premises(d.rule, prem, 2, path);
      if (!structural_equal(prem[0].lhs, prem[1].lhs) ||
          !structural_equal(prem[0].rhs, prem[1].rhs))
        throw ShapeError(path, "MinJoin premises must share both terms");
      return {prem[0].lhs, prem[0].rhs, Bound::up_to(ext_min(eps_of(prem[0]), eps_of(prem[1])))};
    }
    case Rule::SeqComp: {
      require_premises(d.rule, prem, 2, path);
      TermPtr lhs = seq(prem[0].lhs, prem[1].lhs);
      TermPtr rhs = seq(prem[0].rhs, prem[1].rhs);
      typecheck_both(lhs, rhs);
      return {lhs, rhs, Bound::up_to(add(eps_of(prem[0]), eps_of(prem[1])))};
    }
    case Rule::ParComp: {
      require_premises(d.rule, prem, 2, path);
      TermPtr lhs = par(prem[0].lhs, prem[1].lhs);
      TermPtr rhs = par(prem[0].rhs, prem[1].rhs);
      typecheck_both(lhs, rhs);
      return {lhs, rhs, Bound::up_to(add(eps_of(prem[0]), eps_of(prem[1])))};
    }
    case Rule::EqSubstL: {
      require_premises(d.rule, prem, 2, path);
      if (!prem[0].bound.strict) throw ShapeError(path, "EqSubstL first premise must be strict");
      if (prem[1].bound.strict) throw ShapeError(path, "EqSubstL second premise must be bounded");
      if (!structural_equal(prem[0].lhs, prem[1].lhs))
        throw ShapeError(path, "EqSubstL premises do not share the substituted term");
      return {prem[0].rhs, prem[1].rhs, prem[1].bound};
    }
    case Rule::EqSubstR: {
      require_premises(d.rule, prem, 2, path);
      if (!prem[0].bound.strict) throw ShapeError(path, "EqSubstR first premise must be strict");
      if (prem[1].bound.strict) throw ShapeError(path, "EqSubstR second premise must be bounded");
      if (!structural_equal(prem[0].lhs, prem[1].rhs))
        throw ShapeError(path, "EqSubstR premises do not share the substituted term");
      return {prem[1].lhs, prem[0].rhs, prem[1].bound};
    }
    case Rule::ChainProd: {
      if (!circuit) throw RuleTheoryError(path, "ChainProd applies only under the circuit theory");
      require_premises(d.rule, prem, 2, path);
      try {
        TermPtr lhs = cond_state(d.p, prem[0].lhs, prem[1].lhs);
        TermPtr rhs = cond_state(d.q, prem[0].rhs, prem[1].rhs);
        typecheck_both(lhs, rhs);
        ExtReal bound = c_alpha(cfg.alpha, Prob(d.p), Prob(d.q), eps_of(prem[0]), eps_of(prem[1]));
        return {lhs, rhs, Bound::up_to(bound)};
      } catch (const DomainError& e) {
        throw ShapeError(path, e.what());
      }
    }
    case Rule::IfMax: {
      if (!circuit) throw RuleTheoryError(path, "IfMax applies only under the circuit theory");
      require_premises(d.rule, prem, 2, path);
      TermPtr lhs = if_gate(prem[0].lhs, prem[1].lhs);
      TermPtr rhs = if_gate(prem[0].rhs, prem[1].rhs);
      typecheck_both(lhs, rhs);
      return {lhs, rhs, Bound::up_to(ext_max(eps_of(prem[0]), eps_of(prem[1])))};
    }
    case Rule::ChainSum: {
      if (circuit) throw RuleTheoryError(path, "ChainSum applies only under the convex theory");
      require_premises(d.rule, prem, 2, path);
      try {
        TermPtr lhs = conv_pair(d.p, prem[0].lhs, prem[1].lhs);
        TermPtr rhs = conv_pair(d.q, prem[0].rhs, prem[1].rhs);
        typecheck_both(lhs, rhs);
        ExtReal bound = c_alpha(cfg.alpha, Prob(d.p), Prob(d.q), eps_of(prem[0]), eps_of(prem[1]));
        return {lhs, rhs, Bound::up_to(bound)};
      } catch (const DomainError& e) {
        throw ShapeError(path, e.what());
      }
    }
    case Rule::ParMax: {
      if (circuit) throw RuleTheoryError(path, "ParMax applies only under the convex theory");
      require_premises(d.rule, prem, 2, path);
      TermPtr lhs = par(prem[0].lhs, prem[1].lhs);
      TermPtr rhs = par(prem[0].rhs, prem[1].rhs);
      typecheck_both(lhs, rhs);
      return {lhs, rhs, Bound::up_to(ext_max(eps_of(prem[0]), eps_of(prem[1])))};
    }
  }
  throw ShapeError(path, "unreachable rule");
}

DerivPtr finish(std::shared_ptr<Derivation> node, const TheoryConfig& cfg) {
  std::vector<Judgement> prem;
  prem.reserve(node->premises.size());
  for (const DerivPtr& p : node->premises) prem.push_back(p->conclusion);
  node->conclusion = conclusion_of(*node, prem, cfg, "build");
  return node;
}

std::shared_ptr<Derivation> node_of(Rule r, std::vector<DerivPtr> premises) {
  auto n = std::make_shared<Derivation>(r);
  n->premises = std::move(premises);
  return n;
}

}  // namespace

DerivPtr mk_refl0(const TheoryConfig& cfg, TermPtr t) {
  auto n = node_of(Rule::Refl0, {});
  n->term_a = std::move(t);
  return finish(n, cfg);
}

DerivPtr mk_semeq(const TheoryConfig& cfg, TermPtr lhs, TermPtr rhs) {
  auto n = node_of(Rule::SemEq, {});
  n->term_a = std::move(lhs);
  n->term_b = std::move(rhs);
  return finish(n, cfg);
}

DerivPtr mk_mono(const TheoryConfig& cfg, ExtReal eps, DerivPtr premise) {
  auto n = node_of(Rule::Mono, {std::move(premise)});
  n->mono_eps = eps;
  return finish(n, cfg);
}

DerivPtr mk_minjoin(const TheoryConfig& cfg, DerivPtr a, DerivPtr b) {
  return finish(node_of(Rule::MinJoin, {std::move(a), std::move(b)}), cfg);
}

DerivPtr mk_seqcomp(const TheoryConfig& cfg, DerivPtr a, DerivPtr b) {
  return finish(node_of(Rule::SeqComp, {std::move(a), std::move(b)}), cfg);
}

DerivPtr mk_parcomp(const TheoryConfig& cfg, DerivPtr a, DerivPtr b) {
  return finish(node_of(Rule::ParComp, {std::move(a), std::move(b)}), cfg);
}

DerivPtr mk_eqsubst_l(const TheoryConfig& cfg, DerivPtr eq, DerivPtr quant) {
  return finish(node_of(Rule::EqSubstL, {std::move(eq), std::move(quant)}), cfg);
}

DerivPtr mk_eqsubst_r(const TheoryConfig& cfg, DerivPtr eq, DerivPtr quant) {
  return finish(node_of(Rule::EqSubstR, {std::move(eq), std::move(quant)}), cfg);
}

DerivPtr mk_chain_prod(const TheoryConfig& cfg, Rat p, Rat q, DerivPtr one, DerivPtr zero) {
  auto n = node_of(Rule::ChainProd, {std::move(one), std::move(zero)});
  n->p = std::move(p);
  n->q = std::move(q);
  return finish(n, cfg);
}

DerivPtr mk_if_max(const TheoryConfig& cfg, DerivPtr one, DerivPtr zero) {
  return finish(node_of(Rule::IfMax, {std::move(one), std::move(zero)}), cfg);
}

DerivPtr mk_chain_sum(const TheoryConfig& cfg, Rat p, Rat q, DerivPtr f, DerivPtr fp) {
  auto n = node_of(Rule::ChainSum, {std::move(f), std::move(fp)});
  n->p = std::move(p);
  n->q = std::move(q);
  return finish(n, cfg);
}

DerivPtr mk_par_max(const TheoryConfig& cfg, DerivPtr a, DerivPtr b) {
  return finish(node_of(Rule::ParMax, {std::move(a), std::move(b)}), cfg);
}

DerivPtr rebuild_with_premises(const TheoryConfig& cfg, const Derivation& node,
                               std::vector<DerivPtr> premises) {
  auto n = std::make_shared<Derivation>(node.rule);
  n->p = node.p;
  n->q = node.q;
  n->mono_eps = node.mono_eps;
  n->term_a = node.term_a;
  n->term_b = node.term_b;
  n->premises = std::move(premises);
  return finish(n, cfg);
}

namespace {

Judgement check_rec(const Derivation& d, const TheoryConfig& cfg, const std::string& path) {
  std::vector<Judgement> prem;
  prem.reserve(d.premises.size());
  for (size_t i = 0; i < d.premises.size(); ++i) {
    if (!d.premises[i]) throw ShapeError(path, "null premise");
    prem.push_back(check_rec(*d.premises[i], cfg, path + ".premises[" + std::to_string(i) + "]"));
  }
  Judgement expected = conclusion_of(d, prem, cfg, path);
  if (!d.conclusion.lhs || !d.conclusion.rhs) throw ShapeError(path, "missing stated conclusion");
  if (!structural_equal(expected.lhs, d.conclusion.lhs) ||
      !structural_equal(expected.rhs, d.conclusion.rhs))
    throw ShapeError(path, "stated conclusion terms differ from the reconstructed ones");
  if (expected.bound.strict != d.conclusion.bound.strict)
    throw ShapeError(path, "stated conclusion mixes strict and bounded equality");
  if (!expected.bound.strict && !approx_equal(expected.bound.eps, d.conclusion.bound.eps))
    throw BoundMismatchError(path, "stated bound " + to_string(d.conclusion.bound.eps) +
                                       " but recomputed " + to_string(expected.bound.eps));
  return expected;
}

}  // namespace

Judgement check(const DerivPtr& d, const TheoryConfig& cfg) {
  if (!d) throw ShapeError("root", "null derivation");
  return check_rec(*d, cfg, "root");
}

ExtReal bound_of(const Judgement& j) { return j.bound.strict ? ExtReal::zero() : j.bound.eps; }

// ---------------------------------------------------------------------------
// Serialization

namespace {

using nlohmann::json;

std::string eps_to_string(const Bound& b) {
  if (b.strict) return "eq";
  if (b.eps.is_infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", b.eps.value());
  return buf;
}

Bound eps_from_string(const std::string& text) {
  if (text == "eq") return Bound::strict_eq();
  if (text == "inf") return Bound::up_to(ExtReal::infinity());
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || std::isnan(v) || std::isinf(v))
    throw DerivationFormatError("malformed eps '" + text + "'");
  if (v < 0) throw DerivationFormatError("negative eps '" + text + "'");
  return Bound::up_to(ExtReal::from_value(v));
}

json to_json_rec(const Derivation& d) {
  json node;
  node["rule"] = rule_name(d.rule);
  json params = json::object();
  switch (d.rule) {
    case Rule::ChainProd:
    case Rule::ChainSum:
      params["p"] = rat_to_string(d.p);
      params["q"] = rat_to_string(d.q);
      break;
    case Rule::Mono:
      params["eps"] = eps_to_string(Bound::up_to(d.mono_eps));
      break;
    case Rule::Refl0:
      params["term"] = print_term(d.term_a);
      break;
    case Rule::SemEq:
      params["lhs"] = print_term(d.term_a);
      params["rhs"] = print_term(d.term_b);
      break;
    default:
      break;
  }
  node["params"] = params;
  json prem = json::array();
  for (const DerivPtr& p : d.premises) prem.push_back(to_json_rec(*p));
  node["premises"] = prem;
  node["conclusion"] = {{"lhs", print_term(d.conclusion.lhs)},
                        {"rhs", print_term(d.conclusion.rhs)},
                        {"eps", eps_to_string(d.conclusion.bound)}};
  return node;
}

DerivPtr from_json_rec(const json& node, TheoryKind kind) {
  if (!node.is_object()) throw DerivationFormatError("derivation node must be an object");
  if (!node.contains("rule") || !node["rule"].is_string())
    throw DerivationFormatError("node missing 'rule'");
  auto n = std::make_shared<Derivation>(rule_from_name(node["rule"].get<std::string>()));
  json params = node.value("params", json::object());
  auto param_rat = [&](const char* key) {
    if (!params.contains(key) || !params[key].is_string())
      throw DerivationFormatError(rule_name(n->rule) + " needs string param '" + key + "'");
    return rat_from_string(params[key].get<std::string>());
  };
  auto param_term = [&](const char* key) {
    if (!params.contains(key) || !params[key].is_string())
      throw DerivationFormatError(rule_name(n->rule) + " needs string param '" + key + "'");
    return parse_term(params[key].get<std::string>(), kind);
  };
  switch (n->rule) {
    case Rule::ChainProd:
    case Rule::ChainSum:
      n->p = param_rat("p");
      n->q = param_rat("q");
      break;
    case Rule::Mono: {
      if (!params.contains("eps") || !params["eps"].is_string())
        throw DerivationFormatError("Mono needs string param 'eps'");
      Bound b = eps_from_string(params["eps"].get<std::string>());
      if (b.strict) throw DerivationFormatError("Mono eps cannot be 'eq'");
      n->mono_eps = b.eps;
      break;
    }
    case Rule::Refl0:
      n->term_a = param_term("term");
      break;
    case Rule::SemEq:
      n->term_a = param_term("lhs");
      n->term_b = param_term("rhs");
      break;
    default:
      break;
  }
  if (node.contains("premises")) {
    if (!node["premises"].is_array()) throw DerivationFormatError("'premises' must be an array");
    for (const json& p : node["premises"]) n->premises.push_back(from_json_rec(p, kind));
  }
  if (!node.contains("conclusion") || !node["conclusion"].is_object())
    throw DerivationFormatError("node missing 'conclusion'");
  const json& c = node["conclusion"];
  for (const char* key : {"lhs", "rhs", "eps"})
    if (!c.contains(key) || !c[key].is_string())
      throw DerivationFormatError(std::string("conclusion missing '") + key + "'");
  n->conclusion.lhs = parse_term(c["lhs"].get<std::string>(), kind);
  n->conclusion.rhs = parse_term(c["rhs"].get<std::string>(), kind);
  n->conclusion.bound = eps_from_string(c["eps"].get<std::string>());
  return n;
}

}  // namespace

std::string derivation_to_json(const DerivPtr& d) {
  if (!d) throw DerivationFormatError("null derivation");
  return to_json_rec(*d).dump(2);
}

DerivPtr derivation_from_json(const std::string& text, TheoryKind kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DerivationFormatError(std::string("invalid JSON: ") + e.what());
  }
  return from_json_rec(doc, kind);
}

}  // namespace qsd
