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

#include "qsd/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qsd {

std::string theory_name(TheoryKind k) { return k == TheoryKind::Circuit ? "circuit" : "convex"; }

namespace {

std::shared_ptr<Term> mk(NodeKind k) { return std::make_shared<Term>(k); }

Rat checked_param(Rat p) {
  if (p < 0 || p > 1) throw DomainError("term parameter outside [0,1]: " + rat_to_string(p));
  return p;
}

TermPtr mk_gen(GenName g) {
  auto t = std::make_shared<Term>(NodeKind::Gen);
  t->gen = g;
  return t;
}

TermPtr mk_gen(GenName g, Rat p) {
  auto t = std::make_shared<Term>(NodeKind::Gen);
  t->gen = g;
  t->param = checked_param(std::move(p));
  return t;
}

TermPtr mk_binary(NodeKind k, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>(k);
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TermPtr mk_param_binary(NodeKind k, Rat p, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>(k);
  t->param = checked_param(std::move(p));
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

}  // namespace

TermPtr gen_del() { return mk_gen(GenName::Del); }
TermPtr gen_copy() { return mk_gen(GenName::Copy); }
TermPtr gen_and() { return mk_gen(GenName::And); }
TermPtr gen_not() { return mk_gen(GenName::Not); }
TermPtr gen_flip(Rat p) { return mk_gen(GenName::Flip, std::move(p)); }
TermPtr gen_cop() { return mk_gen(GenName::Cop); }
TermPtr gen_cc(Rat p) { return mk_gen(GenName::Cc, std::move(p)); }

TermPtr id_term(int n) {
  if (n < 0) throw DomainError("id on a negative object");
  auto t = mk(NodeKind::Id);
  t->a = n;
  return t;
}

TermPtr swap_elem() { return mk(NodeKind::SwapElem); }

TermPtr swap_dim(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("swap on negative objects");
  auto t = std::make_shared<Term>(NodeKind::SwapDim);
  t->a = n;
  t->b = m;
  return t;
}

TermPtr seq(TermPtr l, TermPtr r) { return mk_binary(NodeKind::Seq, std::move(l), std::move(r)); }
TermPtr par(TermPtr l, TermPtr r) { return mk_binary(NodeKind::Par, std::move(l), std::move(r)); }
TermPtr or_gate() { return mk(NodeKind::Or); }

TermPtr if_gate(TermPtr f1, TermPtr f0) {
  return mk_binary(NodeKind::IfGate, std::move(f1), std::move(f0));
}

TermPtr cond_state(Rat p, TermPtr f1, TermPtr f0) {
  return mk_param_binary(NodeKind::CondState, std::move(p), std::move(f1), std::move(f0));
}

TermPtr conv_comb(Rat p, TermPtr l, TermPtr r) {
  return mk_param_binary(NodeKind::ConvComb, std::move(p), std::move(l), std::move(r));
}

TermPtr conv_pair(Rat p, TermPtr f, TermPtr g) {
  return mk_param_binary(NodeKind::ConvPair, std::move(p), std::move(f), std::move(g));
}

TermPtr codiag_term(int n, int m) {
  if (n < 1 || m < 0) throw DomainError("codiag requires n >= 1, m >= 0");
  auto t = std::make_shared<Term>(NodeKind::Codiag);
  t->a = n;
  t->b = m;
  return t;
}

TermPtr seq_chain(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return id_term(0);
  TermPtr acc = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) acc = seq(acc, ts[i]);
  return acc;
}

TermPtr par_chain(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return id_term(0);
  TermPtr acc = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) acc = par(acc, ts[i]);
  return acc;
}

bool structural_equal(const TermPtr& s, const TermPtr& t) {
  if (s.get() == t.get()) return true;
  if (!s || !t) return false;
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case NodeKind::Gen:
      if (s->gen != t->gen) return false;
      if (s->gen == GenName::Flip || s->gen == GenName::Cc) return s->param == t->param;
      return true;
    case NodeKind::Id:
      return s->a == t->a;
    case NodeKind::SwapElem:
    case NodeKind::Or:
      return true;
    case NodeKind::SwapDim:
    case NodeKind::Codiag:
      return s->a == t->a && s->b == t->b;
    case NodeKind::Seq:
    case NodeKind::Par:
    case NodeKind::IfGate:
      return structural_equal(s->left, t->left) && structural_equal(s->right, t->right);
    case NodeKind::CondState:
    case NodeKind::ConvComb:
    case NodeKind::ConvPair:
      return s->param == t->param && structural_equal(s->left, t->left) &&
             structural_equal(s->right, t->right);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Typechecking

namespace {

[[noreturn]] void type_fail(const TermPtr& t, const std::string& msg) {
  throw TypeCheckError(msg + " in subterm '" + print_term(t) + "'");
}

TermType typecheck_rec(const TermPtr& t, TheoryKind k) {
  switch (t->kind) {
    case NodeKind::Gen:
      if (k == TheoryKind::Circuit) {
        switch (t->gen) {
          case GenName::Del: return {1, 0};
          case GenName::Copy: return {1, 2};
          case GenName::And: return {2, 1};
          case GenName::Not: return {1, 1};
          case GenName::Flip: return {0, 1};
          default: type_fail(t, "generator not in the circuit signature");
        }
      } else {
        switch (t->gen) {
          case GenName::Del: return {1, 0};
          case GenName::Cop: return {2, 1};
          case GenName::Cc: return {1, 2};
          default: type_fail(t, "generator not in the convex signature");
        }
      }
    case NodeKind::Id:
      return {t->a, t->a};
    case NodeKind::SwapElem:
      if (k != TheoryKind::Circuit) type_fail(t, "elementary swap is circuit-only");
      return {2, 2};
    case NodeKind::SwapDim:
      if (k != TheoryKind::Convex) type_fail(t, "swap(n,m) is convex-only");
      return {t->a + t->b, t->a + t->b};
    case NodeKind::Seq: {
      TermType l = typecheck_rec(t->left, k);
      TermType r = typecheck_rec(t->right, k);
      if (l.cod != r.dom)
        type_fail(t, "composition mismatch: " + std::to_string(l.cod) + " into " +
                         std::to_string(r.dom));
      return {l.dom, r.cod};
    }
    case NodeKind::Par: {
      TermType l = typecheck_rec(t->left, k);
      TermType r = typecheck_rec(t->right, k);
      return {l.dom + r.dom, l.cod + r.cod};
    }
    case NodeKind::Or:
      if (k != TheoryKind::Circuit) type_fail(t, "or is circuit-only");
      return {2, 1};
    case NodeKind::IfGate: {
      if (k != TheoryKind::Circuit) type_fail(t, "ifgate is circuit-only");
      TermType f1 = typecheck_rec(t->left, k);
      TermType f0 = typecheck_rec(t->right, k);
      if (f1.cod != f0.cod) type_fail(t, "ifgate branches must share a codomain");
      return {1 + f1.dom + f0.dom, f1.cod};
    }
    case NodeKind::CondState: {
      if (k != TheoryKind::Circuit) type_fail(t, "condstate is circuit-only");
      TermType f1 = typecheck_rec(t->left, k);
      TermType f0 = typecheck_rec(t->right, k);
      if (f1.dom != 0 || f0.dom != 0) type_fail(t, "condstate branches must be states");
      if (f1.cod != f0.cod) type_fail(t, "condstate branches must share a codomain");
      return {0, 1 + f1.cod};
    }
    case NodeKind::ConvComb: {
      if (k != TheoryKind::Circuit) type_fail(t, "convcomb is circuit-only");
      TermType l = typecheck_rec(t->left, k);
      TermType r = typecheck_rec(t->right, k);
      if (!(l == r)) type_fail(t, "convcomb operands must have equal types");
      return l;
    }
    case NodeKind::ConvPair: {
      if (k != TheoryKind::Convex) type_fail(t, "convpair is convex-only");
      TermType f = typecheck_rec(t->left, k);
      TermType g = typecheck_rec(t->right, k);
      if (f.dom != 1 || g.dom != 1) type_fail(t, "convpair operands must have domain 1");
      return {1, f.cod + g.cod};
    }
    case NodeKind::Codiag:
      if (k != TheoryKind::Convex) type_fail(t, "codiag is convex-only");
      return {t->a * t->b, t->b};
  }
  throw TypeCheckError("unreachable term kind");
}

}  // namespace

TermType typecheck(const TermPtr& t, TheoryKind k) {
  if (!t) throw TypeCheckError("null term");
  return typecheck_rec(t, k);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_rec(const TermPtr& t, std::ostream& out) {
  switch (t->kind) {
    case NodeKind::Gen:
      switch (t->gen) {
        case GenName::Del: out << "del"; return;
        case GenName::Copy: out << "copy"; return;
        case GenName::And: out << "and"; return;
        case GenName::Not: out << "not"; return;
        case GenName::Flip: out << "flip(" << rat_to_string(t->param) << ")"; return;
        case GenName::Cop: out << "cop"; return;
        case GenName::Cc: out << "cc(" << rat_to_string(t->param) << ")"; return;
      }
      return;
    case NodeKind::Id: out << "id(" << t->a << ")"; return;
    case NodeKind::SwapElem: out << "swap"; return;
    case NodeKind::SwapDim: out << "swap(" << t->a << "," << t->b << ")"; return;
    case NodeKind::Seq:
      out << "(";
      print_rec(t->left, out);
      out << " ; ";
      print_rec(t->right, out);
      out << ")";
      return;
    case NodeKind::Par:
      out << "(";
      print_rec(t->left, out);
      out << " + ";
      print_rec(t->right, out);
      out << ")";
      return;
    case NodeKind::Or: out << "or"; return;
    case NodeKind::IfGate:
      out << "ifgate(";
      print_rec(t->left, out);
      out << ", ";
      print_rec(t->right, out);
      out << ")";
      return;
    case NodeKind::CondState:
      out << "condstate(" << rat_to_string(t->param) << ", ";
      print_rec(t->left, out);
      out << ", ";
      print_rec(t->right, out);
      out << ")";
      return;
    case NodeKind::ConvComb:
      out << "convcomb(" << rat_to_string(t->param) << ", ";
      print_rec(t->left, out);
      out << ", ";
      print_rec(t->right, out);
      out << ")";
      return;
    case NodeKind::ConvPair:
      out << "convpair(" << rat_to_string(t->param) << ", ";
      print_rec(t->left, out);
      out << ", ";
      print_rec(t->right, out);
      out << ")";
      return;
    case NodeKind::Codiag: out << "codiag(" << t->a << "," << t->b << ")"; return;
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::ostringstream out;
  print_rec(t, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Ident, Number, LParen, RParen, Comma, Semi, Plus, Slash, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        id.push_back(advance());
      return {Token::Ident, id, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::string num;
      num.push_back(advance());
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
        num.push_back(advance());
      return {Token::Number, num, line, col};
    }
    advance();
    switch (c) {
      case '(': return {Token::LParen, "(", line, col};
      case ')': return {Token::RParen, ")", line, col};
      case ',': return {Token::Comma, ",", line, col};
      case ';': return {Token::Semi, ";", line, col};
      case '+': return {Token::Plus, "+", line, col};
      case '/': return {Token::Slash, "/", line, col};
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }
  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(const std::string& src, TheoryKind k) : lex_(src), kind_(k) { bump(); }

  TermPtr parse() {
    TermPtr t = parse_seq();
    expect(Token::End, "end of input");
    return t;
  }

 private:
  void bump() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k)
      throw ParseError(tok_.line, tok_.col, "expected " + what + ", found '" + tok_.text + "'");
    if (k != Token::End) bump();
  }

  // ';' binds looser than '+'; both left-associative.
  TermPtr parse_seq() {
    TermPtr t = parse_par();
    while (tok_.kind == Token::Semi) {
      bump();
      t = seq(t, parse_par());
    }
    return t;
  }

  TermPtr parse_par() {
    TermPtr t = parse_atom();
    while (tok_.kind == Token::Plus) {
      bump();
      t = par(t, parse_atom());
    }
    return t;
  }

  Rat parse_rational() {
    Token first = tok_;
    expect(Token::Number, "a number");
    std::string text = first.text;
    if (tok_.kind == Token::Slash) {
      bump();
      Token den = tok_;
      expect(Token::Number, "a denominator");
      text += "/" + den.text;
    }
    Rat r;
    try {
      r = rat_from_string(text);
    } catch (const DomainError& e) {
      throw ParseError(first.line, first.col, e.what());
    }
    if (r < 0 || r > 1)
      throw ParseError(first.line, first.col, "parameter outside [0,1]: " + text);
    return r;
  }

  int parse_nat() {
    Token t = tok_;
    expect(Token::Number, "a natural number");
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(t.line, t.col, "expected a natural number, found '" + t.text + "'");
    try {
      return std::stoi(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(t.line, t.col, "number out of range: '" + t.text + "'");
    }
  }

  TermPtr parse_atom() {
    if (tok_.kind == Token::LParen) {
      bump();
      TermPtr t = parse_seq();
      expect(Token::RParen, "')'");
      return t;
    }
    Token head = tok_;
    expect(Token::Ident, "a term");
    const std::string& name = head.text;
    auto circuit_only = [&] {
      if (kind_ != TheoryKind::Circuit)
        throw ParseError(head.line, head.col, "'" + name + "' is not in the convex grammar");
    };
    auto convex_only = [&] {
      if (kind_ != TheoryKind::Convex)
        throw ParseError(head.line, head.col, "'" + name + "' is not in the circuit grammar");
    };
    if (name == "id") {
      expect(Token::LParen, "'('");
      int n = parse_nat();
      expect(Token::RParen, "')'");
      return id_term(n);
    }
    if (name == "swap") {
      if (tok_.kind == Token::LParen) {
        convex_only();
        bump();
        int n = parse_nat();
        expect(Token::Comma, "','");
        int m = parse_nat();
        expect(Token::RParen, "')'");
        return swap_dim(n, m);
      }
      circuit_only();
      return swap_elem();
    }
    if (name == "del") return gen_del();
    if (name == "copy") {
      circuit_only();
      return gen_copy();
    }
    if (name == "and") {
      circuit_only();
      return gen_and();
    }
    if (name == "not") {
      circuit_only();
      return gen_not();
    }
    if (name == "or") {
      circuit_only();
      return or_gate();
    }
    if (name == "flip") {
      circuit_only();
      expect(Token::LParen, "'('");
      Rat p = parse_rational();
      expect(Token::RParen, "')'");
      return gen_flip(std::move(p));
    }
    if (name == "cop") {
      convex_only();
      return gen_cop();
    }
    if (name == "cc") {
      convex_only();
      expect(Token::LParen, "'('");
      Rat p = parse_rational();
      expect(Token::RParen, "')'");
      return gen_cc(std::move(p));
    }
    if (name == "ifgate") {
      circuit_only();
      expect(Token::LParen, "'('");
      TermPtr f1 = parse_seq();
      expect(Token::Comma, "','");
      TermPtr f0 = parse_seq();
      expect(Token::RParen, "')'");
      return if_gate(std::move(f1), std::move(f0));
    }
    if (name == "condstate") {
      circuit_only();
      expect(Token::LParen, "'('");
      Rat p = parse_rational();
      expect(Token::Comma, "','");
      TermPtr f1 = parse_seq();
      expect(Token::Comma, "','");
      TermPtr f0 = parse_seq();
      expect(Token::RParen, "')'");
      return cond_state(std::move(p), std::move(f1), std::move(f0));
    }
    if (name == "convcomb") {
      circuit_only();
      expect(Token::LParen, "'('");
      Rat p = parse_rational();
      expect(Token::Comma, "','");
      TermPtr l = parse_seq();
      expect(Token::Comma, "','");
      TermPtr r = parse_seq();
      expect(Token::RParen, "')'");
      return conv_comb(std::move(p), std::move(l), std::move(r));
    }
    if (name == "convpair") {
      convex_only();
      expect(Token::LParen, "'('");
      Rat p = parse_rational();
      expect(Token::Comma, "','");
      TermPtr f = parse_seq();
      expect(Token::Comma, "','");
      TermPtr g = parse_seq();
      expect(Token::RParen, "')'");
      return conv_pair(std::move(p), std::move(f), std::move(g));
    }
    if (name == "codiag") {
      convex_only();
      expect(Token::LParen, "'('");
      int n = parse_nat();
      expect(Token::Comma, "','");
      int m = parse_nat();
      expect(Token::RParen, "')'");
      return codiag_term(n, m);
    }
    throw ParseError(head.line, head.col,
                     "unknown generator '" + name + "' for theory " + theory_name(kind_));
  }

  Lexer lex_;
  TheoryKind kind_;
  Token tok_{Token::End, "", 0, 0};
};

}  // namespace

TermPtr parse_term(const std::string& src, TheoryKind k) { return Parser(src, k).parse(); }

// ---------------------------------------------------------------------------
// Macro expansion

TermPtr dup_wire(int k) {
  if (k < 0) throw DomainError("dup_wire on negative count");
  if (k == 0) return gen_del();
  if (k == 1) return id_term(1);
  return seq(gen_copy(), par(id_term(1), dup_wire(k - 1)));
}

TermPtr wire_perm(const std::vector<int>& out_of_in) {
  int k = static_cast<int>(out_of_in.size());
  std::vector<bool> seen(static_cast<size_t>(k), false);
  for (int w : out_of_in) {
    if (w < 0 || w >= k || seen[static_cast<size_t>(w)])
      throw DomainError("wire_perm argument is not a permutation");
    seen[static_cast<size_t>(w)] = true;
  }
  std::vector<int> current(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<size_t>(i)] = i;
  std::vector<TermPtr> layers;
  for (int pos = 0; pos < k; ++pos) {
    int j = pos;
    while (current[static_cast<size_t>(j)] != out_of_in[static_cast<size_t>(pos)]) ++j;
    while (j > pos) {
      std::swap(current[static_cast<size_t>(j - 1)], current[static_cast<size_t>(j)]);
      std::vector<TermPtr> layer;
      if (j - 1 > 0) layer.push_back(id_term(j - 1));
      layer.push_back(swap_elem());
      if (k - j - 1 > 0) layer.push_back(id_term(k - j - 1));
      layers.push_back(par_chain(layer));
      --j;
    }
  }
  if (layers.empty()) return id_term(k);
  return seq_chain(layers);
}

TermPtr copy_bundle(int n) {
  if (n < 0) throw DomainError("copy_bundle on negative count");
  if (n == 0) return id_term(0);
  if (n == 1) return gen_copy();
  std::vector<TermPtr> copies(static_cast<size_t>(n), gen_copy());
  // After the per-wire copies the layout is x1 x1 x2 x2 ...; route it into
  // the block layout x1..xn x1..xn.
  std::vector<int> perm(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    perm[static_cast<size_t>(i)] = 2 * i;
    perm[static_cast<size_t>(n + i)] = 2 * i + 1;
  }
  return seq(par_chain(copies), wire_perm(perm));
}

namespace {

TermPtr or_core() { return seq(seq(par(gen_not(), gen_not()), gen_and()), gen_not()); }

// x AND a, NOT x AND b, then OR: the 4 -> 1 multiplexer cell.
TermPtr mux_cell() {
  return seq(par(gen_and(), seq(par(gen_not(), id_term(1)), gen_and())), or_core());
}

// Selector bit plus two branch inputs; the branch picked by the selector
// passes its output through, the other is generated and masked away.
TermPtr if_gate_core(const TermPtr& f1, const TermPtr& f0, int m) {
  if (m == 0) return par(par(gen_del(), f1), f0);
  TermPtr staged = par(par(dup_wire(2 * m), f1), f0);
  // Wires: x_1..x_{2m}, a_1..a_m, b_1..b_m -> groups (x, a_i, x, b_i).
  std::vector<int> perm(static_cast<size_t>(4 * m));
  for (int i = 0; i < m; ++i) {
    perm[static_cast<size_t>(4 * i + 0)] = 2 * i;
    perm[static_cast<size_t>(4 * i + 1)] = 2 * m + i;
    perm[static_cast<size_t>(4 * i + 2)] = 2 * i + 1;
    perm[static_cast<size_t>(4 * i + 3)] = 3 * m + i;
  }
  std::vector<TermPtr> cells(static_cast<size_t>(m), mux_cell());
  return seq(seq(staged, wire_perm(perm)), par_chain(cells));
}

TermPtr codiag2_core(int m) {
  if (m == 0) return id_term(0);
  TermPtr route = par(par(id_term(1), swap_dim(m - 1, 1)), id_term(m - 1));
  return seq(route, par(gen_cop(), codiag2_core(m - 1)));
}

TermPtr codiag_core(int n, int m) {
  if (n == 1) return id_term(m);
  return seq(par(id_term(m), codiag_core(n - 1, m)), codiag2_core(m));
}

}  // namespace

TermPtr expand(const TermPtr& t, TheoryKind k) {
  typecheck(t, k);
  switch (t->kind) {
    case NodeKind::Gen:
    case NodeKind::Id:
    case NodeKind::SwapElem:
    case NodeKind::SwapDim:
      return t;
    case NodeKind::Seq:
      return seq(expand(t->left, k), expand(t->right, k));
    case NodeKind::Par:
      return par(expand(t->left, k), expand(t->right, k));
    case NodeKind::Or:
      return or_core();
    case NodeKind::IfGate: {
      int m = typecheck(t->left, k).cod;
      return if_gate_core(expand(t->left, k), expand(t->right, k), m);
    }
    case NodeKind::CondState: {
      int m = typecheck(t->left, k).cod;
      TermPtr gate = if_gate_core(expand(t->left, k), expand(t->right, k), m);
      return seq(seq(gen_flip(t->param), gen_copy()), par(id_term(1), gate));
    }
    case NodeKind::ConvComb: {
      TermType ty = typecheck(t->left, k);
      TermPtr gate = if_gate_core(expand(t->left, k), expand(t->right, k), ty.cod);
      return seq(par(gen_flip(t->param), copy_bundle(ty.dom)), gate);
    }
    case NodeKind::ConvPair:
      return seq(gen_cc(t->param), par(expand(t->left, k), expand(t->right, k)));
    case NodeKind::Codiag:
      return codiag_core(t->a, t->b);
  }
  throw TypeCheckError("unreachable term kind in expand");
}

}  // namespace qsd
