// Copyright 2026 The hkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parser.h"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hkb {
namespace {

struct Token {
  enum Kind { kIdent, kPunct, kSection, kEnd } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { Advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    Advance();
    return t;
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw InputError("syntax error at line " + std::to_string(tok_.line) +
                     ", column " + std::to_string(tok_.col) + ": " + msg);
  }

 private:
  void Advance() {
    SkipSpace();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::kEnd, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (c == '[') {
      size_t end = text_.find(']', pos_);
      if (end == std::string::npos)
        throw InputError("syntax error at line " + std::to_string(line_) +
                         ": unterminated section header");
      tok_.kind = Token::kSection;
      tok_.text = text_.substr(pos_ + 1, end - pos_ - 1);
      Consume(end - pos_ + 1);
      return;
    }
    // '@' admits generated constants such as "@new1" so transactions with a
    // fresh-constant realization survive a round trip through the printer.
    if (std::isalnum((unsigned char)c) || c == '_' || c == '@') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_' ||
              text_[pos_] == '@'))
        Consume(1);
      tok_.kind = Token::kIdent;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      tok_ = {Token::kPunct, ":-", line_, col_};
      Consume(2);
      return;
    }
    if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      tok_ = {Token::kPunct, "!=", line_, col_};
      Consume(2);
      return;
    }
    if (c == '.' || c == ',' || c == '(' || c == ')') {
      tok_ = {Token::kPunct, std::string(1, c), line_, col_};
      Consume(1);
      return;
    }
    throw InputError("syntax error at line " + std::to_string(line_) +
                     ", column " + std::to_string(col_) +
                     ": unexpected character '" + std::string(1, c) + "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Consume(1);
      } else if (std::isspace((unsigned char)c)) {
        Consume(1);
      } else {
        break;
      }
    }
  }

  void Consume(size_t n) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

bool IsVarName(const std::string& s) {
  return !s.empty() && (std::isupper((unsigned char)s[0]) || s[0] == '_');
}

Term ParseTerm(Lexer& lx) {
  if (lx.peek().kind != Token::kIdent) lx.Fail("expected a term");
  std::string name = lx.take().text;
  return IsVarName(name) ? Var(name) : Const(name);
}

// atom | term != term | not atom
Literal ParseLiteral(Lexer& lx) {
  bool neg = false;
  if (lx.peek().kind == Token::kIdent && lx.peek().text == "not") {
    neg = true;
    lx.take();
  }
  if (lx.peek().kind != Token::kIdent) lx.Fail("expected an atom");
  std::string name = lx.take().text;
  if (lx.peek().kind == Token::kPunct && lx.peek().text == "(") {
    if (IsVarName(name)) lx.Fail("predicate '" + name + "' looks like a variable");
    lx.take();
    std::vector<Term> args;
    args.push_back(ParseTerm(lx));
    while (lx.peek().kind == Token::kPunct && lx.peek().text == ",") {
      lx.take();
      args.push_back(ParseTerm(lx));
    }
    if (lx.peek().kind != Token::kPunct || lx.peek().text != ")")
      lx.Fail("expected ')'");
    lx.take();
    return Literal{MakeAtom(name, std::move(args)), neg};
  }
  if (lx.peek().kind == Token::kPunct && lx.peek().text == "!=") {
    if (neg) lx.Fail("'not' cannot apply to a guard");
    lx.take();
    Term lhs = IsVarName(name) ? Var(name) : Const(name);
    Term rhs = ParseTerm(lx);
    return Literal{MakeAtom(kNeqPred, {lhs, rhs}), false};
  }
  if (IsVarName(name)) lx.Fail("atom '" + name + "' looks like a variable");
  return Literal{MakeAtom(name), neg};
}

// [head] [:- body] .
Clause ParseClauseTokens(Lexer& lx) {
  Clause c;
  if (!(lx.peek().kind == Token::kPunct && lx.peek().text == ":-")) {
    Literal h = ParseLiteral(lx);
    if (h.neg) lx.Fail("clause head cannot be negated");
    if (h.is_guard()) lx.Fail("clause head cannot be a guard");
    c.head = h.atom;
  }
  if (lx.peek().kind == Token::kPunct && lx.peek().text == ":-") {
    lx.take();
    c.body.push_back(ParseLiteral(lx));
    while (lx.peek().kind == Token::kPunct && lx.peek().text == ",") {
      lx.take();
      c.body.push_back(ParseLiteral(lx));
    }
  }
  if (!(lx.peek().kind == Token::kPunct && lx.peek().text == "."))
    lx.Fail("expected ',' or '.'");
  lx.take();
  return c;
}

enum class Section { kNone, kRules, kFacts, kConstraints, kAbducibles };

}  // namespace

KnowledgeBase ParseProgram(const std::string& text) {
  Lexer lx(text);
  KnowledgeBase kb;
  Section sec = Section::kNone;
  int ddb_headers = 0, kb_headers = 0;

  while (lx.peek().kind != Token::kEnd) {
    if (lx.peek().kind == Token::kSection) {
      std::string name = lx.take().text;
      if (name == "IDB" || name == "EDB" || name == "IC")
        ++ddb_headers;
      else if (name == "IMMUTABLE" || name == "UPDATABLE" ||
               name == "CONSTRAINTS")
        ++kb_headers;
      else if (name != "ABDUCIBLES")
        throw InputError("unknown section [" + name + "]");
      if (ddb_headers > 0 && kb_headers > 0)
        throw InputError("mixed section styles: use [IDB]/[EDB]/[IC] or "
                         "[IMMUTABLE]/[UPDATABLE]/[CONSTRAINTS], not both");
      if (name == "IDB" || name == "IMMUTABLE")
        sec = Section::kRules;
      else if (name == "EDB" || name == "UPDATABLE")
        sec = Section::kFacts;
      else if (name == "IC" || name == "CONSTRAINTS")
        sec = Section::kConstraints;
      else
        sec = Section::kAbducibles;
      continue;
    }
    if (sec == Section::kNone)
      lx.Fail("clause outside of any section");
    if (sec == Section::kAbducibles) {
      if (lx.peek().kind != Token::kIdent) lx.Fail("expected a predicate name");
      std::string name = lx.take().text;
      if (IsVarName(name)) throw InputError("abducible '" + name +
                                            "' looks like a variable");
      kb.abducibles.push_back(name);
      while (lx.peek().kind == Token::kPunct &&
             (lx.peek().text == "," || lx.peek().text == "."))
        lx.take();
      continue;
    }
    Clause c = ParseClauseTokens(lx);
    switch (sec) {
      case Section::kRules:
        kb.rules.push_back(std::move(c));
        break;
      case Section::kFacts:
        if (c.is_constraint() || !c.body.empty())
          throw InputError("only facts are allowed in the updatable section: " +
                           c.text());
        if (!c.head->ground())
          throw InputError("facts must be ground: " + c.text());
        kb.facts.push_back(*c.head);
        break;
      case Section::kConstraints:
        if (!c.is_constraint())
          throw InputError("constraints must be denials (\":- body.\"): " +
                           c.text());
        kb.constraints.push_back(std::move(c));
        break;
      default:
        break;
    }
  }

  kb.mode = ddb_headers > 0 ? Mode::kDdb : Mode::kKb;
  kb.normalize();
  kb.predicates();  // arity check

  if (kb.mode == Mode::kDdb) {
    for (const auto& r : kb.rules) {
      if (r.body.empty())
        throw InputError("fact declared in immutable section in DDB mode: " +
                         r.text());
    }
    std::set<std::string> views = kb.view_preds();
    for (const auto& f : kb.facts)
      if (views.count(f.pred))
        throw InputError("predicate '" + f.pred +
                         "' is both view and base in DDB mode");
  }
  for (const auto& r : kb.rules)
    if (r.head && r.body.empty() && !r.head->ground())
      throw InputError("facts must be ground: " + r.text());
  return kb;
}

KnowledgeBase ParseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseProgram(buf.str());
}

Clause ParseClause(const std::string& text) {
  std::string t = text;
  // Tolerate a missing terminator for single-clause strings.
  if (t.find('.') == std::string::npos) t += ".";
  Lexer lx(t);
  Clause c = ParseClauseTokens(lx);
  if (lx.peek().kind != Token::kEnd) lx.Fail("trailing input after clause");
  return c;
}

Atom ParseGroundAtom(const std::string& text) {
  Clause c = ParseClause(text);
  if (c.is_constraint() || !c.body.empty())
    throw InputError("expected a plain atom: " + text);
  if (!c.head->ground())
    throw InputError("expected a ground atom: " + text);
  return *c.head;
}

std::string Serialize(const KnowledgeBase& kb) {
  std::ostringstream out;
  bool ddb = kb.mode == Mode::kDdb;
  out << (ddb ? "[IDB]" : "[IMMUTABLE]") << "\n";
  for (const auto& r : kb.rules) out << r.text() << "\n";
  out << (ddb ? "[EDB]" : "[UPDATABLE]") << "\n";
  for (const auto& f : kb.facts) out << f.text() << ".\n";
  out << (ddb ? "[IC]" : "[CONSTRAINTS]") << "\n";
  for (const auto& c : kb.constraints) out << c.text() << "\n";
  if (!kb.abducibles.empty()) {
    out << "[ABDUCIBLES]\n";
    for (const auto& a : kb.abducibles) out << a << ".\n";
  }
  return out.str();
}

}  // namespace hkb
