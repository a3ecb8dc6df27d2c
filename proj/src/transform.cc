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

#include "transform.h"

#include <algorithm>

#include "ground.h"

namespace hkb {
namespace {

std::string Mark(const Literal& lit) {
  return (lit.neg ? "~" : "") + lit.atom.text();
}

Literal Pos(const Atom& a) { return Literal{a, false}; }
Literal Neg(const Atom& a) { return Literal{a, true}; }

std::vector<Clause> GroundRules(const KnowledgeBase& ddb) {
  KnowledgeBase g = Ground(ddb);
  std::vector<Clause> rules;
  for (const Clause& c : g.rules) {
    if (c.is_fact()) continue;
    for (const Literal& lit : c.body) {
      if (lit.is_guard()) throw Error("internal", "unresolved guard after grounding");
      if (lit.neg) {
        throw InputError("transformation requires definite rules, got: " + c.text());
      }
    }
    rules.push_back(c);
  }
  return rules;
}

void PushUnique(std::vector<Literal>* v, const Literal& lit) {
  for (const Literal& have : *v) {
    if (have.neg == lit.neg && have.atom.text() == lit.atom.text()) return;
  }
  v->push_back(lit);
}

TransformedProgram Collect(TransformedProgram::Kind kind,
                           std::vector<DisjClause> clauses) {
  std::vector<DisjClause> out;
  std::set<std::string> seen;
  for (DisjClause& c : clauses) {
    std::string key = c.text();
    if (seen.insert(key).second) out.push_back(std::move(c));
  }
  return TransformedProgram{kind, std::move(out)};
}

}  // namespace

std::string DisjClause::text() const {
  std::string s;
  for (size_t i = 0; i < head.size(); ++i) {
    if (i) s += " | ";
    s += Mark(head[i]);
  }
  if (body.empty()) return s + ".";
  if (!head.empty()) s += " ";
  s += ":- ";
  for (size_t i = 0; i < body.size(); ++i) {
    if (i) s += ", ";
    s += Mark(body[i]);
  }
  return s + ".";
}

std::vector<std::string> TransformedProgram::texts() const {
  std::vector<std::string> out;
  out.reserve(clauses.size());
  for (const DisjClause& c : clauses) out.push_back(c.text());
  return out;
}

TransformedProgram TransformIdbStar(const KnowledgeBase& ddb) {
  std::vector<DisjClause> out;
  for (const Clause& r : GroundRules(ddb)) {
    DisjClause d;
    for (const Literal& lit : r.body) PushUnique(&d.head, Neg(lit.atom));
    d.body.push_back(Neg(*r.head));
    out.push_back(std::move(d));
  }
  return Collect(TransformedProgram::Kind::kIdbStar, std::move(out));
}

TransformedProgram TransformIdbBulletBody(const KnowledgeBase& ddb) {
  std::vector<DisjClause> out;
  for (const Clause& r : GroundRules(ddb)) {
    DisjClause d;
    d.head.push_back(Pos(*r.head));
    for (const Literal& lit : r.body) PushUnique(&d.head, Neg(lit.atom));
    out.push_back(std::move(d));
  }
  return Collect(TransformedProgram::Kind::kIdbBulletBody, std::move(out));
}

TransformedProgram TransformIdbBulletHead(const KnowledgeBase& ddb) {
  std::vector<DisjClause> out;
  for (const Clause& r : GroundRules(ddb)) {
    DisjClause d;
    d.body.push_back(Neg(*r.head));
    for (const Literal& lit : r.body) PushUnique(&d.body, Pos(lit.atom));
    out.push_back(std::move(d));
  }
  return Collect(TransformedProgram::Kind::kIdbBulletHead, std::move(out));
}

TransformedProgram TransformIdbPlus(const KnowledgeBase& ddb,
                                    const std::set<std::string>& model) {
  std::vector<DisjClause> out;
  for (const Clause& r : GroundRules(ddb)) {
    DisjClause d;
    const std::string head_text = r.head->text();
    for (const Literal& lit : r.body) {
      if (model.count(lit.atom.text())) {
        PushUnique(&d.head, Neg(lit.atom));
      } else {
        PushUnique(&d.body, Pos(lit.atom));
      }
    }
    if (model.count(head_text)) {
      PushUnique(&d.body, Neg(*r.head));
    } else {
      PushUnique(&d.head, Pos(*r.head));
    }
    out.push_back(std::move(d));
  }
  return Collect(TransformedProgram::Kind::kIdbPlus, std::move(out));
}

TransformedProgram TransformIdbMinus(const KnowledgeBase& ddb,
                                     const std::set<std::string>& model) {
  (void)model;
  TransformedProgram p = TransformIdbBulletBody(ddb);
  p.kind = TransformedProgram::Kind::kIdbMinus;
  return p;
}

}  // namespace hkb
