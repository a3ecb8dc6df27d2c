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

#include "lang.h"

#include <algorithm>
#include <map>

namespace hkb {

bool Atom::ground() const {
  return std::none_of(args.begin(), args.end(),
                      [](const Term& t) { return t.var; });
}

std::string Atom::text() const {
  std::string out = pred;
  if (!args.empty()) {
    out += "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i].name;
    }
    out += ")";
  }
  return out;
}

std::string Literal::text() const {
  if (is_guard()) return atom.args[0].name + " != " + atom.args[1].name;
  return neg ? "not " + atom.text() : atom.text();
}

bool Clause::ground() const {
  if (head && !head->ground()) return false;
  return std::all_of(body.begin(), body.end(),
                     [](const Literal& l) { return l.atom.ground(); });
}

std::string Clause::text() const {
  std::string out;
  if (head) out += head->text();
  if (!body.empty()) {
    out += head ? " :- " : ":- ";
    for (size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += body[i].text();
    }
  }
  out += ".";
  return out;
}

bool KnowledgeBase::has_fact(const Atom& a) const {
  return std::binary_search(facts.begin(), facts.end(), a);
}

void KnowledgeBase::add_fact(const Atom& a) {
  auto it = std::lower_bound(facts.begin(), facts.end(), a);
  if (it == facts.end() || *it != a) facts.insert(it, a);
}

void KnowledgeBase::remove_fact(const Atom& a) {
  auto it = std::lower_bound(facts.begin(), facts.end(), a);
  if (it != facts.end() && *it == a) facts.erase(it);
}

void KnowledgeBase::normalize() {
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
  std::sort(abducibles.begin(), abducibles.end());
  abducibles.erase(std::unique(abducibles.begin(), abducibles.end()),
                   abducibles.end());
}

std::set<std::string> KnowledgeBase::view_preds() const {
  std::set<std::string> out;
  for (const auto& r : rules)
    if (r.head) out.insert(r.head->pred);
  return out;
}

std::set<std::pair<std::string, int>> KnowledgeBase::predicates() const {
  std::map<std::string, int> arity;
  auto note = [&arity](const Atom& a) {
    if (a.pred == kNeqPred) return;
    auto [it, fresh] = arity.emplace(a.pred, (int)a.args.size());
    if (!fresh && it->second != (int)a.args.size())
      throw InputError("arity conflict for predicate " + a.pred);
  };
  for (const auto& r : rules) {
    if (r.head) note(*r.head);
    for (const auto& l : r.body) note(l.atom);
  }
  for (const auto& f : facts) note(f);
  for (const auto& c : constraints)
    for (const auto& l : c.body) note(l.atom);
  std::set<std::pair<std::string, int>> out;
  for (const auto& [p, n] : arity) out.emplace(p, n);
  return out;
}

std::set<std::string> KnowledgeBase::abducible_preds() const {
  if (!abducibles.empty())
    return std::set<std::string>(abducibles.begin(), abducibles.end());
  std::set<std::string> views = view_preds();
  std::set<std::string> out;
  for (const auto& f : facts) out.insert(f.pred);
  for (const auto& [p, n] : predicates())
    if (!views.count(p)) out.insert(p);
  return out;
}

std::string RenderModel(const std::set<std::string>& atoms) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : atoms) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + "}";
}

}  // namespace hkb
