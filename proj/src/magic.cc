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

#include "magic.h"

#include <algorithm>
#include <map>
#include <set>

#include "ground.h"

namespace hkb {
namespace {

void CollectVars(const Atom& a, std::vector<std::string>* out) {
  for (const Term& t : a.args) {
    if (t.var && std::find(out->begin(), out->end(), t.name) == out->end()) {
      out->push_back(t.name);
    }
  }
}

std::vector<std::string> BodyVars(const std::vector<Literal>& body) {
  std::vector<std::string> vars;
  for (const Literal& lit : body) CollectVars(lit.atom, &vars);
  return vars;
}

Atom Substitute(const Atom& a, const std::map<std::string, std::string>& sub) {
  Atom out = a;
  for (Term& t : out.args) {
    if (!t.var) continue;
    auto it = sub.find(t.name);
    if (it != sub.end()) t = Const(it->second);
  }
  return out;
}

}  // namespace

KnowledgeBase NormalizeBodies(const KnowledgeBase& ddb) {
  KnowledgeBase out = ddb;
  out.rules.clear();
  int counter = 0;
  for (const Clause& r : ddb.rules) {
    std::vector<Literal> lits, guards;
    for (const Literal& lit : r.body) {
      (lit.is_guard() ? guards : lits).push_back(lit);
    }
    if (lits.size() <= 2) {
      out.rules.push_back(r);
      continue;
    }
    Clause top;
    top.head = r.head;
    top.body.push_back(lits.front());
    std::vector<Literal> rest(lits.begin() + 1, lits.end());
    while (rest.size() > 2) {
      std::vector<std::string> vars = BodyVars(rest);
      Atom aux{"aux" + std::to_string(++counter), {}};
      for (const std::string& v : vars) aux.args.push_back(Var(v));
      top.body.push_back(Literal{aux, false});
      for (const Literal& g : guards) top.body.push_back(g);
      guards.clear();
      out.rules.push_back(top);
      top = Clause{};
      top.head = aux;
      top.body.push_back(rest.front());
      rest.erase(rest.begin());
    }
    for (const Literal& lit : rest) top.body.push_back(lit);
    for (const Literal& g : guards) top.body.push_back(g);
    out.rules.push_back(top);
  }
  return out;
}

VuRuleSet MagicVu(const KnowledgeBase& ddb, const Atom& request, bool insert) {
  KnowledgeBase norm = NormalizeBodies(ddb);
  std::vector<std::string> constants = Constants(norm);
  VuRuleSet out;
  out.seeds.push_back((insert ? "+" : "-") + request.text());

  for (const Clause& r : norm.rules) {
    if (r.is_fact()) continue;
    std::vector<Literal> lits;
    for (const Literal& lit : r.body) {
      if (!lit.is_guard()) lits.push_back(lit);
    }
    std::vector<std::string> head_vars;
    CollectVars(*r.head, &head_vars);
    const std::string h = r.head->text();

    for (const Literal& lit : lits) {
      if (lit.neg) {
        out.rules.push_back("+" + h + " & " + lit.atom.text() + " -> -" +
                            lit.atom.text());
        continue;
      }
      std::vector<std::string> lit_vars;
      CollectVars(lit.atom, &lit_vars);
      std::vector<std::string> proj;
      for (const std::string& v : lit_vars) {
        if (std::find(head_vars.begin(), head_vars.end(), v) == head_vars.end()) {
          proj.push_back(v);
        }
      }
      if (proj.empty()) {
        out.rules.push_back("+" + h + " & ~" + lit.atom.text() + " -> +" +
                            lit.atom.text());
        continue;
      }
      // Projection: the missing argument may be any known constant or a
      // fresh one.
      out.non_ground = true;
      std::vector<std::map<std::string, std::string>> subs;
      subs.push_back({});
      for (size_t pi = 0; pi < proj.size(); ++pi) {
        const std::string& v = proj[pi];
        std::vector<std::map<std::string, std::string>> next;
        std::vector<std::string> choices = constants;
        choices.push_back("@new" + std::to_string(pi + 1));
        for (const auto& base : subs) {
          for (const std::string& c : choices) {
            auto s = base;
            s[v] = c;
            next.push_back(std::move(s));
          }
        }
        subs = std::move(next);
      }
      std::string rhs;
      for (size_t i = 0; i < subs.size(); ++i) {
        if (i) rhs += " | ";
        rhs += "+" + Substitute(lit.atom, subs[i]).text();
      }
      out.rules.push_back("+" + h + " -> " + rhs);
    }

    std::string options;
    for (size_t i = 0; i < lits.size(); ++i) {
      if (i) options += " | ";
      options += lits[i].neg ? "+" + lits[i].atom.text()
                             : "-" + lits[i].atom.text();
    }
    out.rules.push_back("-" + h + " -> " + options);
  }
  return out;
}

}  // namespace hkb
