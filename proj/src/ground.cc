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

#include "ground.h"

#include <algorithm>
#include <functional>
#include <set>

namespace hkb {
namespace {

void CollectConstants(const Atom& a, std::set<std::string>& out) {
  for (const auto& t : a.args)
    if (!t.var) out.insert(t.name);
}

void CollectVars(const Atom& a, std::vector<std::string>& out) {
  for (const auto& t : a.args)
    if (t.var && std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
}

Atom Substitute(const Atom& a, const std::map<std::string, std::string>& sub) {
  Atom out = a;
  for (auto& t : out.args) {
    if (!t.var) continue;
    auto it = sub.find(t.name);
    if (it != sub.end()) t = Const(it->second);
  }
  return out;
}

}  // namespace

std::vector<std::string> Constants(const KnowledgeBase& kb) {
  std::set<std::string> cs;
  for (const auto& r : kb.rules) {
    if (r.head) CollectConstants(*r.head, cs);
    for (const auto& l : r.body) CollectConstants(l.atom, cs);
  }
  for (const auto& f : kb.facts) CollectConstants(f, cs);
  for (const auto& c : kb.constraints)
    for (const auto& l : c.body) CollectConstants(l.atom, cs);
  return {cs.begin(), cs.end()};
}

std::vector<std::string> HerbrandUniverse(const KnowledgeBase& kb) {
  std::vector<std::string> u = Constants(kb);
  if (u.empty()) u.push_back("u0");
  return u;
}

std::vector<Atom> HerbrandBase(const KnowledgeBase& kb) {
  std::vector<std::string> u = HerbrandUniverse(kb);
  std::vector<Atom> out;
  for (const auto& [pred, arity] : kb.predicates()) {
    std::vector<Atom> batch;
    std::vector<std::string> tuple(arity);
    std::function<void(int)> rec = [&](int i) {
      if (i == arity) {
        Atom a{pred, {}};
        for (const auto& c : tuple) a.args.push_back(Const(c));
        batch.push_back(std::move(a));
        return;
      }
      for (const auto& c : u) {
        tuple[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clause> GroundClause(const Clause& c,
                                 const std::vector<std::string>& universe) {
  std::vector<std::string> vars;
  if (c.head) CollectVars(*c.head, vars);
  for (const auto& l : c.body) CollectVars(l.atom, vars);
  if (vars.empty()) {
    // Resolve guards on already-ground clauses too.
    Clause out;
    out.head = c.head;
    for (const auto& l : c.body) {
      if (l.is_guard()) {
        if (l.atom.args[0].name == l.atom.args[1].name) return {};
        continue;
      }
      out.body.push_back(l);
    }
    return {out};
  }

  std::vector<Clause> out;
  std::map<std::string, std::string> sub;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      Clause g;
      if (c.head) g.head = Substitute(*c.head, sub);
      for (const auto& l : c.body) {
        Atom a = Substitute(l.atom, sub);
        if (l.is_guard()) {
          if (a.args[0].name == a.args[1].name) return;  // guard failed
          continue;
        }
        g.body.push_back(Literal{std::move(a), l.neg});
      }
      out.push_back(std::move(g));
      return;
    }
    for (const auto& cst : universe) {
      sub[vars[i]] = cst;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

KnowledgeBase Ground(const KnowledgeBase& kb) {
  std::vector<std::string> u = HerbrandUniverse(kb);
  KnowledgeBase out = kb;
  out.rules.clear();
  out.constraints.clear();
  std::set<Clause> seen_rules, seen_cons;
  for (const auto& r : kb.rules)
    for (auto& g : GroundClause(r, u))
      if (seen_rules.insert(g).second) out.rules.push_back(std::move(g));
  for (const auto& c : kb.constraints)
    for (auto& g : GroundClause(c, u))
      if (seen_cons.insert(g).second) out.constraints.push_back(std::move(g));
  return out;
}

Stratification Stratify(const KnowledgeBase& kb) {
  // Predicate dependency graph: head -> body predicate, marked negative when
  // the body literal is negated.
  std::set<std::string> preds;
  for (const auto& [p, n] : kb.predicates()) preds.insert(p);
  struct Edge {
    std::string from, to;
    bool neg;
  };
  std::vector<Edge> edges;
  for (const auto& r : kb.rules) {
    if (!r.head) continue;
    for (const auto& l : r.body) {
      if (l.is_guard()) continue;
      edges.push_back({r.head->pred, l.atom.pred, l.neg});
    }
  }

  // Tarjan SCC over the predicate graph.
  std::map<std::string, std::vector<std::pair<std::string, bool>>> adj;
  for (const auto& e : edges) adj[e.from].push_back({e.to, e.neg});
  std::map<std::string, int> index, low, comp;
  std::vector<std::string> stack;
  std::set<std::string> on_stack;
  int next_index = 0, next_comp = 0;
  std::function<void(const std::string&)> strongconnect =
      [&](const std::string& v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto& [w, neg] : adj[v]) {
          if (!index.count(w)) {
            strongconnect(w);
            low[v] = std::min(low[v], low[w]);
          } else if (on_stack.count(w)) {
            low[v] = std::min(low[v], index[w]);
          }
        }
        if (low[v] == index[v]) {
          while (true) {
            std::string w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      };
  for (const auto& p : preds)
    if (!index.count(p)) strongconnect(p);

  for (const auto& e : edges) {
    if (e.neg && comp[e.from] == comp[e.to])
      throw Error("not-stratifiable",
                  "negative cycle through default negation involving "
                  "predicate '" + e.from + "' (rule for " + e.from +
                  " negates " + e.to + " in the same recursive component)");
  }

  // Height of each component: 1 + max over cross-component dependencies.
  // Tarjan numbers components in reverse topological order, so dependencies
  // of a component always carry smaller component ids.
  std::vector<int> height(next_comp, 0);
  std::vector<std::vector<int>> cadj(next_comp);
  for (const auto& e : edges)
    if (comp[e.from] != comp[e.to]) cadj[comp[e.from]].push_back(comp[e.to]);
  for (int c = 0; c < next_comp; ++c)
    for (int d : cadj[c]) height[c] = std::max(height[c], height[d] + 1);

  Stratification s;
  for (const auto& p : preds) {
    s.level[p] = height[comp[p]];
    s.max_level = std::max(s.max_level, s.level[p]);
  }
  return s;
}

}  // namespace hkb
