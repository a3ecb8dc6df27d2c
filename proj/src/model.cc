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

#include "model.h"

#include <algorithm>
#include <map>

namespace hkb {
namespace {

struct EvalRule {
  std::string head;
  std::vector<std::string> pos;
  std::vector<std::string> neg;
};

// Ground rules grouped by stratum of their head predicate.
struct EvalProg {
  std::vector<std::vector<EvalRule>> levels;
  std::vector<EvalRule> denials;
};

int LevelOf(const Stratification& s, const std::string& pred) {
  auto it = s.level.find(pred);
  return it == s.level.end() ? 0 : it->second;
}

EvalRule ToEvalRule(const Clause& c) {
  EvalRule r;
  if (c.head) r.head = c.head->text();
  for (const Literal& l : c.body) {
    if (l.is_guard()) throw Error("internal", "guard survived grounding");
    (l.neg ? r.neg : r.pos).push_back(l.atom.text());
  }
  return r;
}

EvalProg BuildEvalProg(const KnowledgeBase& grounded,
                       const Stratification& strat) {
  EvalProg p;
  p.levels.resize(static_cast<size_t>(strat.max_level) + 1);
  for (const Clause& c : grounded.rules) {
    if (!c.head) continue;
    p.levels[static_cast<size_t>(LevelOf(strat, c.head->pred))].push_back(
        ToEvalRule(c));
  }
  for (const Clause& c : grounded.constraints) p.denials.push_back(ToEvalRule(c));
  return p;
}

bool RuleFires(const EvalRule& r, const std::set<std::string>& model) {
  for (const std::string& a : r.pos)
    if (!model.count(a)) return false;
  for (const std::string& a : r.neg)
    if (model.count(a)) return false;
  return true;
}

// Semi-naive stratum evaluation: after the first full pass only rules with a
// positive body atom among the newly derived ones are reconsidered.
void RunLevel(const std::vector<EvalRule>& rules,
              std::set<std::string>& model) {
  std::map<std::string, std::vector<size_t>> by_pos;
  for (size_t i = 0; i < rules.size(); ++i)
    for (const std::string& a : rules[i].pos) by_pos[a].push_back(i);

  std::set<std::string> delta;
  for (const EvalRule& r : rules)
    if (RuleFires(r, model) && model.insert(r.head).second)
      delta.insert(r.head);

  while (!delta.empty()) {
    std::set<size_t> touched;
    for (const std::string& a : delta) {
      auto it = by_pos.find(a);
      if (it == by_pos.end()) continue;
      touched.insert(it->second.begin(), it->second.end());
    }
    delta.clear();
    for (size_t i : touched) {
      const EvalRule& r = rules[i];
      if (RuleFires(r, model) && model.insert(r.head).second)
        delta.insert(r.head);
    }
  }
}

std::set<std::string> RunProg(const EvalProg& p,
                              const std::set<std::string>& facts) {
  std::set<std::string> model = facts;
  for (const auto& lvl : p.levels) RunLevel(lvl, model);
  return model;
}

std::set<std::string> FactAtoms(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const Atom& a : kb.facts) out.insert(a.text());
  return out;
}

// Grounds kb and keeps the stratification alongside.
struct GroundedKb {
  KnowledgeBase kb;
  Stratification strat;
};

GroundedKb Prepare(const KnowledgeBase& kb) {
  GroundedKb g{Ground(kb), Stratify(kb)};
  return g;
}

}  // namespace

std::set<std::string> LeastModel(const KnowledgeBase& kb) {
  GroundedKb g = Prepare(kb);
  EvalProg p = BuildEvalProg(g.kb, g.strat);
  return RunProg(p, FactAtoms(g.kb));
}

std::set<std::string> NaiveModel(const KnowledgeBase& kb) {
  GroundedKb g = Prepare(kb);
  std::set<std::string> model = FactAtoms(g.kb);
  for (int lvl = 0; lvl <= g.strat.max_level; ++lvl) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : g.kb.rules) {
        if (!c.head || LevelOf(g.strat, c.head->pred) != lvl) continue;
        if (!BodySatisfied(c, model)) continue;
        if (model.insert(c.head->text()).second) changed = true;
      }
    }
  }
  return model;
}

bool Entails(const KnowledgeBase& kb, const Atom& goal) {
  if (!goal.ground()) throw InputError("entailment goal must be ground");
  return LeastModel(kb).count(goal.text()) > 0;
}

bool BodySatisfied(const Clause& c, const std::set<std::string>& model) {
  for (const Literal& l : c.body) {
    if (l.is_guard()) throw Error("internal", "guard in evaluated clause");
    bool holds = model.count(l.atom.text()) > 0;
    if (l.neg ? holds : !holds) return false;
  }
  return true;
}

std::vector<Violation> ViolatedConstraints(const KnowledgeBase& kb,
                                           const std::optional<Atom>& request) {
  KnowledgeBase work = kb;
  if (request) {
    if (!request->ground()) throw InputError("request atom must be ground");
    work.add_fact(*request);
  }
  GroundedKb g = Prepare(work);
  EvalProg p = BuildEvalProg(g.kb, g.strat);
  std::set<std::string> model = RunProg(p, FactAtoms(g.kb));

  std::vector<Violation> out;
  // Map each ground constraint instance back to the constraint it came from.
  for (const Clause& orig : kb.constraints) {
    KnowledgeBase one;
    one.mode = kb.mode;
    one.rules = kb.rules;
    one.facts = work.facts;
    one.constraints = {orig};
    KnowledgeBase gone = Ground(one);
    for (const Clause& inst : gone.constraints) {
      if (BodySatisfied(inst, model)) {
        out.push_back(Violation{orig, inst});
        break;
      }
    }
  }
  return out;
}

bool SatisfiesConstraints(const KnowledgeBase& kb) {
  return ViolatedConstraints(kb).empty();
}

bool Derives(const KnowledgeBase& kb, const Clause& alpha) {
  if (!alpha.ground()) throw InputError("derivability goal must be ground");
  GroundedKb g = Prepare(kb);
  EvalProg p = BuildEvalProg(g.kb, g.strat);

  auto explosive = [&](const std::set<std::string>& model) {
    for (const EvalRule& d : p.denials) {
      bool sat = true;
      for (const std::string& a : d.pos)
        if (!model.count(a)) { sat = false; break; }
      if (sat)
        for (const std::string& a : d.neg)
          if (model.count(a)) { sat = false; break; }
      if (sat) return true;
    }
    return false;
  };

  std::set<std::string> base = FactAtoms(g.kb);
  if (alpha.is_fact()) {
    std::set<std::string> model = RunProg(p, base);
    return explosive(model) || model.count(alpha.head->text()) > 0;
  }
  // Assert the positive body and evaluate.
  std::set<std::string> facts = base;
  for (const Literal& l : alpha.body)
    if (!l.neg && !l.is_guard()) facts.insert(l.atom.text());
  std::set<std::string> model = RunProg(p, facts);
  if (alpha.is_constraint()) return explosive(model);
  for (const Literal& l : alpha.body)
    if (l.neg && model.count(l.atom.text()))
      return explosive(RunProg(p, base));
  return explosive(model) || model.count(alpha.head->text()) > 0;
}

bool RequestHolds(const KnowledgeBase& kb, const Clause& alpha) {
  if (alpha.is_fact()) return Entails(kb, *alpha.head);
  if (!alpha.is_constraint())
    throw InputError("request must be a fact or a denial");
  KnowledgeBase work = kb;
  work.constraints = {alpha};
  return ViolatedConstraints(work).empty();
}

bool ConsistentWithKb(const KnowledgeBase& kb, const Clause& alpha) {
  KnowledgeBase work = kb;
  if (alpha.is_fact()) {
    work.add_fact(*alpha.head);
  } else if (alpha.is_constraint()) {
    work.constraints.push_back(alpha);
  } else {
    work.rules.push_back(alpha);
  }
  return ViolatedConstraints(work).empty();
}

bool ConsistentWithBackground(const KnowledgeBase& kb, const Clause& alpha) {
  KnowledgeBase bg = kb;
  bg.facts.clear();
  return ConsistentWithKb(bg, alpha);
}

bool KbEquivalent(const KnowledgeBase& kb, const Clause& alpha,
                  const Clause& beta) {
  if (!alpha.ground() || !beta.ground())
    throw InputError("equivalence requests must be ground");

  // Collect the language: kb constants and predicates plus those of the two
  // requests, then enumerate every set of ground facts over it.
  KnowledgeBase scratch;
  scratch.mode = kb.mode;
  scratch.rules = kb.rules;
  scratch.constraints = kb.constraints;
  auto absorb = [&scratch](const Clause& c) {
    if (c.head) scratch.add_fact(*c.head);
    for (const Literal& l : c.body)
      if (!l.is_guard()) scratch.add_fact(l.atom);
  };
  absorb(alpha);
  absorb(beta);
  for (const Atom& a : kb.facts) scratch.add_fact(a);

  std::vector<Atom> hb = HerbrandBase(scratch);
  if (static_cast<int>(hb.size()) > kKbEquivalenceBound)
    throw BoundError("herbrand base too large for equivalence check (" +
                     std::to_string(hb.size()) + " atoms, bound " +
                     std::to_string(kKbEquivalenceBound) + ")");

  KnowledgeBase g = Ground(scratch);
  Stratification strat = Stratify(scratch);
  EvalProg prog = BuildEvalProg(g, strat);

  auto explosive = [&prog](const std::set<std::string>& model) {
    for (const EvalRule& d : prog.denials) {
      bool sat = true;
      for (const std::string& a : d.pos)
        if (!model.count(a)) { sat = false; break; }
      if (sat)
        for (const std::string& a : d.neg)
          if (model.count(a)) { sat = false; break; }
      if (sat) return true;
    }
    return false;
  };

  auto derives = [&](const std::set<std::string>& base, const Clause& c) {
    if (c.is_fact()) {
      std::set<std::string> m = RunProg(prog, base);
      return explosive(m) || m.count(c.head->text()) > 0;
    }
    std::set<std::string> facts = base;
    for (const Literal& l : c.body)
      if (!l.neg && !l.is_guard()) facts.insert(l.atom.text());
    std::set<std::string> m = RunProg(prog, facts);
    if (c.is_constraint()) return explosive(m);
    return explosive(m) || m.count(c.head->text()) > 0;
  };

  const size_t n = hb.size();
  for (size_t bits = 0; bits < (size_t{1} << n); ++bits) {
    std::set<std::string> e;
    for (size_t i = 0; i < n; ++i)
      if (bits & (size_t{1} << i)) e.insert(hb[i].text());
    if (derives(e, alpha) != derives(e, beta)) return false;
  }
  return true;
}

}  // namespace hkb
