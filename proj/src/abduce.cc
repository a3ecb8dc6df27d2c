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

#include "abduce.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "change.h"
#include "ground.h"
#include "model.h"
#include "parser.h"

namespace hkb {
namespace {

constexpr int kMaxSldNodes = 200000;

std::string RenderGoals(const std::deque<Literal>& goals) {
  std::string out;
  for (const Literal& l : goals) {
    if (!out.empty()) out += ", ";
    out += l.text();
  }
  return out;
}

std::string RenderSet(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& e : s) {
    if (!first) out += ", ";
    out += e;
    first = false;
  }
  return out + "}";
}

struct TreeBuilder {
  const KnowledgeBase& kb;          // original, for constraint checks
  KnowledgeBase grounded;           // rules/constraints ground
  std::set<std::string> facts;      // present fact texts
  std::set<std::string> fact_preds;
  std::set<std::string> rule_head_preds;
  std::set<std::string> abducible;  // predicate names
  std::set<std::string> model;      // for negated subgoals
  int depth_limit;
  IcOrder order;
  SldTree tree;
  int nodes = 0;

  bool AssumptionsViolate(const std::set<std::string>& missing) {
    KnowledgeBase work = kb;
    for (const std::string& m : missing) work.add_fact(ParseGroundAtom(m));
    return !ViolatedConstraints(work).empty();
  }

  void Finish(SldBranch branch, SldBranch::Status status) {
    branch.status = status;
    if (status == SldBranch::Status::kDepthCut) tree.depth_cut_present = true;
    tree.branches.push_back(std::move(branch));
  }

  void Expand(std::deque<Literal> goals, SldBranch branch, int depth) {
    if (++nodes > kMaxSldNodes)
      throw BoundError("sld tree exceeded " + std::to_string(kMaxSldNodes) +
                       " nodes");
    branch.goal_trace.push_back(RenderGoals(goals));
    if (goals.empty()) {
      bool bad = order == IcOrder::kCheckLast && !branch.missing.empty() &&
                 AssumptionsViolate(branch.missing);
      Finish(std::move(branch),
             bad ? SldBranch::Status::kIcPruned : SldBranch::Status::kSuccess);
      return;
    }

    Literal lit = goals.front();
    goals.pop_front();

    if (lit.is_guard()) throw Error("internal", "guard subgoal after grounding");

    if (lit.neg) {
      if (model.count(lit.atom.text())) {
        tree.neg_blocked = true;
        Finish(std::move(branch), SldBranch::Status::kFailure);
        return;
      }
      Expand(std::move(goals), std::move(branch), depth);
      return;
    }

    const std::string text = lit.atom.text();
    const std::string& pred = lit.atom.pred;
    tree.subgoal_atoms.insert(text);

    bool present = facts.count(text) > 0;
    bool expanded = false;

    if (present) {
      SldBranch child = branch;
      child.support.insert(text);
      Clause f;
      f.head = lit.atom;
      child.used.push_back(f);
      Expand(goals, std::move(child), depth);
      expanded = true;
    } else if (abducible.count(pred)) {
      SldBranch child = branch;
      child.support.insert(text);
      child.missing.insert(text);
      if (order == IcOrder::kCheckFirst && AssumptionsViolate(child.missing)) {
        child.goal_trace.push_back(RenderGoals(goals));
        Finish(std::move(child), SldBranch::Status::kIcPruned);
      } else {
        Expand(goals, std::move(child), depth);
      }
      expanded = true;
    }

    if (rule_head_preds.count(pred)) {
      for (const Clause& r : grounded.rules) {
        if (!r.head || r.head->text() != text) continue;
        if (depth + 1 > depth_limit) {
          SldBranch child = branch;
          child.used.push_back(r);
          Finish(std::move(child), SldBranch::Status::kDepthCut);
          expanded = true;
          continue;
        }
        SldBranch child = branch;
        child.used.push_back(r);
        std::deque<Literal> next(r.body.begin(), r.body.end());
        next.insert(next.end(), goals.begin(), goals.end());
        Expand(std::move(next), std::move(child), depth + 1);
        expanded = true;
      }
    }

    if (!expanded) Finish(std::move(branch), SldBranch::Status::kFailure);
  }
};

TreeBuilder MakeBuilder(const KnowledgeBase& kb, const Atom& goal,
                        int depth_limit, IcOrder order) {
  if (!goal.ground()) throw InputError("abduction goal must be ground");
  if (depth_limit <= 0) throw InputError("depth limit must be positive");

  // Ground over the kb constants plus the goal's own.
  KnowledgeBase scratch = kb;
  bool goal_was_fact = scratch.has_fact(goal);
  scratch.add_fact(goal);
  KnowledgeBase grounded = Ground(scratch);
  if (!goal_was_fact) grounded.remove_fact(goal);

  TreeBuilder b{kb, std::move(grounded), {}, {}, {}, {}, {}, depth_limit,
                order, {}, 0};
  for (const Atom& a : kb.facts) {
    b.facts.insert(a.text());
    b.fact_preds.insert(a.pred);
  }
  for (const Clause& c : kb.rules)
    if (c.head) b.rule_head_preds.insert(c.head->pred);
  b.abducible = kb.abducible_preds();
  b.model = LeastModel(kb);
  b.tree.goal = goal;
  return b;
}

}  // namespace

IcOrder ParseIcOrder(const std::string& name) {
  if (name == "first") return IcOrder::kCheckFirst;
  if (name == "last") return IcOrder::kCheckLast;
  throw InputError("unknown ic-order: " + name + " (expected first|last)");
}

SldTree BuildSldTree(const KnowledgeBase& kb, const Atom& goal, int depth_limit,
                     IcOrder order) {
  TreeBuilder b = MakeBuilder(kb, goal, depth_limit, order);
  std::deque<Literal> goals;
  goals.push_back(Literal{goal, false});
  b.Expand(std::move(goals), SldBranch{}, 0);
  b.tree.subgoal_atoms.erase(goal.text());
  SldTree out = std::move(b.tree);
  return out;
}

BranchDeltas Deltas(const SldTree& tree) {
  BranchDeltas d;
  for (const SldBranch& b : tree.branches) {
    if (b.status == SldBranch::Status::kSuccess) {
      if (std::find(d.success.begin(), d.success.end(), b.support) ==
          d.success.end())
        d.success.push_back(b.support);
    } else if (b.status == SldBranch::Status::kFailure ||
               b.status == SldBranch::Status::kDepthCut) {
      if (!b.missing.empty() &&
          std::find(d.failed_missing.begin(), d.failed_missing.end(),
                    b.missing) == d.failed_missing.end())
        d.failed_missing.push_back(b.missing);
    }
  }
  return d;
}

std::set<std::string> DeltasUnion(
    const std::vector<std::set<std::string>>& v) {
  std::set<std::string> u;
  for (const auto& s : v) u.insert(s.begin(), s.end());
  return u;
}

std::vector<std::set<std::string>> SupportFamily(const KnowledgeBase& kb,
                                                 const Atom& goal,
                                                 int depth_limit) {
  SldTree tree = BuildSldTree(kb, goal, depth_limit, IcOrder::kCheckLast);
  std::vector<std::set<std::string>> out;
  for (const SldBranch& b : tree.branches) {
    if (b.status != SldBranch::Status::kSuccess &&
        b.status != SldBranch::Status::kIcPruned)
      continue;
    if (std::find(out.begin(), out.end(), b.support) == out.end())
      out.push_back(b.support);
  }
  return out;
}

namespace {

KnowledgeBase WithFacts(const KnowledgeBase& kb,
                        const std::set<std::string>& add,
                        const std::set<std::string>& remove) {
  KnowledgeBase out = kb;
  for (const std::string& r : remove) out.remove_fact(ParseGroundAtom(r));
  for (const std::string& a : add) out.add_fact(ParseGroundAtom(a));
  return out;
}

// True when the rule subset plus the given facts derive the goal on their own.
bool DerivableFrom(const std::vector<Clause>& rules,
                   const std::set<std::string>& facts, const Atom& goal) {
  KnowledgeBase kb;
  kb.mode = Mode::kKb;
  for (const Clause& c : rules)
    if (!c.is_fact()) kb.rules.push_back(c);
  for (const std::string& f : facts) kb.add_fact(ParseGroundAtom(f));
  return LeastModel(kb).count(goal.text()) > 0;
}

void ForEachProperSubset(const std::set<std::string>& s,
                         const std::function<bool(const std::set<std::string>&)>& f) {
  std::vector<std::string> v(s.begin(), s.end());
  size_t n = v.size();
  for (uint64_t mask = 0; n < 64 && mask + 1 < (uint64_t{1} << n); ++mask) {
    std::set<std::string> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) sub.insert(v[i]);
    if (f(sub)) return;
  }
}

}  // namespace

ExplanationFamily LocallyMinimalExplanations(const KnowledgeBase& kb,
                                             const Atom& goal,
                                             UpdateDirection direction,
                                             IcOrder order, int depth_limit) {
  ExplanationFamily fam;
  fam.goal = goal;
  fam.direction = direction;

  Clause request;
  request.head = goal;
  bool holds = Entails(kb, goal);

  if (direction == UpdateDirection::kInsert && holds) {
    fam.members.push_back(ExplanationSet{});
    return fam;
  }
  if (direction == UpdateDirection::kDelete && !holds) {
    fam.members.push_back(ExplanationSet{});
    return fam;
  }

  bool neg_blocked = false;
  if (direction == UpdateDirection::kInsert) {
    SldTree tree = BuildSldTree(kb, goal, depth_limit, order);
    fam.depth_cut_present = tree.depth_cut_present;
    neg_blocked = tree.neg_blocked;
    for (const SldBranch& b : tree.branches) {
      if (b.status != SldBranch::Status::kSuccess) continue;
      ExplanationSet e;
      e.add = b.support;
      for (const Clause& c : b.used)
        if (!c.is_fact()) e.rules.push_back(c);
      if (std::find(fam.members.begin(), fam.members.end(), e) !=
          fam.members.end())
        continue;

      bool minimal = true;
      ForEachProperSubset(e.add, [&](const std::set<std::string>& sub) {
        if (DerivableFrom(e.rules, sub, goal)) {
          minimal = false;
          return true;
        }
        return false;
      });
      if (!minimal) {
        fam.filtered.push_back(RenderSet(e.add) + ": not locally minimal");
        continue;
      }
      KnowledgeBase after = WithFacts(kb, e.add, {});
      if (!Entails(after, goal)) {
        fam.filtered.push_back(RenderSet(e.add) + ": not closed");
        continue;
      }
      if (!ViolatedConstraints(after).empty()) {
        fam.filtered.push_back(RenderSet(e.add) + ": violates a constraint");
        continue;
      }
      fam.members.push_back(std::move(e));
    }
  } else {
    SldTree tree = BuildSldTree(kb, goal, depth_limit, IcOrder::kCheckLast);
    fam.depth_cut_present = tree.depth_cut_present;
    std::vector<std::set<std::string>> derivations;
    for (const SldBranch& b : tree.branches) {
      if (b.status != SldBranch::Status::kSuccess || !b.missing.empty())
        continue;
      if (std::find(derivations.begin(), derivations.end(), b.support) ==
          derivations.end())
        derivations.push_back(b.support);
    }
    std::vector<std::set<std::string>> hits;
    try {
      hits = MinimalHittingSets(derivations);
    } catch (const Error&) {
      throw NoSolutionError("no explanation: a derivation of " + goal.text() +
                            " uses no removable fact");
    }
    for (const std::set<std::string>& h : hits) {
      ExplanationSet e;
      e.remove = h;
      KnowledgeBase after = WithFacts(kb, {}, h);
      if (Entails(after, goal)) {
        fam.filtered.push_back(RenderSet(h) + ": goal still derivable");
        continue;
      }
      if (!ViolatedConstraints(after).empty()) {
        fam.filtered.push_back(RenderSet(h) + ": violates a constraint");
        continue;
      }
      fam.members.push_back(std::move(e));
    }
  }

  if (fam.members.empty()) {
    std::string what = "no explanation for ";
    what += direction == UpdateDirection::kInsert ? "inserting " : "deleting ";
    what += goal.text();
    if (neg_blocked) {
      what += " (a derivation is blocked by a negated subgoal; the "
              "materialized algorithm can trade removals for it)";
    }
    throw NoSolutionError(what);
  }
  return fam;
}

std::vector<std::set<std::string>> ExplainUpdate(const KnowledgeBase& kb_after,
                                                 const Atom& u) {
  if (!u.ground()) throw InputError("observation must be ground");
  KnowledgeBase scratch = kb_after;
  scratch.add_fact(u);
  std::set<std::string> abducible = kb_after.abducible_preds();

  std::vector<Atom> universe;
  for (const Atom& a : HerbrandBase(scratch))
    if (abducible.count(a.pred)) universe.push_back(a);
  int n = static_cast<int>(universe.size());
  if (n > 16)
    throw BoundError("abducible universe too large for support enumeration (" +
                     std::to_string(n) + " atoms)");

  std::vector<uint32_t> masks(size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });

  KnowledgeBase rules_only = kb_after;
  rules_only.facts.clear();
  rules_only.constraints.clear();

  std::vector<uint32_t> found;
  std::vector<std::set<std::string>> out;
  for (uint32_t mask : masks) {
    bool pruned = false;
    for (uint32_t k : found)
      if ((mask & k) == k) { pruned = true; break; }
    if (pruned) continue;
    KnowledgeBase work = rules_only;
    std::set<std::string> t;
    for (int i = 0; i < n; ++i)
      if (mask & (uint32_t{1} << i)) {
        work.add_fact(universe[static_cast<size_t>(i)]);
        t.insert(universe[static_cast<size_t>(i)].text());
      }
    if (Entails(work, u)) {
      found.push_back(mask);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace hkb
