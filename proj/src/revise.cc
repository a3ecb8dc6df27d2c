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

#include "revise.h"

#include <algorithm>

#include "abduce.h"
#include "ground.h"
#include "model.h"
#include "parser.h"

namespace hkb {
namespace {

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

std::string RenderBody(const Clause& c) {
  std::string out;
  for (const Literal& l : c.body) {
    if (!out.empty()) out += ", ";
    out += l.text();
  }
  return out;
}

std::set<std::string> FactTexts(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const Atom& a : kb.facts) out.insert(a.text());
  return out;
}

KnowledgeBase ApplyDelta(const KnowledgeBase& kb,
                         const std::set<std::string>& add,
                         const std::set<std::string>& remove) {
  KnowledgeBase out = kb;
  for (const std::string& r : remove) out.remove_fact(ParseGroundAtom(r));
  for (const std::string& a : add) out.add_fact(ParseGroundAtom(a));
  return out;
}

// Drops satisfied ground guards; a false guard makes the body unsatisfiable.
bool ResolveGuards(Clause& c) {
  std::vector<Literal> body;
  for (const Literal& l : c.body) {
    if (!l.is_guard()) {
      body.push_back(l);
      continue;
    }
    if (l.atom.args[0] == l.atom.args[1]) return false;
  }
  c.body = std::move(body);
  return true;
}

struct Candidate {
  std::set<std::string> add;     // admitted support (protected from removal)
  std::set<std::string> remove;  // repairs
};

// Iteratively repairs constraint violations by deleting unprotected facts,
// deleting support of derived body atoms, or satisfying negated body atoms.
// Appends every terminal candidate to `out`; abandons branches whose
// violation count stops shrinking or that exceed the branch cap.
struct Repairer {
  const KnowledgeBase& kb;
  const ReviseOptions& opts;
  int branches = 0;
  std::vector<Candidate> out;
  std::vector<std::string> notes;

  void Run(Candidate cand, size_t prev_violations) {
    if (++branches > opts.branch_cap) {
      notes.push_back("branch cap reached; remaining repairs unexplored");
      return;
    }
    KnowledgeBase state = ApplyDelta(kb, cand.add, cand.remove);
    std::vector<Violation> violations = ViolatedConstraints(state);
    if (violations.empty()) {
      out.push_back(std::move(cand));
      return;
    }
    if (violations.size() >= prev_violations) {
      notes.push_back("repair did not shrink the violation set; abandoned");
      return;
    }
    ExpandFixes(state, violations, cand, violations.size());
  }

  void Start(Candidate cand) {
    if (++branches > opts.branch_cap) return;
    KnowledgeBase state = ApplyDelta(kb, cand.add, cand.remove);
    std::vector<Violation> violations = ViolatedConstraints(state);
    if (violations.empty()) {
      out.push_back(std::move(cand));
      return;
    }
    ExpandFixes(state, violations, cand, violations.size() + 1);
  }

  void ExpandFixes(const KnowledgeBase& state,
                   const std::vector<Violation>& violations,
                   const Candidate& cand, size_t measure) {
    const Violation& v = violations.front();
    std::set<std::string> state_facts = FactTexts(state);
    bool any_fix = false;
    for (const Literal& l : v.witness.body) {
      if (l.is_guard()) continue;
      const std::string text = l.atom.text();
      if (!l.neg) {
        if (cand.add.count(text)) continue;  // protected support
        if (state_facts.count(text)) {
          Candidate next = cand;
          next.remove.insert(text);
          next.add.erase(text);
          Run(std::move(next), measure);
          any_fix = true;
          continue;
        }
        // Derived atom: cut each minimal support of it.
        try {
          ExplanationFamily fam = LocallyMinimalExplanations(
              state, l.atom, UpdateDirection::kDelete, IcOrder::kCheckLast,
              opts.depth_limit);
          for (const ExplanationSet& e : fam.members) {
            bool touches_protected = false;
            for (const std::string& r : e.remove)
              if (cand.add.count(r)) { touches_protected = true; break; }
            if (touches_protected || e.remove.empty()) continue;
            Candidate next = cand;
            next.remove.insert(e.remove.begin(), e.remove.end());
            Run(std::move(next), measure);
            any_fix = true;
          }
        } catch (const Error&) {
        }
      } else {
        if (state_facts.count(text) || cand.remove.count(text)) continue;
        try {
          ExplanationFamily fam = LocallyMinimalExplanations(
              state, l.atom, UpdateDirection::kInsert, IcOrder::kCheckFirst,
              opts.depth_limit);
          for (const ExplanationSet& e : fam.members) {
            bool touches_removed = false;
            for (const std::string& a : e.add)
              if (cand.remove.count(a)) { touches_removed = true; break; }
            if (touches_removed) continue;
            Candidate next = cand;
            next.add.insert(e.add.begin(), e.add.end());
            Run(std::move(next), measure);
            any_fix = true;
          }
        } catch (const Error&) {
        }
      }
    }
    if (!any_fix)
      notes.push_back("constraint " + v.constraint.text() +
                      " has no repairable literal; abandoned");
  }
};

long NetCost(const RevisionOutcome& o, const std::set<std::string>& before) {
  long c = static_cast<long>(o.deleted.size());
  for (const std::string& a : o.inserted)
    if (!before.count(a)) ++c;
  return c;
}

}  // namespace

KnowledgeBase UnionWith(const KnowledgeBase& kb, const Clause& alpha) {
  KnowledgeBase out = kb;
  if (alpha.is_fact()) {
    if (kb.mode == Mode::kDdb && kb.view_preds().count(alpha.head->pred))
      return out;  // a view atom cannot become a base fact
    out.add_fact(*alpha.head);
    return out;
  }
  if (alpha.is_constraint()) {
    if (std::find(out.constraints.begin(), out.constraints.end(), alpha) ==
        out.constraints.end())
      out.constraints.push_back(alpha);
    return out;
  }
  if (std::find(out.rules.begin(), out.rules.end(), alpha) == out.rules.end())
    out.rules.push_back(alpha);
  return out;
}

std::vector<RevisionOutcome> AllMinimalRevisions(const KnowledgeBase& kb,
                                                 const Clause& alpha,
                                                 const ReviseOptions& opts) {
  if (!alpha.ground()) throw InputError("revision request must be ground");
  Clause req = alpha;
  bool guard_false = !ResolveGuards(req);

  std::vector<std::string> trace;
  auto flat = [&trace](const KnowledgeBase& k, const std::string& label) {
    std::string line = label + ":";
    for (const Clause& c : k.rules) line += " " + c.text();
    for (const Atom& a : k.facts) line += " " + a.text() + ".";
    for (const Clause& c : k.constraints) line += " " + c.text();
    trace.push_back(line);
  };
  flat(kb, "(0) clauses");

  // A denial with a false guard in its body always holds.
  if (guard_false && req.is_constraint()) {
    RevisionOutcome o;
    o.kb_after = UnionWith(kb, alpha);
    o.vacuous = true;
    trace.push_back("request already holds; nothing to change");
    o.trace = trace;
    return {o};
  }

  if (!ConsistentWithBackground(kb, req)) {
    RevisionOutcome o;
    o.kb_after = kb;
    o.unsatisfiable = true;
    trace.push_back("request clashes with the rules and constraints; "
                    "knowledge base unchanged");
    o.trace = trace;
    return {o};
  }

  if (RequestHolds(kb, req) && SatisfiesConstraints(kb)) {
    RevisionOutcome o;
    o.kb_after = UnionWith(kb, req);
    o.vacuous = true;
    trace.push_back("request already holds consistently; adopted as is");
    flat(o.kb_after, "(3) clauses");
    o.trace = trace;
    return {o};
  }

  std::set<std::string> before = FactTexts(kb);
  Repairer rep{kb, opts, 0, {}, {}};

  if (req.is_fact()) {
    const Atom& goal = *req.head;
    // Raw support family, constraint violators included, for the V line and
    // for repairable candidates.
    std::vector<std::set<std::string>> supports =
        SupportFamily(kb, goal, opts.depth_limit);
    SldTree tree = BuildSldTree(kb, goal, opts.depth_limit, IcOrder::kCheckLast);

    std::set<std::string> v_line;
    for (const auto& sup : supports) {
      KnowledgeBase state = ApplyDelta(kb, sup, {});
      for (const Violation& viol : ViolatedConstraints(state))
        v_line.insert(RenderBody(viol.witness));
    }
    trace.push_back("(1) V = " + RenderSet(v_line));

    std::set<std::string> p_line, n_line;
    for (const std::string& atom : tree.subgoal_atoms) {
      Clause f;
      f.head = ParseGroundAtom(atom);
      if (ConsistentWithBackground(kb, f)) p_line.insert(atom);
      if (before.count(atom)) n_line.insert(atom);
    }
    trace.push_back("(2) P = " + RenderSet(p_line));
    trace.push_back("    N = " + RenderSet(n_line));

    for (const auto& sup : supports) {
      // A support whose own closure under the rules breaks a constraint can
      // never be repaired: its facts are all protected.
      KnowledgeBase core = kb;
      core.facts.clear();
      for (const std::string& s : sup) core.add_fact(ParseGroundAtom(s));
      if (!ViolatedConstraints(core).empty()) continue;
      Candidate cand;
      cand.add = sup;
      rep.Start(std::move(cand));
    }
  } else {
    // Denial: falsify one literal of its (single, ground) body instance.
    for (const Literal& l : req.body) {
      const std::string text = l.atom.text();
      if (!l.neg) {
        if (!Entails(kb, l.atom)) continue;
        try {
          ExplanationFamily fam = LocallyMinimalExplanations(
              kb, l.atom, UpdateDirection::kDelete, IcOrder::kCheckLast,
              opts.depth_limit);
          for (const ExplanationSet& e : fam.members) {
            Candidate cand;
            cand.remove = e.remove;
            rep.Start(std::move(cand));
          }
        } catch (const Error&) {
        }
      } else {
        if (Entails(kb, l.atom)) continue;
        try {
          ExplanationFamily fam = LocallyMinimalExplanations(
              kb, l.atom, UpdateDirection::kInsert, IcOrder::kCheckFirst,
              opts.depth_limit);
          for (const ExplanationSet& e : fam.members) {
            Candidate cand;
            cand.add = e.add;
            rep.Start(std::move(cand));
          }
        } catch (const Error&) {
        }
      }
    }
    trace.push_back("(1) V = {" + RenderBody(req) + "}");
    trace.push_back("(2) P/N from the per-literal update searches");
  }

  // Assemble outcomes: request must hold and no constraint may fire.
  std::vector<RevisionOutcome> outcomes;
  std::vector<std::string> cand_lines;
  for (const Candidate& cand : rep.out) {
    RevisionOutcome o;
    o.kb_after = ApplyDelta(kb, cand.add, cand.remove);
    if (req.is_constraint()) {
      KnowledgeBase with = o.kb_after;
      with.constraints.push_back(req);
      if (!ViolatedConstraints(with).empty()) continue;
      o.kb_after = UnionWith(o.kb_after, req);
    } else {
      if (!Entails(o.kb_after, *req.head)) continue;
      if (!ViolatedConstraints(o.kb_after).empty()) continue;
    }
    o.inserted = cand.add;
    o.deleted = cand.remove;
    bool dup = false;
    for (const RevisionOutcome& seen : outcomes)
      if (seen.inserted == o.inserted && seen.deleted == o.deleted) dup = true;
    if (dup) continue;
    cand_lines.push_back("(2.1) candidate Δ+ = " + RenderSet(o.inserted) +
                         ", Δ- = " + RenderSet(o.deleted));
    outcomes.push_back(std::move(o));
  }

  // Drop dominated outcomes (another outcome changes strictly less).
  auto net = [&before](const RevisionOutcome& o) {
    std::set<std::string> n;
    for (const std::string& a : o.inserted)
      if (!before.count(a)) n.insert(a);
    return n;
  };
  std::vector<RevisionOutcome> kept;
  for (const RevisionOutcome& o : outcomes) {
    bool dominated = false;
    for (const RevisionOutcome& other : outcomes) {
      if (&other == &o) continue;
      std::set<std::string> no = net(o), nother = net(other);
      bool sub = std::includes(no.begin(), no.end(), nother.begin(),
                               nother.end()) &&
                 std::includes(o.deleted.begin(), o.deleted.end(),
                               other.deleted.begin(), other.deleted.end());
      bool strict = nother != no || other.deleted != o.deleted;
      if (sub && strict) { dominated = true; break; }
    }
    if (!dominated) kept.push_back(o);
  }

  if (kept.empty())
    throw NoSolutionError("no consistent revision for " + alpha.text());

  std::sort(kept.begin(), kept.end(),
            [&before](const RevisionOutcome& a, const RevisionOutcome& b) {
              long ca = NetCost(a, before), cb = NetCost(b, before);
              if (ca != cb) return ca < cb;
              if (a.inserted != b.inserted) return a.inserted < b.inserted;
              return a.deleted < b.deleted;
            });

  for (auto& o : kept) {
    o.trace = trace;
    for (const std::string& line : cand_lines) o.trace.push_back(line);
    o.trace.push_back("(2.2) chosen Δ+ = " + RenderSet(o.inserted) +
                      ", Δ- = " + RenderSet(o.deleted));
    std::string flat_line = "(3) clauses:";
    for (const Clause& c : o.kb_after.rules) flat_line += " " + c.text();
    for (const Atom& a : o.kb_after.facts) flat_line += " " + a.text() + ".";
    for (const Clause& c : o.kb_after.constraints) flat_line += " " + c.text();
    o.trace.push_back(flat_line);
    o.trace.push_back("Output KB_U*: " + RenderSet(FactTexts(o.kb_after)));
    for (const std::string& n : rep.notes) o.trace.push_back("note: " + n);
  }
  return kept;
}

RevisionOutcome GeneralizedRevision(const KnowledgeBase& kb, const Clause& alpha,
                                    const ReviseOptions& opts) {
  std::vector<RevisionOutcome> all = AllMinimalRevisions(kb, alpha, opts);
  return all.front();
}

}  // namespace hkb
