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

#include "postulates.h"

#include <algorithm>

#include "ground.h"
#include "model.h"
#include "revise.h"

namespace hkb {
namespace {

bool HasClause(const std::vector<Clause>& haystack, const Clause& c) {
  return std::find(haystack.begin(), haystack.end(), c) != haystack.end();
}

KnowledgeBase WithFactSet(const KnowledgeBase& kb, const std::vector<Atom>& facts) {
  KnowledgeBase out = kb;
  out.facts.clear();
  for (const Atom& f : facts) out.add_fact(f);
  return out;
}

// KB_I u KB_IC u {selected facts}, consistency judged together with alpha.
bool SubsetConsistentWith(const KnowledgeBase& kb, const std::vector<Atom>& facts,
                          const Clause& alpha) {
  return ConsistentWithKb(WithFactSet(kb, facts), alpha);
}

PostulateResult Closure(const KnowledgeBase& before, const KnowledgeBase& after) {
  PostulateResult r{"KB*1", "closure", true, false, ""};
  if (after.mode != before.mode) {
    r.pass = false;
    r.witness = "result changed representation mode";
    return r;
  }
  for (const Atom& f : after.facts) {
    if (!f.ground()) {
      r.pass = false;
      r.witness = "non-ground fact " + f.text();
      return r;
    }
  }
  try {
    (void)after.predicates();
  } catch (const Error& e) {
    r.pass = false;
    r.witness = e.what();
    return r;
  }
  r.witness = "result is a well-formed knowledge base";
  return r;
}

PostulateResult WeakSuccess(const Clause& alpha, const KnowledgeBase& after) {
  PostulateResult r{"KB*2", "weak success", RequestHolds(after, alpha), false, ""};
  r.witness = r.pass ? "request holds in the result"
                     : "request does not hold in the result";
  return r;
}

PostulateResult Inclusion(const KnowledgeBase& before, const Clause& alpha,
                          const KnowledgeBase& after) {
  PostulateResult r{"KB*3.1", "inclusion", true, false, ""};
  KnowledgeBase scope = Adopt(before, alpha);
  std::set<std::string> hb;
  for (const Atom& a : HerbrandBase(scope)) hb.insert(a.text());
  std::set<std::string> abducible = scope.abducible_preds();

  for (const Clause& c : after.rules) {
    if (!HasClause(scope.rules, c)) {
      r.pass = false;
      r.witness = "new rule outside the request language: " + c.text();
      return r;
    }
  }
  for (const Clause& c : after.constraints) {
    if (!HasClause(scope.constraints, c)) {
      r.pass = false;
      r.witness = "new constraint outside the request language: " + c.text();
      return r;
    }
  }
  for (const Atom& f : after.facts) {
    if (before.has_fact(f) || scope.has_fact(f)) continue;
    if (!hb.count(f.text())) {
      r.pass = false;
      r.witness = "new fact outside the Herbrand base: " + f.text();
      return r;
    }
    if (!abducible.count(f.pred)) {
      r.pass = false;
      r.witness = "new fact on a non-updatable predicate: " + f.text();
      return r;
    }
  }
  r.witness = "every addition is an updatable ground fact of the language";
  return r;
}

PostulateResult ImmutableInclusion(const KnowledgeBase& before,
                                   const KnowledgeBase& after) {
  PostulateResult r{"KB*3.2", "immutable inclusion", true, false, ""};
  for (const Clause& c : before.rules) {
    if (!HasClause(after.rules, c)) {
      r.pass = false;
      r.witness = "rule dropped: " + c.text();
      return r;
    }
  }
  for (const Clause& c : before.constraints) {
    if (!HasClause(after.constraints, c)) {
      r.pass = false;
      r.witness = "constraint dropped: " + c.text();
      return r;
    }
  }
  r.witness = "rules and constraints survive";
  return r;
}

PostulateResult Vacuity1(const KnowledgeBase& before, const Clause& alpha,
                         const KnowledgeBase& after) {
  PostulateResult r{"KB*4.1", "vacuity 1", true, false, ""};
  if (ConsistentWithBackground(before, alpha)) {
    r.witness = "not applicable: request is compatible with the core";
    return r;
  }
  r.pass = after == before;
  r.witness = r.pass ? "impossible request left the base unchanged"
                     : "impossible request changed the base";
  return r;
}

PostulateResult Vacuity2(const KnowledgeBase& before, const Clause& alpha,
                         const KnowledgeBase& after) {
  PostulateResult r{"KB*4.2", "vacuity 2", true, false, ""};
  if (!(RequestHolds(before, alpha) && ConsistentWithKb(before, alpha))) {
    r.witness = "not applicable: request does not already hold consistently";
    return r;
  }
  r.pass = after == UnionWith(before, alpha);
  r.witness = r.pass ? "already-satisfied request was adopted verbatim"
                     : "already-satisfied request was not adopted verbatim";
  return r;
}

PostulateResult Consistency(const KnowledgeBase& before, const Clause& alpha,
                            const KnowledgeBase& after) {
  PostulateResult r{"KB*5", "consistency", true, false, ""};
  if (!ConsistentWithBackground(before, alpha)) {
    r.witness = "not applicable: request clashes with the core";
    return r;
  }
  r.pass = SatisfiesConstraints(after);
  if (r.pass) {
    r.witness = "result satisfies every constraint";
  } else {
    r.witness = "violated: " + ViolatedConstraints(after).front().witness.text();
  }
  return r;
}

PostulateResult Preservation(const KnowledgeBase& before, const Clause& alpha,
                             const KnowledgeBase& after) {
  PostulateResult r{"KB*6", "preservation", true, false, ""};
  KnowledgeBase scope = Adopt(before, alpha);
  std::set<std::string> hb;
  for (const Atom& a : HerbrandBase(scope)) hb.insert(a.text());

  bool same_core = after.rules == before.rules &&
                   after.constraints == before.constraints;
  bool inside = true;
  for (const Atom& f : after.facts) {
    if (!hb.count(f.text())) inside = false;
  }
  if (same_core && inside) {
    r.witness = "result stays inside the request language";
    return r;
  }

  if (hb.size() > static_cast<size_t>(kKbEquivalenceBound)) {
    r.pass = false;
    r.bounded = true;
    r.witness = "equivalence sweep skipped: herbrand base exceeds " +
                std::to_string(kKbEquivalenceBound);
    return r;
  }
  bool lhs = Derives(after, alpha);
  for (const Atom& a : HerbrandBase(scope)) {
    Clause beta;
    beta.head = a;
    if (!KbEquivalent(before, alpha, beta)) continue;
    if (Derives(after, beta) != lhs) {
      r.pass = false;
      r.witness = "interchangeable request " + beta.text() + " disagrees";
      return r;
    }
  }
  r.witness = "every interchangeable request agrees";
  return r;
}

PostulateResult ConditionalSuccess(const KnowledgeBase& before, const Clause& alpha,
                                   const KnowledgeBase& after) {
  PostulateResult r{"KB*7.1", "conditional success", true, false, ""};
  bool applicable;
  if (alpha.is_constraint()) {
    KnowledgeBase core = before;
    core.facts.clear();
    applicable = RequestHolds(core, alpha);
  } else {
    applicable = ConsistentWithBackground(before, alpha);
  }
  if (!applicable) {
    r.witness = "not applicable: core already blocks the request";
    return r;
  }
  r.pass = RequestHolds(after, alpha);
  r.witness = r.pass ? "admissible request succeeded"
                     : "admissible request failed";
  return r;
}

// Shared engine for KB*7.2 / KB*7.3: every removed fact must be blamable, via
// some fact subset that accepts alpha but stops doing so once the removed
// fact returns. KB*7.2 additionally pins the retained facts into the subset.
PostulateResult Relevance(const KnowledgeBase& before, const Clause& alpha,
                          const KnowledgeBase& after, bool pin_retained) {
  PostulateResult r{pin_retained ? "KB*7.2" : "KB*7.3",
                    pin_retained ? "relevance" : "weak relevance", true, false, ""};
  std::vector<Atom> removed;
  for (const Atom& f : before.facts) {
    if (!after.has_fact(f)) removed.push_back(f);
  }
  if (removed.empty()) {
    r.witness = "nothing was removed";
    return r;
  }

  std::vector<Atom> retained;
  for (const Atom& f : before.facts) {
    if (after.has_fact(f)) retained.push_back(f);
  }
  std::vector<Atom> pool = before.facts;
  if (!alpha.is_constraint() && !before.has_fact(*alpha.head)) {
    pool.push_back(*alpha.head);
  }
  std::vector<Atom> free;
  for (const Atom& f : pool) {
    bool pinned = pin_retained &&
                  std::find(retained.begin(), retained.end(), f) != retained.end();
    if (!pinned) free.push_back(f);
  }
  if (free.size() > static_cast<size_t>(kRelevanceBound) + 1) {
    r.pass = false;
    r.bounded = true;
    r.witness = "relevance sweep skipped: " + std::to_string(free.size()) +
                " candidate facts exceed the bound";
    return r;
  }

  for (const Atom& beta : removed) {
    bool blamable = false;
    for (size_t mask = 0; mask < (size_t{1} << free.size()) && !blamable; ++mask) {
      std::vector<Atom> subset;
      if (pin_retained) subset = retained;
      for (size_t i = 0; i < free.size(); ++i) {
        if (mask & (size_t{1} << i)) subset.push_back(free[i]);
      }
      if (std::find(subset.begin(), subset.end(), beta) != subset.end()) continue;
      if (!SubsetConsistentWith(before, subset, alpha)) continue;
      subset.push_back(beta);
      if (!SubsetConsistentWith(before, subset, alpha)) blamable = true;
    }
    if (!blamable) {
      r.pass = false;
      r.witness = "removed fact " + beta.text() + " is irrelevant to the request";
      return r;
    }
  }
  r.witness = "every removed fact blocks the request somewhere";
  return r;
}

}  // namespace

std::string PostulateResult::text() const {
  std::string s = name + " " + label + ": ";
  s += pass ? "pass" : (bounded ? "bound exceeded" : "fail");
  if (!witness.empty()) s += " (" + witness + ")";
  return s;
}

bool PostulateReport::all_pass() const {
  for (const PostulateResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string PostulateReport::text() const {
  std::string s;
  for (const PostulateResult& r : results) s += r.text() + "\n";
  return s;
}

PostulateReport CheckRevisionPostulates(const KnowledgeBase& before,
                                        const Clause& alpha,
                                        const KnowledgeBase& after) {
  PostulateReport report;
  report.results.push_back(Closure(before, after));
  report.results.push_back(WeakSuccess(alpha, after));
  report.results.push_back(Inclusion(before, alpha, after));
  report.results.push_back(ImmutableInclusion(before, after));
  report.results.push_back(Vacuity1(before, alpha, after));
  report.results.push_back(Vacuity2(before, alpha, after));
  report.results.push_back(Consistency(before, alpha, after));
  report.results.push_back(Preservation(before, alpha, after));
  report.results.push_back(ConditionalSuccess(before, alpha, after));
  report.results.push_back(Relevance(before, alpha, after, true));
  report.results.push_back(Relevance(before, alpha, after, false));
  return report;
}

std::vector<KnowledgeBase> OracleRemainders(const KnowledgeBase& kb,
                                            const Clause& alpha) {
  if (kb.facts.size() > static_cast<size_t>(kOracleBound)) {
    throw BoundError("remainder oracle limited to " + std::to_string(kOracleBound) +
                     " facts");
  }
  std::vector<std::vector<Atom>> consistent;
  const size_t n = kb.facts.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<Atom> subset;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (size_t{1} << i)) subset.push_back(kb.facts[i]);
    }
    if (SubsetConsistentWith(kb, subset, alpha)) consistent.push_back(subset);
  }
  if (consistent.empty()) return {kb};

  std::vector<KnowledgeBase> out;
  for (const std::vector<Atom>& s : consistent) {
    bool maximal = true;
    for (const std::vector<Atom>& t : consistent) {
      if (t.size() <= s.size()) continue;
      bool contains = true;
      for (const Atom& a : s) {
        if (std::find(t.begin(), t.end(), a) == t.end()) contains = false;
      }
      if (contains) maximal = false;
    }
    if (maximal) out.push_back(WithFactSet(kb, s));
  }
  std::sort(out.begin(), out.end(),
            [](const KnowledgeBase& a, const KnowledgeBase& b) {
              return a.facts < b.facts;
            });
  return out;
}

std::vector<ClauseSet> OracleKernels(const KnowledgeBase& kb, const Clause& alpha) {
  std::vector<Clause> universe;
  for (const Clause& c : kb.rules) universe.push_back(c);
  for (const Atom& f : kb.facts) universe.push_back(Clause{f, {}});
  for (const Clause& c : kb.constraints) universe.push_back(c);
  if (universe.size() > static_cast<size_t>(kOracleBound)) {
    throw BoundError("kernel oracle limited to " + std::to_string(kOracleBound) +
                     " clauses");
  }

  auto assemble = [&](size_t mask) {
    KnowledgeBase sub;
    sub.mode = Mode::kKb;
    for (size_t i = 0; i < universe.size(); ++i) {
      if (!(mask & (size_t{1} << i))) continue;
      const Clause& c = universe[i];
      if (c.is_fact()) {
        sub.add_fact(*c.head);
      } else if (c.is_constraint()) {
        sub.constraints.push_back(c);
      } else {
        sub.rules.push_back(c);
      }
    }
    return sub;
  };

  std::vector<size_t> bad;
  for (size_t mask = 0; mask < (size_t{1} << universe.size()); ++mask) {
    if (!ConsistentWithKb(assemble(mask), alpha)) bad.push_back(mask);
  }
  std::vector<ClauseSet> out;
  for (size_t m : bad) {
    bool minimal = true;
    for (size_t o : bad) {
      if (o != m && (o & m) == o) minimal = false;
    }
    if (!minimal) continue;
    ClauseSet set;
    for (size_t i = 0; i < universe.size(); ++i) {
      if (m & (size_t{1} << i)) set.insert(universe[i]);
    }
    if (std::find(out.begin(), out.end(), set) == out.end()) out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](const ClauseSet& a, const ClauseSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace hkb
