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

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "corpus.h"
#include "model.h"
#include "parser.h"
#include "revise.h"

using namespace hkb;
using hkb::testing::FixturePath;

namespace {

std::set<std::string> FactSet(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const Atom& a : kb.facts) out.insert(a.text());
  return out;
}

bool TraceHas(const std::vector<std::string>& trace, const std::string& part) {
  for (const std::string& line : trace)
    if (line.find(part) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("revising by a view fact admits its cheapest support") {
  KnowledgeBase kb = ParseFile(FixturePath("sec61.hkb"));
  ReviseOptions opts;
  opts.trace = true;
  RevisionOutcome out = GeneralizedRevision(kb, ParseClause("p."), opts);

  CHECK(FactSet(out.kb_after) == std::set<std::string>{"a", "c", "d", "r"});
  CHECK(out.inserted == std::set<std::string>{"a", "c", "d"});
  CHECK(out.deleted.empty());
  CHECK_FALSE(out.vacuous);
  CHECK_FALSE(out.unsatisfiable);
  CHECK(out.kb_after.rules == kb.rules);
  CHECK(out.kb_after.constraints == kb.constraints);

  CHECK(TraceHas(out.trace, "(0) clauses"));
  CHECK(TraceHas(out.trace, "(1) V = {b}"));
  CHECK(TraceHas(out.trace, "(2) P = {a, c, d, e, f, q, r}"));
  CHECK(TraceHas(out.trace, "N = {a, r}"));
  CHECK(TraceHas(out.trace, "(2.1) candidate Δ+ = {a, c, d}, Δ- = {}"));
  CHECK(TraceHas(out.trace, "(2.2) chosen Δ+ = {a, c, d}, Δ- = {}"));
  CHECK(TraceHas(out.trace, "(3) clauses:"));
  CHECK(TraceHas(out.trace, "Output KB_U*: {a, c, d, r}"));
}

TEST_CASE("revising by a denial trims every derivation") {
  KnowledgeBase kb = ParseFile(FixturePath("matview.hkb"));
  auto all = AllMinimalRevisions(kb, ParseClause(":- p."));
  REQUIRE(all.size() == 2);
  CHECK(all[0].deleted == std::set<std::string>{"a", "b"});
  CHECK(all[1].deleted == std::set<std::string>{"a", "c"});
  for (const RevisionOutcome& r : all) {
    CHECK(r.inserted.empty());
    CHECK_FALSE(Entails(r.kb_after, ParseGroundAtom("p")));
    REQUIRE(r.kb_after.constraints.size() == 1);
    CHECK(r.kb_after.constraints[0].text() == ":- p.");
  }

  RevisionOutcome chosen = GeneralizedRevision(kb, ParseClause(":- p."));
  CHECK(chosen.deleted == std::set<std::string>{"a", "b"});
}

TEST_CASE("relational revision enumerates every minimal realization") {
  KnowledgeBase kb = ParseFile(FixturePath("staff.hkb"));
  Clause alpha = ParseClause("staff_chair(aravindan, gerhard).");
  auto all = AllMinimalRevisions(kb, alpha);
  REQUIRE(all.size() == 6);

  CHECK(all[0].inserted == std::set<std::string>{"group_chair(infor2,gerhard)",
                                                 "staff_group(aravindan,infor2)"});
  CHECK(all[0].deleted.empty());
  CHECK(all[0].kb_after.has_fact(ParseGroundAtom("staff_group(aravindan,infor1)")));

  for (const RevisionOutcome& r : all) {
    CHECK(Entails(r.kb_after, *alpha.head));
    CHECK(SatisfiesConstraints(r.kb_after));
    CHECK(r.deleted.count("staff_group(delhibabu,infor1)") == 0);
    CHECK(r.kb_after.rules == kb.rules);
  }
}

TEST_CASE("vacuous and unsatisfiable revisions") {
  KnowledgeBase kb = ParseFile(FixturePath("sec61.hkb"));
  RevisionOutcome vac = GeneralizedRevision(kb, ParseClause("a."));
  CHECK(vac.vacuous);
  CHECK(vac.kb_after == kb);
  CHECK(vac.inserted.empty());

  RevisionOutcome bad = GeneralizedRevision(kb, ParseClause("b."));
  CHECK(bad.unsatisfiable);
  CHECK(FactSet(bad.kb_after) == FactSet(kb));
}

TEST_CASE("union adoption respects the database split") {
  KnowledgeBase ddb = ParseFile(FixturePath("ex12.hkb"));
  KnowledgeBase with_base = UnionWith(ddb, ParseClause("a."));
  CHECK(with_base.has_fact(ParseGroundAtom("a")));
  CHECK(UnionWith(ddb, ParseClause("p.")) == ddb);

  KnowledgeBase kb = ParseFile(FixturePath("sec61.hkb"));
  KnowledgeBase with_ic = UnionWith(kb, ParseClause(":- q."));
  CHECK(with_ic.constraints.size() == kb.constraints.size() + 1);
}

TEST_CASE("revision outcomes are sound and undominated") {
  std::mt19937 rng(hkb::testing::kCorpusSeed + 5);
  int effective = 0;
  for (int i = 0; i < 50; ++i) {
    KnowledgeBase kb = hkb::testing::RandomConsistentKb(rng);
    Clause alpha = hkb::testing::RandomAlpha(rng, kb);
    CAPTURE(Serialize(kb));
    CAPTURE(alpha.text());

    std::vector<RevisionOutcome> all;
    try {
      all = AllMinimalRevisions(kb, alpha);
    } catch (const Error& e) {
      CHECK(e.kind() == "no-solution");
      continue;
    }
    REQUIRE(!all.empty());

    RevisionOutcome chosen = GeneralizedRevision(kb, alpha);
    CHECK(chosen.inserted == all[0].inserted);
    CHECK(chosen.deleted == all[0].deleted);

    for (const RevisionOutcome& r : all) {
      if (r.unsatisfiable) {
        CHECK(FactSet(r.kb_after) == FactSet(kb));
        continue;
      }
      ++effective;
      CHECK(SatisfiesConstraints(r.kb_after));
      CHECK(RequestHolds(r.kb_after, alpha));
      CHECK(r.kb_after.rules == kb.rules);
      if (r.vacuous) CHECK(r.kb_after == UnionWith(kb, alpha));
    }

    for (const RevisionOutcome& a : all) {
      for (const RevisionOutcome& b : all) {
        if (&a == &b) continue;
        bool sub = std::includes(b.inserted.begin(), b.inserted.end(),
                                 a.inserted.begin(), a.inserted.end()) &&
                   std::includes(b.deleted.begin(), b.deleted.end(),
                                 a.deleted.begin(), a.deleted.end());
        bool strict = sub && (a.inserted != b.inserted || a.deleted != b.deleted);
        CHECK_FALSE(strict);
      }
    }
  }
  CHECK(effective > 30);
}
