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
#include "change.h"
#include "corpus.h"
#include "model.h"
#include "parser.h"
#include "prop_oracle.h"

using namespace hkb;
using hkb::testing::PropOracle;

namespace {

std::set<std::string> FactSet(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const Atom& a : kb.facts) out.insert(a.text());
  return out;
}

std::set<std::string> Minus(std::set<std::string> a,
                            const std::set<std::string>& b) {
  for (const std::string& x : b) a.erase(x);
  return a;
}

const char* kTwoWays =
    "[IMMUTABLE]\n"
    "p :- a, b.\n"
    "p :- a.\n"
    "q :- a, b.\n"
    "[UPDATABLE]\n"
    "a.\n"
    "b.\n";

const char* kJointRule =
    "[IMMUTABLE]\n"
    "p :- a, b.\n"
    "[UPDATABLE]\n"
    "a.\n"
    "b.\n";

}  // namespace

TEST_CASE("minimal hitting sets") {
  std::vector<std::set<std::string>> family = {{"a", "e"}, {"a", "f"}};
  auto hs = MinimalHittingSets(family);
  REQUIRE(hs.size() == 2);
  CHECK(hs[0] == std::set<std::string>{"a"});
  CHECK(hs[1] == std::set<std::string>{"e", "f"});

  CHECK(MinimalHittingSets({}) ==
        std::vector<std::set<std::string>>{std::set<std::string>{}});

  CHECK_THROWS_AS(MinimalHittingSets({{"a"}, {}}), Error);
}

TEST_CASE("hitting sets over clauses skip protected members") {
  ClauseSet rule_only = {ParseClause("p :- a.")};
  CHECK_THROWS_WITH_AS(
      MinimalHittingSetsOver({rule_only}, std::set<std::string>{"a"}),
      doctest::Contains("unhittable"), Error);

  ClauseSet mixed = {ParseClause("p :- a."), ParseClause("a.")};
  auto hs = MinimalHittingSetsOver({mixed}, std::set<std::string>{"a"});
  REQUIRE(hs.size() == 1);
  CHECK(hs[0] == std::set<std::string>{"a"});
}

TEST_CASE("remainders keep the rules and vary the facts") {
  KnowledgeBase kb = ParseProgram(kTwoWays);
  RemainderFamily fam = Remainders(kb, ParseClause(":- p."));
  REQUIRE(fam.members.size() == 1);
  CHECK(FactSet(fam.members[0]) == std::set<std::string>{"b"});
  CHECK(fam.members[0].rules == kb.rules);
  CHECK(fam.members[0].constraints == kb.constraints);
}

TEST_CASE("kernels are the minimal clashing clause sets") {
  KnowledgeBase kb = ParseProgram(kTwoWays);
  KernelFamily fam = Kernels(kb, ParseClause(":- p."));
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0] ==
        ClauseSet{ParseClause("p :- a."), ParseClause("a.")});
  CHECK(fam.members[1] == ClauseSet{ParseClause("p :- a, b."),
                                    ParseClause("a."), ParseClause("b.")});
}

TEST_CASE("partial meet adopts the request after intersecting") {
  KnowledgeBase kb = ParseProgram(kTwoWays);
  Clause alpha = ParseClause(":- p.");
  KnowledgeBase out = PartialMeetRevision(kb, alpha, ParseStrategy("full-meet"));
  CHECK(FactSet(out) == std::set<std::string>{"b"});
  CHECK(out.rules == kb.rules);
  REQUIRE(out.constraints.size() == 1);
  CHECK(out.constraints[0] == alpha);
  CHECK(PartialMeetRevision(kb, alpha, ParseStrategy("maxichoice")) == out);
}

TEST_CASE("kernel revision cuts an incision") {
  KnowledgeBase kb = ParseProgram(kTwoWays);
  Clause alpha = ParseClause(":- p.");
  KnowledgeBase minimal = KernelRevision(kb, alpha, ParseStrategy("minimal"));
  CHECK(FactSet(minimal) == std::set<std::string>{"b"});
  REQUIRE(minimal.constraints.size() == 1);
  KnowledgeBase maximal = KernelRevision(kb, alpha, ParseStrategy("maximal"));
  CHECK(FactSet(maximal).empty());
  CHECK(RequestHolds(maximal, alpha));
}

TEST_CASE("strategies pick different incisions from one kernel") {
  KnowledgeBase kb = ParseProgram(kJointRule);
  Clause alpha = ParseClause(":- p.");
  KernelFamily fam = Kernels(kb, alpha);
  REQUIRE(fam.members.size() == 1);
  auto hs = MinimalHittingSetsOver(fam.members, FactSet(kb));
  REQUIRE(hs.size() == 2);

  CHECK(FactSet(KernelRevision(kb, alpha, ParseStrategy("minimal"))) ==
        std::set<std::string>{"b"});

  ChangeStrategy ranked;
  ranked.mode = ChangeStrategy::Mode::kRanked;
  ranked.priority = {{"a", 5}};
  CHECK(FactSet(KernelRevision(kb, alpha, ranked)) ==
        std::set<std::string>{"a"});

  RemainderFamily rem = Remainders(kb, alpha);
  CHECK(rem.members.size() == 2);
  CHECK(FactSet(PartialMeetRevision(kb, alpha, ParseStrategy("full-meet"))).empty());
}

TEST_CASE("vacuous and impossible requests") {
  KnowledgeBase kb = ParseProgram(kJointRule);
  Clause present = ParseClause("a.");
  CHECK(KernelRevision(kb, present, ParseStrategy("minimal")) == kb);
  CHECK(PartialMeetRevision(kb, present, ParseStrategy("full-meet")) == kb);

  KnowledgeBase blocked = ParseProgram(
      "[IMMUTABLE]\np :- b.\n[UPDATABLE]\nb.\n[CONSTRAINTS]\n:- p.\n");
  Clause alpha = ParseClause("p.");
  CHECK(KernelRevision(blocked, alpha, ParseStrategy("minimal")) == blocked);
  CHECK(PartialMeetRevision(blocked, alpha, ParseStrategy("maxichoice")) ==
        blocked);
  CHECK(Remainders(blocked, alpha).members ==
        std::vector<KnowledgeBase>{blocked});
}

TEST_CASE("adopt routes a clause to its section") {
  KnowledgeBase kb = ParseProgram(kJointRule);
  KnowledgeBase with_rule = Adopt(kb, ParseClause("q :- z."));
  CHECK(with_rule.rules.size() == kb.rules.size() + 1);
  CHECK(Adopt(with_rule, ParseClause("q :- z.")) == with_rule);
  KnowledgeBase with_ic = Adopt(kb, ParseClause(":- z."));
  CHECK(with_ic.constraints.size() == 1);
  KnowledgeBase with_fact = Adopt(kb, ParseClause("z."));
  CHECK(with_fact.has_fact(ParseGroundAtom("z")));
}

TEST_CASE("strategy names") {
  CHECK(ParseStrategy("minimal").mode == ChangeStrategy::Mode::kMinimalIncision);
  CHECK(ParseStrategy("maximal").mode == ChangeStrategy::Mode::kMaximalIncision);
  CHECK(ParseStrategy("full-meet").mode == ChangeStrategy::Mode::kFullMeet);
  CHECK(ParseStrategy("maxichoice").mode == ChangeStrategy::Mode::kMaxichoice);
  CHECK_THROWS_AS(ParseStrategy("boldest"), Error);
}

TEST_CASE("remainder and kernel families match the subset oracle") {
  std::mt19937 rng(hkb::testing::kCorpusSeed + 1);
  for (int i = 0; i < 60; ++i) {
    KnowledgeBase kb = hkb::testing::RandomConsistentKb(rng);
    Clause alpha = hkb::testing::RandomAlpha(rng, kb);
    CAPTURE(Serialize(kb));
    CAPTURE(alpha.text());

    PropOracle oracle(kb);

    RemainderFamily rem = Remainders(kb, alpha);
    std::vector<std::set<std::string>> engine_rem;
    for (const KnowledgeBase& m : rem.members) engine_rem.push_back(FactSet(m));
    std::sort(engine_rem.begin(), engine_rem.end());
    CHECK(engine_rem == oracle.RemainderFacts(alpha));

    KernelFamily ker = Kernels(kb, alpha);
    std::set<ClauseSet> engine_ker(ker.members.begin(), ker.members.end());
    CHECK(engine_ker == oracle.KernelSets(alpha));
  }
}

TEST_CASE("remainders are the complements of minimal incisions") {
  std::mt19937 rng(hkb::testing::kCorpusSeed + 2);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    KnowledgeBase kb = hkb::testing::RandomConsistentKb(rng);
    Clause alpha = hkb::testing::RandomAlpha(rng, kb);
    CAPTURE(Serialize(kb));
    CAPTURE(alpha.text());

    PropOracle oracle(kb);
    if (!oracle.Acceptable(0, alpha)) {
      CHECK(KernelRevision(kb, alpha, ParseStrategy("minimal")) == kb);
      CHECK(PartialMeetRevision(kb, alpha, ParseStrategy("full-meet")) == kb);
      continue;
    }
    ++checked;

    KernelFamily ker = Kernels(kb, alpha);
    auto hs = MinimalHittingSetsOver(ker.members, FactSet(kb));
    std::set<std::set<std::string>> incisions(hs.begin(), hs.end());

    // Each reported hitting set is inclusion-minimal.
    for (const auto& h : hs) {
      for (const std::string& e : h) {
        std::set<std::string> smaller = h;
        smaller.erase(e);
        bool hits_all = true;
        for (const ClauseSet& member : ker.members) {
          bool hit = false;
          for (const Clause& c : member)
            if (c.is_fact() && smaller.count(c.head->text())) hit = true;
          hits_all &= hit || member.empty();
        }
        CHECK_FALSE(hits_all);
      }
    }

    std::set<std::set<std::string>> complements;
    for (const KnowledgeBase& m : Remainders(kb, alpha).members)
      complements.insert(Minus(FactSet(kb), FactSet(m)));
    CHECK(complements == incisions);
  }
  CHECK(checked > 10);
}

TEST_CASE("minimal incisions land inside the partial meet class") {
  std::mt19937 rng(hkb::testing::kCorpusSeed + 3);
  for (int i = 0; i < 60; ++i) {
    KnowledgeBase kb = hkb::testing::RandomConsistentKb(rng);
    Clause alpha = hkb::testing::RandomAlpha(rng, kb);
    CAPTURE(Serialize(kb));
    CAPTURE(alpha.text());

    PropOracle oracle(kb);
    if (!oracle.Acceptable(0, alpha)) continue;

    std::set<std::string> adopted;
    if (alpha.is_fact()) adopted.insert(alpha.head->text());

    std::vector<std::set<std::string>> rem_sets;
    for (const KnowledgeBase& m : Remainders(kb, alpha).members)
      rem_sets.push_back(FactSet(m));

    KnowledgeBase kmin = KernelRevision(kb, alpha, ParseStrategy("minimal"));
    bool in_class = false;
    for (const auto& r : rem_sets) {
      std::set<std::string> target = r;
      target.insert(adopted.begin(), adopted.end());
      in_class |= FactSet(kmin) == target;
    }
    CHECK(in_class);

    // Full meet keeps exactly the facts no minimal incision touches.
    KernelFamily ker = Kernels(kb, alpha);
    auto hs = MinimalHittingSetsOver(ker.members, FactSet(kb));
    std::set<std::string> removed_by_some;
    for (const auto& h : hs) removed_by_some.insert(h.begin(), h.end());
    std::set<std::string> expect = Minus(FactSet(kb), removed_by_some);
    expect.insert(adopted.begin(), adopted.end());
    KnowledgeBase pm = PartialMeetRevision(kb, alpha, ParseStrategy("full-meet"));
    CHECK(FactSet(pm) == expect);

    for (const char* name : {"minimal", "maximal"}) {
      KnowledgeBase out = KernelRevision(kb, alpha, ParseStrategy(name));
      CHECK(SatisfiesConstraints(out));
      CHECK(RequestHolds(out, alpha));
    }
    for (const char* name : {"full-meet", "maxichoice"}) {
      KnowledgeBase out = PartialMeetRevision(kb, alpha, ParseStrategy(name));
      CHECK(SatisfiesConstraints(out));
      CHECK(RequestHolds(out, alpha));
    }
  }
}
