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

#include "doctest.h"
#include "corpus.h"
#include "model.h"
#include "parser.h"

using namespace hkb;
using hkb::testing::FixturePath;

TEST_CASE("least model goldens") {
  CHECK(LeastModel(ParseFile(FixturePath("ex12.hkb"))) ==
        std::set<std::string>{"e", "f"});
  CHECK(LeastModel(ParseFile(FixturePath("matview.hkb"))) ==
        std::set<std::string>{"a", "b", "c", "p", "q"});
  CHECK(LeastModel(ParseFile(FixturePath("staff.hkb"))) ==
        std::set<std::string>{"group_chair(infor1,matthias)",
                              "group_chair(infor2,gerhard)",
                              "staff_chair(aravindan,matthias)",
                              "staff_chair(delhibabu,matthias)",
                              "staff_group(aravindan,infor1)",
                              "staff_group(delhibabu,infor1)"});
}

TEST_CASE("stratified negation evaluates defaults") {
  std::set<std::string> m = LeastModel(ParseFile(FixturePath("tweety.hkb")));
  CHECK(m.count("flies(opus)") == 1);
  CHECK(m.count("flies(tweety)") == 0);
  CHECK(m.count("ab(tweety)") == 1);
  CHECK(m.count("ab(opus)") == 0);
}

TEST_CASE("semi-naive evaluation matches the naive oracle") {
  std::mt19937 rng(hkb::testing::kCorpusSeed);
  for (int i = 0; i < 120; ++i) {
    KnowledgeBase kb = i % 2 == 0 ? hkb::testing::RandomKb(rng)
                                  : hkb::testing::RandomDdb(rng, i % 4 == 1);
    CAPTURE(Serialize(kb));
    CHECK(LeastModel(kb) == NaiveModel(kb));
  }
}

TEST_CASE("entailment and request acceptance") {
  KnowledgeBase kb = ParseFile(FixturePath("matview.hkb"));
  CHECK(Entails(kb, ParseGroundAtom("p")));
  CHECK_FALSE(Entails(kb, ParseGroundAtom("d")));
  CHECK(RequestHolds(kb, ParseClause("q.")));
  CHECK_FALSE(RequestHolds(kb, ParseClause(":- p.")));
  CHECK(RequestHolds(kb, ParseClause(":- d.")));
}

TEST_CASE("body satisfaction respects negation") {
  std::set<std::string> model = {"a", "b"};
  CHECK(BodySatisfied(ParseClause("p :- a, b."), model));
  CHECK_FALSE(BodySatisfied(ParseClause("p :- a, c."), model));
  CHECK(BodySatisfied(ParseClause("p :- a, not c."), model));
  CHECK_FALSE(BodySatisfied(ParseClause("p :- a, not b."), model));
}

TEST_CASE("violated constraints name the instance") {
  KnowledgeBase ex12 = ParseFile(FixturePath("ex12.hkb"));
  CHECK(ViolatedConstraints(ex12).empty());
  auto vs = ViolatedConstraints(ex12, ParseGroundAtom("b"));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].constraint.text() == ":- b.");
  CHECK(vs[0].witness.text() == ":- b.");

  KnowledgeBase staff = ParseFile(FixturePath("staff.hkb"));
  auto sv = ViolatedConstraints(staff, ParseGroundAtom("group_chair(infor1,gerhard)"));
  CHECK(sv.size() == 2);
  CHECK(SatisfiesConstraints(staff));
}

TEST_CASE("derivability covers facts, rules, and denials") {
  KnowledgeBase kb = ParseFile(FixturePath("sec61.hkb"));
  CHECK(Derives(kb, ParseClause("a.")));
  CHECK(Derives(kb, ParseClause("r.")));
  CHECK_FALSE(Derives(kb, ParseClause("p.")));
  CHECK(Derives(kb, ParseClause("p :- c, d.")));
  CHECK(Derives(kb, ParseClause("p :- q.")));
  CHECK_FALSE(Derives(kb, ParseClause("q :- c.")));
  CHECK(Derives(kb, ParseClause(":- b.")));
  CHECK_FALSE(Derives(kb, ParseClause(":- a.")));
}

TEST_CASE("consistency against the kb and against the background") {
  KnowledgeBase ex12 = ParseFile(FixturePath("ex12.hkb"));
  CHECK(ConsistentWithKb(ex12, ParseClause("a.")));
  CHECK_FALSE(ConsistentWithKb(ex12, ParseClause("b.")));
  CHECK_FALSE(ConsistentWithKb(ex12, ParseClause(":- e.")));
  CHECK(ConsistentWithBackground(ex12, ParseClause(":- e.")));

  KnowledgeBase sec61 = ParseFile(FixturePath("sec61.hkb"));
  CHECK_FALSE(ConsistentWithBackground(sec61, ParseClause("b.")));
  CHECK(ConsistentWithBackground(sec61, ParseClause("p.")));
}

TEST_CASE("request interchangeability is exact on small bases") {
  KnowledgeBase loop = ParseProgram(
      "[IMMUTABLE]\np :- q.\nq :- p.\n[UPDATABLE]\n");
  CHECK(KbEquivalent(loop, ParseClause("p."), ParseClause("q.")));

  KnowledgeBase oneway = ParseProgram("[IMMUTABLE]\np :- q.\n[UPDATABLE]\n");
  CHECK_FALSE(KbEquivalent(oneway, ParseClause("p."), ParseClause("q.")));
  CHECK(KbEquivalent(oneway, ParseClause("p."), ParseClause("p.")));

  KnowledgeBase staff = ParseFile(FixturePath("staff.hkb"));
  CHECK_THROWS_AS(KbEquivalent(staff, ParseClause("group_chair(a,b)."),
                               ParseClause("group_chair(b,a).")),
                  Error);
}
