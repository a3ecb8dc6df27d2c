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

#include <string>
#include <vector>

#include "doctest.h"
#include "corpus.h"
#include "ground.h"
#include "lang.h"
#include "parser.h"

using namespace hkb;
using hkb::testing::FixturePath;

namespace {

const std::vector<std::string> kFixtures = {
    "ex12.hkb",   "ex20.hkb",    "ex45.hkb",  "ex67.hkb", "matview.hkb",
    "matview_print.hkb", "sec61.hkb", "staff.hkb", "tweety.hkb"};

}  // namespace

TEST_CASE("parser reads database sections") {
  KnowledgeBase kb = ParseFile(FixturePath("ex12.hkb"));
  CHECK(kb.mode == Mode::kDdb);
  CHECK(kb.rules.size() == 6);
  REQUIRE(kb.facts.size() == 2);
  CHECK(kb.facts[0].text() == "e");
  CHECK(kb.facts[1].text() == "f");
  REQUIRE(kb.constraints.size() == 1);
  CHECK(kb.constraints[0].text() == ":- b.");
  CHECK(kb.view_preds() == std::set<std::string>{"p", "q"});
  CHECK(kb.abducible_preds() == std::set<std::string>{"a", "b", "e", "f"});
}

TEST_CASE("parser reads general sections") {
  KnowledgeBase kb = ParseFile(FixturePath("sec61.hkb"));
  CHECK(kb.mode == Mode::kKb);
  CHECK(kb.rules.size() == 5);
  REQUIRE(kb.facts.size() == 2);
  CHECK(kb.facts[0].text() == "a");
  CHECK(kb.facts[1].text() == "r");
  CHECK(kb.constraints.size() == 1);
}

TEST_CASE("parser accepts comments, guards, at-signs, abducibles") {
  KnowledgeBase kb = ParseProgram(
      "% header comment\n"
      "[IDB]\n"
      "p :- q(X), r(X, Y), X != Y.  % trailing comment\n"
      "[EDB]\n"
      "q(a@v2).\n"
      "r(a@v2, b).\n"
      "[ABDUCIBLES]\n"
      "q.\n"
      "r.\n");
  CHECK(kb.rules.size() == 1);
  CHECK(kb.rules[0].body.size() == 3);
  CHECK(kb.rules[0].body[2].is_guard());
  CHECK(kb.facts[0].text() == "q(a@v2)");
  CHECK(kb.abducibles == std::vector<std::string>{"q", "r"});
  CHECK(kb.abducible_preds() == std::set<std::string>{"q", "r"});
}

TEST_CASE("parser enforces section discipline") {
  CHECK_THROWS_WITH_AS(ParseProgram("[IDB]\np :- a.\n[UPDATABLE]\na.\n"),
                       doctest::Contains("mixed section styles"), Error);
  CHECK_THROWS_WITH_AS(ParseProgram("p :- a.\n"),
                       doctest::Contains("outside"), Error);
  CHECK_THROWS_WITH_AS(ParseProgram("[IDB]\np.\n[EDB]\ne.\n"),
                       doctest::Contains("immutable section"), Error);
  CHECK_THROWS_WITH_AS(
      ParseProgram("[IDB]\np :- e.\n[EDB]\np.\ne.\n"),
      doctest::Contains("both view and base"), Error);
  CHECK_THROWS_WITH_AS(ParseProgram("[EDB]\nq(X).\n"),
                       doctest::Contains("ground"), Error);
}

TEST_CASE("clause and atom parsing") {
  Clause fact = ParseClause("p(a, b)");
  CHECK(fact.is_fact());
  CHECK(fact.text() == "p(a,b).");
  Clause rule = ParseClause("p :- q, not r.");
  REQUIRE(rule.body.size() == 2);
  CHECK(rule.body[1].neg);
  CHECK(rule.text() == "p :- q, not r.");
  Clause denial = ParseClause(":- p, q");
  CHECK(denial.is_constraint());
  CHECK(denial.text() == ":- p, q.");
  CHECK(ParseGroundAtom("p(a, b)").text() == "p(a,b)");
  CHECK_THROWS_AS(ParseGroundAtom("p(X)"), Error);
  CHECK_THROWS_AS(ParseGroundAtom("p, q"), Error);
}

TEST_CASE("serialize then reparse is the identity on the corpus") {
  for (const std::string& name : kFixtures) {
    CAPTURE(name);
    KnowledgeBase kb = ParseFile(FixturePath(name));
    KnowledgeBase again = ParseProgram(Serialize(kb));
    CHECK(again == kb);
    CHECK(Serialize(again) == Serialize(kb));
  }
}

TEST_CASE("predicate table detects arity conflicts") {
  CHECK_THROWS_AS(ParseProgram("[UPDATABLE]\np.\np(a).\n"), Error);
  KnowledgeBase kb;
  kb.add_fact(ParseGroundAtom("p"));
  kb.add_fact(ParseGroundAtom("p(a)"));
  CHECK_THROWS_AS(kb.predicates(), Error);
}

TEST_CASE("fact bookkeeping stays sorted and unique") {
  KnowledgeBase kb;
  kb.add_fact(ParseGroundAtom("c"));
  kb.add_fact(ParseGroundAtom("a"));
  kb.add_fact(ParseGroundAtom("c"));
  REQUIRE(kb.facts.size() == 2);
  CHECK(kb.facts[0].text() == "a");
  CHECK(kb.has_fact(ParseGroundAtom("c")));
  kb.remove_fact(ParseGroundAtom("a"));
  CHECK_FALSE(kb.has_fact(ParseGroundAtom("a")));
}

TEST_CASE("herbrand universe falls back to a reserved constant") {
  KnowledgeBase prop = ParseProgram("[IDB]\np :- a.\n[EDB]\na.\n");
  CHECK(HerbrandUniverse(prop) == std::vector<std::string>{"u0"});
  KnowledgeBase staff = ParseFile(FixturePath("staff.hkb"));
  CHECK(Constants(staff) ==
        std::vector<std::string>{"aravindan", "delhibabu", "gerhard", "infor1",
                                 "infor2", "matthias"});
  CHECK(HerbrandBase(staff).size() == 108);
}

TEST_CASE("grounding staff resolves guards and is idempotent") {
  KnowledgeBase staff = ParseFile(FixturePath("staff.hkb"));
  KnowledgeBase g = Ground(staff);
  CHECK(g.rules.size() == 216);
  CHECK(g.constraints.size() == 360);
  for (const Clause& c : g.rules) {
    CHECK(c.ground());
    for (const Literal& l : c.body) CHECK_FALSE(l.is_guard());
  }
  for (const Clause& c : g.constraints) {
    CHECK(c.ground());
    CHECK(c.body.size() == 2);
    CHECK(c.body[0].atom != c.body[1].atom);
  }
  CHECK(Ground(g) == g);
}

TEST_CASE("unbound rule variables range over the universe") {
  KnowledgeBase kb = ParseProgram("[IDB]\np(X) :- q.\n[EDB]\nq.\n");
  KnowledgeBase g = Ground(kb);
  REQUIRE(g.rules.size() == 1);
  CHECK(g.rules[0].text() == "p(u0) :- q.");
}

TEST_CASE("stratification levels by dependency height") {
  Stratification s = Stratify(ParseFile(FixturePath("tweety.hkb")));
  CHECK(s.level.at("bird") == 0);
  CHECK(s.level.at("broken_wing") == 0);
  CHECK(s.level.at("ab") == 1);
  CHECK(s.level.at("flies") == 2);
  CHECK(s.max_level == 2);

  Stratification t = Stratify(ParseFile(FixturePath("ex12.hkb")));
  CHECK(t.level.at("a") == 0);
  CHECK(t.level.at("q") == 1);
  CHECK(t.level.at("p") == 2);
}

TEST_CASE("positive recursion is allowed, negative recursion is not") {
  KnowledgeBase pos = ParseProgram("[IMMUTABLE]\np :- q.\nq :- p.\n[UPDATABLE]\na.\n");
  Stratification s = Stratify(pos);
  CHECK(s.level.at("p") == s.level.at("q"));
  CHECK_THROWS_WITH_AS(
      Stratify(ParseProgram("[IMMUTABLE]\np :- not q.\nq :- not p.\n[UPDATABLE]\na.\n")),
      doctest::Contains("negative cycle"), Error);
}

TEST_CASE("random corpus programs parse and round-trip") {
  std::mt19937 rng(hkb::testing::kCorpusSeed);
  for (int i = 0; i < 50; ++i) {
    KnowledgeBase kb = hkb::testing::RandomKb(rng);
    CHECK(ParseProgram(Serialize(kb)) == kb);
    KnowledgeBase ddb = hkb::testing::RandomDdb(rng, i % 2 == 0);
    CHECK(ParseProgram(Serialize(ddb)) == ddb);
  }
}
