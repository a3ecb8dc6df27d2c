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
#include "abduce.h"
#include "corpus.h"
#include "model.h"
#include "parser.h"

using namespace hkb;
using hkb::testing::FixturePath;

namespace {

std::vector<std::set<std::string>> SuccessSupports(const SldTree& tree) {
  std::vector<std::set<std::string>> out;
  for (const SldBranch& b : tree.branches)
    if (b.status == SldBranch::Status::kSuccess) out.push_back(b.support);
  return out;
}

int CountStatus(const SldTree& tree, SldBranch::Status s) {
  int n = 0;
  for (const SldBranch& b : tree.branches) n += b.status == s;
  return n;
}

}  // namespace

TEST_CASE("sld tree explores rules in file order") {
  KnowledgeBase kb = ParseFile(FixturePath("ex12.hkb"));
  SldTree tree = BuildSldTree(kb, ParseGroundAtom("p"));
  CHECK(SuccessSupports(tree) ==
        std::vector<std::set<std::string>>{
            {"a", "e"}, {"a", "f"}, {"a"}});
  CHECK(CountStatus(tree, SldBranch::Status::kIcPruned) == 2);
  CHECK(CountStatus(tree, SldBranch::Status::kFailure) == 0);
  CHECK_FALSE(tree.depth_cut_present);

  BranchDeltas d = Deltas(tree);
  CHECK(d.success == std::vector<std::set<std::string>>{
                         {"a", "e"}, {"a", "f"}, {"a"}});
  CHECK(d.failed_missing.empty());

  for (const SldBranch& b : tree.branches)
    if (b.status == SldBranch::Status::kSuccess)
      CHECK(b.missing == std::set<std::string>{"a"});
}

TEST_CASE("constraint order changes pruning but not the outcome") {
  KnowledgeBase kb = ParseFile(FixturePath("ex12.hkb"));
  SldTree last = BuildSldTree(kb, ParseGroundAtom("p"), kDefaultDepthLimit,
                              IcOrder::kCheckLast);
  CHECK(CountStatus(last, SldBranch::Status::kIcPruned) == 2);
  CHECK(SuccessSupports(last) == std::vector<std::set<std::string>>{
                                     {"a", "e"}, {"a", "f"}, {"a"}});

  ExplanationFamily first =
      LocallyMinimalExplanations(kb, ParseGroundAtom("p"),
                                 UpdateDirection::kInsert, IcOrder::kCheckFirst);
  ExplanationFamily lastf =
      LocallyMinimalExplanations(kb, ParseGroundAtom("p"),
                                 UpdateDirection::kInsert, IcOrder::kCheckLast);
  CHECK(first.members == lastf.members);
  REQUIRE(first.members.size() == 3);
  CHECK(first.members[0].add == std::set<std::string>{"a", "e"});
  CHECK(first.members[1].add == std::set<std::string>{"a", "f"});
  CHECK(first.members[2].add == std::set<std::string>{"a"});
  for (const ExplanationSet& e : first.members) CHECK(e.remove.empty());
}

TEST_CASE("raw support family keeps violating branches") {
  KnowledgeBase kb = ParseFile(FixturePath("ex12.hkb"));
  auto fam = SupportFamily(kb, ParseGroundAtom("p"));
  CHECK(fam == std::vector<std::set<std::string>>{
                   {"a", "e"}, {"b", "f"}, {"a", "f"}, {"b", "e"}, {"a"}});
}

TEST_CASE("locally minimal explanations keep rule-subset witnesses") {
  KnowledgeBase kb = ParseProgram("[IDB]\np :- q, a.\np :- a.\n[EDB]\n");
  ExplanationFamily fam = LocallyMinimalExplanations(
      kb, ParseGroundAtom("p"), UpdateDirection::kInsert);
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0].add == std::set<std::string>{"a", "q"});
  CHECK(fam.members[1].add == std::set<std::string>{"a"});
}

TEST_CASE("deletion explanations cut every derivation") {
  KnowledgeBase kb = ParseFile(FixturePath("matview.hkb"));
  ExplanationFamily fam = LocallyMinimalExplanations(
      kb, ParseGroundAtom("p"), UpdateDirection::kDelete, IcOrder::kCheckLast);
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0].remove == std::set<std::string>{"a", "b"});
  CHECK(fam.members[1].remove == std::set<std::string>{"a", "c"});
  for (const ExplanationSet& e : fam.members) CHECK(e.add.empty());
}

TEST_CASE("satisfied requests explain themselves") {
  KnowledgeBase kb = ParseFile(FixturePath("ex12.hkb"));
  ExplanationFamily ins = LocallyMinimalExplanations(
      kb, ParseGroundAtom("e"), UpdateDirection::kInsert);
  REQUIRE(ins.members.size() == 1);
  CHECK(ins.members[0].add.empty());
  CHECK(ins.members[0].remove.empty());

  KnowledgeBase mp = ParseFile(FixturePath("matview_print.hkb"));
  ExplanationFamily del = LocallyMinimalExplanations(
      mp, ParseGroundAtom("p"), UpdateDirection::kDelete);
  REQUIRE(del.members.size() == 1);
  CHECK(del.members[0].remove.empty());
}

TEST_CASE("depth limit cuts cyclic derivations") {
  KnowledgeBase kb = ParseProgram("[IDB]\np :- p.\n[EDB]\na.\n");
  SldTree tree = BuildSldTree(kb, ParseGroundAtom("p"), 4);
  CHECK(tree.depth_cut_present);
  CHECK(SuccessSupports(tree).empty());
  CHECK_THROWS_AS(LocallyMinimalExplanations(kb, ParseGroundAtom("p"),
                                             UpdateDirection::kInsert,
                                             IcOrder::kCheckFirst, 4),
                  Error);
}

TEST_CASE("negation blocks insertion through the sld route") {
  KnowledgeBase kb = ParseFile(FixturePath("tweety.hkb"));
  SldTree tree = BuildSldTree(kb, ParseGroundAtom("flies(tweety)"));
  CHECK(tree.neg_blocked);
  CHECK_THROWS_WITH_AS(
      LocallyMinimalExplanations(kb, ParseGroundAtom("flies(tweety)"),
                                 UpdateDirection::kInsert),
      doctest::Contains("materialized"), Error);
}

TEST_CASE("update explanations are minimal support sets") {
  KnowledgeBase tweety = ParseFile(FixturePath("tweety.hkb"));
  tweety.remove_fact(ParseGroundAtom("broken_wing(tweety)"));
  auto fam = ExplainUpdate(tweety, ParseGroundAtom("flies(tweety)"));
  CHECK(fam == std::vector<std::set<std::string>>{{"bird(tweety)"}});

  KnowledgeBase ex12 = ParseFile(FixturePath("ex12.hkb"));
  auto pfam = ExplainUpdate(ex12, ParseGroundAtom("p"));
  CHECK(pfam == std::vector<std::set<std::string>>{
                    {"a"}, {"b", "e"}, {"b", "f"}});
}

TEST_CASE("constraint order names parse") {
  CHECK(ParseIcOrder("first") == IcOrder::kCheckFirst);
  CHECK(ParseIcOrder("last") == IcOrder::kCheckLast);
  CHECK_THROWS_AS(ParseIcOrder("never"), Error);
}

TEST_CASE("every explanation makes its request hold") {
  std::mt19937 rng(hkb::testing::kCorpusSeed + 4);
  int produced = 0;
  for (int i = 0; i < 60; ++i) {
    KnowledgeBase kb = hkb::testing::RandomConsistentDdb(rng);
    std::set<std::string> vp = kb.view_preds();
    std::vector<std::string> views(vp.begin(), vp.end());
    Atom goal = ParseGroundAtom(views[rng() % views.size()]);
    UpdateDirection dir =
        rng() % 2 ? UpdateDirection::kInsert : UpdateDirection::kDelete;
    CAPTURE(Serialize(kb));
    CAPTURE(goal.text());
    CAPTURE(dir == UpdateDirection::kInsert);
    try {
      ExplanationFamily fam = LocallyMinimalExplanations(kb, goal, dir);
      for (const ExplanationSet& e : fam.members) {
        KnowledgeBase after = kb;
        for (const std::string& f : e.remove)
          after.remove_fact(ParseGroundAtom(f));
        for (const std::string& f : e.add) after.add_fact(ParseGroundAtom(f));
        CHECK(Entails(after, goal) == (dir == UpdateDirection::kInsert));
        CHECK(SatisfiesConstraints(after));
        ++produced;
      }
    } catch (const Error& e) {
      CHECK(e.kind() == "no-solution");
    }
  }
  CHECK(produced > 40);
}
