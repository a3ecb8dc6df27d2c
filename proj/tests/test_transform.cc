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

#include "corpus.h"
#include "doctest.h"
#include "model.h"
#include "parser.h"
#include "transform.h"

using namespace hkb;
using hkb::testing::FixturePath;
using Kind = TransformedProgram::Kind;

TEST_CASE("full contrapositive move negates every atom") {
  KnowledgeBase kb = ParseFile(FixturePath("ex20.hkb"));
  TransformedProgram star = TransformIdbStar(kb);
  CHECK(star.kind == Kind::kIdbStar);
  CHECK(star.texts() == std::vector<std::string>{
            "~a | ~e :- ~p.",
            "~a | ~e :- ~q.",
            "~a | ~f :- ~p.",
            "~c :- ~q.",
        });

  KnowledgeBase one = ParseProgram("[IDB]\np :- e.\n[EDB]\ne.\n");
  CHECK(TransformIdbStar(one).texts() ==
        std::vector<std::string>{"~e :- ~p."});
}

TEST_CASE("body-empty and head-empty moves") {
  KnowledgeBase kb = ParseFile(FixturePath("ex20.hkb"));
  TransformedProgram body = TransformIdbBulletBody(kb);
  CHECK(body.kind == Kind::kIdbBulletBody);
  CHECK(body.texts() == std::vector<std::string>{
            "p | ~a | ~e.",
            "q | ~a | ~e.",
            "p | ~a | ~f.",
            "q | ~c.",
        });

  TransformedProgram head = TransformIdbBulletHead(kb);
  CHECK(head.kind == Kind::kIdbBulletHead);
  CHECK(head.texts() == std::vector<std::string>{
            ":- ~p, a, e.",
            ":- ~q, a, e.",
            ":- ~p, a, f.",
            ":- ~q, c.",
        });
}

TEST_CASE("model-directed deletion program") {
  KnowledgeBase kb = ParseFile(FixturePath("matview.hkb"));
  std::set<std::string> model = LeastModel(kb);
  CHECK(model == std::set<std::string>{"a", "b", "c", "p", "q"});
  TransformedProgram plus = TransformIdbPlus(kb, model);
  CHECK(plus.kind == Kind::kIdbPlus);
  CHECK(plus.texts() == std::vector<std::string>{
            "~a :- ~p.",
            "~a :- ~q.",
            "~c | ~b :- ~p.",
            "~p :- ~q.",
        });
}

TEST_CASE("deletion program leaves atoms outside the model in place") {
  KnowledgeBase kb = ParseFile(FixturePath("matview_print.hkb"));
  std::set<std::string> model = LeastModel(kb);
  CHECK(model == std::set<std::string>{"c", "d"});
  CHECK(TransformIdbPlus(kb, model).texts() == std::vector<std::string>{
            "p :- a.",
            "q :- a.",
            "~c | q :- b.",
            "q :- p.",
        });
  CHECK(TransformIdbPlus(kb, {}).texts() == std::vector<std::string>{
            "p :- a.",
            "q :- a.",
            "q :- c, b.",
            "q :- p.",
        });
}

TEST_CASE("materialized insertion program ignores the model") {
  KnowledgeBase kb = ParseFile(FixturePath("matview_print.hkb"));
  std::vector<std::string> want{
      "p | ~a.",
      "q | ~a.",
      "q | ~c | ~b.",
      "q | ~p.",
  };
  TransformedProgram minus = TransformIdbMinus(kb, LeastModel(kb));
  CHECK(minus.kind == Kind::kIdbMinus);
  CHECK(minus.texts() == want);
  CHECK(TransformIdbMinus(kb, {}).texts() == want);
  CHECK(TransformIdbMinus(kb, {}).texts() ==
        TransformIdbBulletBody(kb).texts());
}

TEST_CASE("transforms ground variable rules first") {
  KnowledgeBase kb = ParseProgram("[IDB]\np(X) :- q(X).\n[EDB]\nq(a).\nq(b).\n");
  CHECK(TransformIdbStar(kb).texts() == std::vector<std::string>{
            "~q(a) :- ~p(a).",
            "~q(b) :- ~p(b).",
        });
}

TEST_CASE("duplicate literals and duplicate clauses collapse") {
  KnowledgeBase kb = ParseProgram("[IDB]\np :- a, a.\np :- a.\n[EDB]\na.\n");
  CHECK(TransformIdbStar(kb).texts() ==
        std::vector<std::string>{"~a :- ~p."});
}

TEST_CASE("empty rule set transforms to the empty program") {
  KnowledgeBase kb = ParseProgram("[IDB]\n[EDB]\na.\n");
  CHECK(TransformIdbStar(kb).clauses.empty());
  CHECK(TransformIdbBulletBody(kb).clauses.empty());
  CHECK(TransformIdbBulletHead(kb).clauses.empty());
  CHECK(TransformIdbPlus(kb, {"a"}).clauses.empty());
  CHECK(TransformIdbMinus(kb, {"a"}).clauses.empty());
}

TEST_CASE("negative body literals are rejected") {
  KnowledgeBase kb = ParseFile(FixturePath("tweety.hkb"));
  CHECK_THROWS_WITH_AS(TransformIdbStar(kb),
                       doctest::Contains("definite"), Error);
  CHECK_THROWS_WITH_AS(TransformIdbMinus(kb, {}),
                       doctest::Contains("definite"), Error);
}
