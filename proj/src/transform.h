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

#ifndef HKB_TRANSFORM_H_
#define HKB_TRANSFORM_H_

#include <set>
#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

// Clause with a disjunctive head. A literal with neg=true stands for the
// marked complement ~A and is treated as an atom of its own during tableau
// expansion.
struct DisjClause {
  std::vector<Literal> head;
  std::vector<Literal> body;
  // "p | ~a :- ~q." ; "p | ~a." when the body is empty; ":- ~p, a." when the
  // head is empty.
  std::string text() const;
  auto operator<=>(const DisjClause&) const = default;
};

struct TransformedProgram {
  enum class Kind { kIdbStar, kIdbBulletBody, kIdbBulletHead, kIdbPlus, kIdbMinus };
  Kind kind;
  std::vector<DisjClause> clauses;
  std::vector<std::string> texts() const;
};

// Every atom of every rule switches sides negated: h :- b1, b2 becomes
// ~b1 | ~b2 :- ~h. The result has no facts.
TransformedProgram TransformIdbStar(const KnowledgeBase& ddb);

// Body-empty form: h | ~b1 | ~b2. Head-empty form: :- ~h, b1, b2.
TransformedProgram TransformIdbBulletBody(const KnowledgeBase& ddb);
TransformedProgram TransformIdbBulletHead(const KnowledgeBase& ddb);

// Moves only atoms that are in the given model: the deletion program. Atoms
// outside the model stay in place.
TransformedProgram TransformIdbPlus(const KnowledgeBase& ddb,
                                    const std::set<std::string>& model);

// Insertion program: the body-empty move, tagged as the materialized variant.
TransformedProgram TransformIdbMinus(const KnowledgeBase& ddb,
                                     const std::set<std::string>& model);

}  // namespace hkb

#endif  // HKB_TRANSFORM_H_
