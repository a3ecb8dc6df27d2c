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

#ifndef HKB_PARSER_H_
#define HKB_PARSER_H_

#include <string>

#include "lang.h"

namespace hkb {

// Parses the program text format:
//   % comment
//   [IDB] / [EDB] / [IC] / [ABDUCIBLES]     (DDB mode)
//   [IMMUTABLE] / [UPDATABLE] / [CONSTRAINTS]  (general KB mode)
//   clauses "h :- b1, b2." , facts "f." , denials ":- b1, b2."
//   "not a" for default negation, "X != Y" grounding-time guard.
// Uppercase-initial identifiers are variables, everything else constants.
KnowledgeBase ParseProgram(const std::string& text);
KnowledgeBase ParseFile(const std::string& path);

// Parses a single clause (fact, rule, or denial); trailing '.' optional.
Clause ParseClause(const std::string& text);
// Parses a ground atom; throws on variables or trailing input.
Atom ParseGroundAtom(const std::string& text);

std::string Serialize(const KnowledgeBase& kb);

}  // namespace hkb

#endif  // HKB_PARSER_H_
