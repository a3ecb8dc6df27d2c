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

#ifndef HKB_GROUND_H_
#define HKB_GROUND_H_

#include <map>
#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

// Constants occurring anywhere in the kb, sorted.
std::vector<std::string> Constants(const KnowledgeBase& kb);

// Constants plus one reserved constant "u0" when there are none.
std::vector<std::string> HerbrandUniverse(const KnowledgeBase& kb);

// All ground atoms over the kb's predicates and Herbrand universe, sorted.
std::vector<Atom> HerbrandBase(const KnowledgeBase& kb);

// Replaces every rule and constraint by its ground instances over the
// Herbrand universe. "!=" guards are resolved here: instances whose guard
// binds two equal constants are dropped, satisfied guards disappear from the
// body. Idempotent.
KnowledgeBase Ground(const KnowledgeBase& kb);

// Ground instances of a single clause.
std::vector<Clause> GroundClause(const Clause& c,
                                 const std::vector<std::string>& universe);

struct Stratification {
  std::map<std::string, int> level;  // predicate -> stratum
  int max_level = 0;
};

// Levels by dependency height: predicates with no defining rule sit at 0,
// a rule head sits strictly above every body predicate outside its own
// recursive component. Negation inside a recursive component is rejected.
Stratification Stratify(const KnowledgeBase& kb);

}  // namespace hkb

#endif  // HKB_GROUND_H_
