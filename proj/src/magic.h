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

#ifndef HKB_MAGIC_H_
#define HKB_MAGIC_H_

#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

// Update-propagation rules rendered textually: "+p" asks to insert p, "-p"
// to delete it, "&" conjoins conditions, "|" offers alternatives, "~q" tests
// absence. Both polarities are emitted for every rule because propagation
// flips sign under negation.
struct VuRuleSet {
  std::vector<std::string> seeds;
  std::vector<std::string> rules;
  // Set when a projection rule required a fresh constant (@new1, ...): the
  // request admits a non-ground realization.
  bool non_ground = false;
};

// Normalizes rule bodies to at most two literals through fresh aux
// predicates, then instantiates the propagation schema for each rule.
VuRuleSet MagicVu(const KnowledgeBase& ddb, const Atom& request, bool insert);

// Bodies longer than two literals are split: p :- a, b, c becomes
// p :- a, aux1 and aux1 :- b, c. Aux heads carry every variable of their
// body. Aux atoms never surface in transactions.
KnowledgeBase NormalizeBodies(const KnowledgeBase& ddb);

}  // namespace hkb

#endif  // HKB_MAGIC_H_
