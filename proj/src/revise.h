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

#ifndef HKB_REVISE_H_
#define HKB_REVISE_H_

#include <set>
#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

struct ReviseOptions {
  int depth_limit = 64;
  int branch_cap = 256;
  bool trace = false;
};

struct RevisionOutcome {
  KnowledgeBase kb_after;
  std::set<std::string> inserted;  // admitted facts (may include present ones)
  std::set<std::string> deleted;   // removed facts
  std::vector<std::string> trace;
  bool unsatisfiable = false;  // request clashes with rules + constraints
  bool vacuous = false;        // request already held consistently
};

// kb with alpha adopted where the mode allows it: facts join the updatable
// section (in database mode only base-predicate facts can), denials join the
// constraints, rules join the rule section.
KnowledgeBase UnionWith(const KnowledgeBase& kb, const Clause& alpha);

// Revision of kb by a ground fact or denial. Chooses the cheapest outcome
// (fewest net changes, ties broken lexicographically).
RevisionOutcome GeneralizedRevision(const KnowledgeBase& kb, const Clause& alpha,
                                    const ReviseOptions& opts = {});

// Every undominated outcome, canonically ordered. An outcome is dominated
// when another one inserts and deletes strict subsets of the same facts.
std::vector<RevisionOutcome> AllMinimalRevisions(const KnowledgeBase& kb,
                                                 const Clause& alpha,
                                                 const ReviseOptions& opts = {});

}  // namespace hkb

#endif  // HKB_REVISE_H_
