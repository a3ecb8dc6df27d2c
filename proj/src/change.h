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

#ifndef HKB_CHANGE_H_
#define HKB_CHANGE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

struct ChangeStrategy {
  enum class Mode {
    kMinimalIncision,
    kMaximalIncision,
    kFullMeet,
    kMaxichoice,
    kRanked,
  };
  Mode mode = Mode::kMinimalIncision;
  // Ranked mode: higher rank is harder to give up. Missing facts rank 0.
  std::map<std::string, int> priority;
};

// Accepts "minimal", "maximal", "full-meet", "maxichoice".
ChangeStrategy ParseStrategy(const std::string& name);

using ClauseSet = std::set<Clause>;

// Maximal subsets of kb that keep alpha acceptable. Every member retains all
// rules and constraints; only updatable facts vary. When even the fact-free
// core cannot accept alpha the family is {kb}, mirroring the selection
// convention for impossible requests.
struct RemainderFamily {
  Clause alpha;
  std::vector<KnowledgeBase> members;
};
RemainderFamily Remainders(const KnowledgeBase& kb, const Clause& alpha);

// Minimal clause subsets that clash with alpha (self-contained inconsistency:
// the subset plus alpha violates one of its own denials). For a deductive
// database and a view-fact goal the family is instead the SLD support family
// for deriving the goal, the explanation bridge used by the update engines.
struct KernelFamily {
  Clause alpha;
  std::vector<ClauseSet> members;
};
KernelFamily Kernels(const KnowledgeBase& kb, const Clause& alpha);

// All inclusion-minimal sets hitting every non-empty member. Empty family
// yields {{}}.
std::vector<std::set<std::string>> MinimalHittingSets(
    const std::vector<std::set<std::string>>& family);

// Hitting sets over clause families where only updatable facts may be picked.
// A non-empty member with no updatable fact makes the family unhittable.
std::vector<std::set<std::string>> MinimalHittingSetsOver(
    const std::vector<ClauseSet>& family, const std::set<std::string>& updatable);

// Intersection of the selected remainders, then alpha is adopted. An alpha
// the rule-and-constraint core cannot accept leaves kb unchanged.
KnowledgeBase PartialMeetRevision(const KnowledgeBase& kb, const Clause& alpha,
                                  const ChangeStrategy& strategy);

// Removes one incision (a hitting set over the kernel family) from the
// updatable facts, then adopts alpha. Same impossibility convention.
KnowledgeBase KernelRevision(const KnowledgeBase& kb, const Clause& alpha,
                             const ChangeStrategy& strategy);

// Adopt alpha into the matching section of kb (fact, constraint, or rule).
KnowledgeBase Adopt(const KnowledgeBase& kb, const Clause& alpha);

inline constexpr int kSubsetEnumerationBound = 16;

}  // namespace hkb

#endif  // HKB_CHANGE_H_
