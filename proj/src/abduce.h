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

#ifndef HKB_ABDUCE_H_
#define HKB_ABDUCE_H_

#include <set>
#include <string>
#include <vector>

#include "lang.h"

namespace hkb {

inline constexpr int kDefaultDepthLimit = 64;

enum class IcOrder { kCheckFirst, kCheckLast };
enum class UpdateDirection { kInsert, kDelete };

IcOrder ParseIcOrder(const std::string& name);  // "first" | "last"

struct SldBranch {
  enum class Status { kSuccess, kFailure, kDepthCut, kIcPruned };
  Status status = Status::kFailure;
  // Program clauses actually resolved on this branch (rules and present facts).
  std::vector<Clause> used;
  // Base-predicate leaves consumed: present facts plus assumed missing ones.
  std::set<std::string> support;
  // The assumed part of the support (absent from the fact section).
  std::set<std::string> missing;
  // Rendered goal list after each resolution step, root goal first.
  std::vector<std::string> goal_trace;
};

struct SldTree {
  Atom goal;
  std::vector<SldBranch> branches;       // exploration order
  std::set<std::string> subgoal_atoms;   // every positive subgoal selected
  bool depth_cut_present = false;
  // Some branch died at a negated subgoal whose atom is currently derivable.
  bool neg_blocked = false;
};

// Complete SLD tree for the goal over the grounded program, leftmost literal
// selection, clauses in file order. Base-predicate subgoals are leaves: a
// present fact is consumed, a missing abducible fact is assumed into the
// branch support. With kCheckFirst a branch is pruned the moment its assumed
// facts violate a constraint; with kCheckLast violating branches complete and
// are marked afterwards.
SldTree BuildSldTree(const KnowledgeBase& kb, const Atom& goal,
                     int depth_limit = kDefaultDepthLimit,
                     IcOrder order = IcOrder::kCheckFirst);

struct BranchDeltas {
  std::vector<std::set<std::string>> success;         // per success branch
  std::vector<std::set<std::string>> failed_missing;  // completion sets of failures
};
BranchDeltas Deltas(const SldTree& tree);
std::set<std::string> DeltasUnion(const std::vector<std::set<std::string>>& v);

// Raw success supports including constraint-violating ones, no minimization.
std::vector<std::set<std::string>> SupportFamily(
    const KnowledgeBase& kb, const Atom& goal,
    int depth_limit = kDefaultDepthLimit);

struct ExplanationSet {
  std::set<std::string> add;     // facts whose admission the branch relies on
  std::set<std::string> remove;  // facts whose removal the branch relies on
  std::vector<Clause> rules;     // rule subset witnessing local minimality
  bool operator==(const ExplanationSet& o) const {
    return add == o.add && remove == o.remove;
  }
  bool operator<(const ExplanationSet& o) const {
    if (add != o.add) return add < o.add;
    return remove < o.remove;
  }
};

struct ExplanationFamily {
  Atom goal;
  UpdateDirection direction = UpdateDirection::kInsert;
  std::vector<ExplanationSet> members;
  // Candidates removed by the minimality / closure post-filter.
  std::vector<std::string> filtered;
  bool depth_cut_present = false;
};

// Closed locally minimal explanations for making the goal hold (insert) or
// fail (delete). An already satisfied request yields one empty explanation.
// Throws NoSolutionError when no explanation exists.
ExplanationFamily LocallyMinimalExplanations(
    const KnowledgeBase& kb, const Atom& goal, UpdateDirection direction,
    IcOrder order = IcOrder::kCheckFirst, int depth_limit = kDefaultDepthLimit);

// Minimal abducible fact sets T such that the rules of kb_after together with
// T derive u (support-set explanations for an observed update).
std::vector<std::set<std::string>> ExplainUpdate(const KnowledgeBase& kb_after,
                                                 const Atom& u);

}  // namespace hkb

#endif  // HKB_ABDUCE_H_
