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

#ifndef HKB_TABLEAU_H_
#define HKB_TABLEAU_H_

#include <set>
#include <string>
#include <vector>

#include "lang.h"
#include "transform.h"

namespace hkb {

inline constexpr int kTableauNodeCap = 100000;

struct TableauBranch {
  std::vector<Literal> literals;
  bool open = true;
  // Populated on closed branches: "complementary <atom>" or
  // "undeletable <atom>"; filters later close branches with
  // "not strongly minimal" or "not grounded".
  std::string close_reason;
  // For open branches: the negated base atoms, i.e. the cut this branch
  // proposes. Deletion tableaux cut stored facts; insertion tableaux cut
  // absent facts whose admission unblocks the request.
  std::set<std::string> cut;
  std::string text() const;
};

struct Tableau {
  std::vector<TableauBranch> branches;
  int nodes = 0;
  bool capped = false;
  std::vector<std::set<std::string>> open_cuts() const;
};

struct TableauSpec {
  TransformedProgram prog;
  std::vector<Literal> seeds;
  // Positive atoms placed on every branch before expansion (the stored base
  // relation, for insertion tableaux and groundedness subproblems).
  std::set<std::string> units;
  // Predicates whose atoms belong to the base relation.
  std::set<std::string> base_preds;
  // Stored base facts, used for the undeletability closure and cut harvest.
  std::set<std::string> edb;
  // Close a branch that proposes deleting a fact that is not stored.
  bool undeletable_closure = false;
  int node_cap = kTableauNodeCap;
};

// Expands the disjunctive program over the seeds. Branch selection explores
// every applicable clause, not just the first, so alternative cuts such as
// {a} and {f, a} are both produced. Branches are memoized as literal sets.
Tableau BuildTableau(const TableauSpec& spec);

// Deletion tableau for removing `request` from the view: program IDB*, seed
// ~request, undeletable closure on.
Tableau DeletionTableau(const KnowledgeBase& ddb, const Atom& request,
                        int node_cap = kTableauNodeCap);

// Same construction over IDB+ for the materialized variant.
Tableau MaterializedDeletionTableau(const KnowledgeBase& ddb, const Atom& request,
                                    int node_cap = kTableauNodeCap);

// Insertion tableau: body-empty program plus the stored facts as units, seed
// ~request. Open-branch cuts are the blocking sets; hitting them admits the
// request.
Tableau InsertionTableau(const KnowledgeBase& ddb, const Atom& request,
                         int node_cap = kTableauNodeCap);

// Keeps an open branch only if each fact in its cut is individually needed:
// putting s back into EDB \ cut must rederive the request.
Tableau StrongMinimalityFilter(const Tableau& t, const KnowledgeBase& ddb,
                               const Atom& request);

// Keeps an open branch only if every fact in its cut is a grounded
// consequence of retracting the request: ~s must lie on every finished open
// branch of the IDB* tableau over EDB \ cut with seed ~request.
Tableau GroundednessFilter(const Tableau& t, const KnowledgeBase& ddb,
                           const Atom& request);

}  // namespace hkb

#endif  // HKB_TABLEAU_H_
