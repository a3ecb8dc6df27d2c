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

#ifndef HKB_VUPDATE_H_
#define HKB_VUPDATE_H_

#include <set>
#include <string>
#include <vector>

#include "abduce.h"
#include "lang.h"

namespace hkb {

enum class VuAlgo { kSld, kTableau, kMaterialized };
VuAlgo ParseAlgo(const std::string& name);  // "sld" | "tableau" | "materialized"

struct UpdateTransaction {
  std::set<std::string> ins;  // disjoint from EDB
  std::set<std::string> del;  // subset of EDB
  std::string provenance;
  bool non_ground = false;
  bool empty() const { return ins.empty() && del.empty(); }
  std::string text() const;
};

// Signed change sets produced by propagating the request down the rules:
// insertion recurses through underivable body atoms, deletion falsifies one
// literal per supporting rule. Candidates are raw, before the consistency
// and minimality passes.
struct SignedChange {
  std::set<std::string> ins, del;
  bool operator==(const SignedChange&) const = default;
  bool operator<(const SignedChange& o) const;
};
std::vector<SignedChange> ExpandUpdate(const KnowledgeBase& ddb, const Atom& request,
                                       UpdateDirection dir,
                                       int depth_limit = kDefaultDepthLimit);

// Raw insertion candidate family after the constraint pass but before
// minimization: every served solution is a subset-extension member of this
// family, and each member contains a locally minimal explanation.
std::vector<std::set<std::string>> EdbCuts(const KnowledgeBase& ddb,
                                           const Atom& request);

struct ViewUpdateOptions {
  VuAlgo algo = VuAlgo::kMaterialized;
  bool all_solutions = false;
  int depth_limit = kDefaultDepthLimit;
  int node_cap = 100000;
};

// Translates the request into base-fact transactions. Requests that already
// hold yield one empty transaction. Requests on base predicates translate
// directly. Throws NoSolutionError when no transaction realizes the request.
std::vector<UpdateTransaction> ViewUpdate(const KnowledgeBase& ddb,
                                          const Atom& request, UpdateDirection dir,
                                          const ViewUpdateOptions& opts = {});

// Merges all transactions of a solution set into one.
UpdateTransaction UnionTransaction(const std::vector<UpdateTransaction>& txns);

// EDB' = (EDB \ T_del) union T_ins. Throws when the transaction breaches its
// invariants against this database.
KnowledgeBase ApplyTransaction(const KnowledgeBase& ddb,
                               const UpdateTransaction& txn);

}  // namespace hkb

#endif  // HKB_VUPDATE_H_
