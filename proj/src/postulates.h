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

#ifndef HKB_POSTULATES_H_
#define HKB_POSTULATES_H_

#include <string>
#include <vector>

#include "change.h"
#include "lang.h"

namespace hkb {

struct PostulateResult {
  std::string name;     // "KB*1" .. "KB*7.3"
  std::string label;    // "closure", "weak success", ...
  bool pass = false;
  bool bounded = false;  // the check hit its search bound; never a silent pass
  std::string witness;
  std::string text() const;
};

struct PostulateReport {
  std::vector<PostulateResult> results;
  bool all_pass() const;
  std::string text() const;
};

// Judges a revision before -> after for request alpha against the rationality
// postulates. Every verdict carries a witness or note; bounded checks are
// reported as such rather than assumed.
PostulateReport CheckRevisionPostulates(const KnowledgeBase& before,
                                        const Clause& alpha,
                                        const KnowledgeBase& after);

// Brute-force ground truth for the change operations, written independently
// of the production enumeration: plain double loops over all subsets.
inline constexpr int kOracleBound = 14;
std::vector<KnowledgeBase> OracleRemainders(const KnowledgeBase& kb,
                                            const Clause& alpha);
std::vector<ClauseSet> OracleKernels(const KnowledgeBase& kb, const Clause& alpha);

// Search bound for the relevance postulates (subsets of KB_U plus alpha).
inline constexpr int kRelevanceBound = 12;

}  // namespace hkb

#endif  // HKB_POSTULATES_H_
