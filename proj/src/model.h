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

#ifndef HKB_MODEL_H_
#define HKB_MODEL_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ground.h"
#include "lang.h"

namespace hkb {

// Stratum-wise least fixpoint, semi-naive within each stratum. Atoms are
// rendered in canonical text form ("p", "q(a,b)").
std::set<std::string> LeastModel(const KnowledgeBase& kb);

// Independent oracle: naive full-rescan iteration, same stratification.
std::set<std::string> NaiveModel(const KnowledgeBase& kb);

bool Entails(const KnowledgeBase& kb, const Atom& goal);

// True when every positive body atom is in the model and no negated one is.
// The clause must be ground and guard-free.
bool BodySatisfied(const Clause& c, const std::set<std::string>& model);

struct Violation {
  Clause constraint;    // as written in the kb
  Clause witness;       // violated ground instance
};

// Constraints whose some ground instance has a satisfied body; `request`
// optionally adds one fact before evaluating.
std::vector<Violation> ViolatedConstraints(
    const KnowledgeBase& kb, const std::optional<Atom>& request = std::nullopt);

bool SatisfiesConstraints(const KnowledgeBase& kb);

// Horn derivability, deduction-theorem style: a fact must be in the model, a
// rule's head must follow once its positive body is asserted, a denial holds
// when asserting its body violates a constraint. A model that violates some
// constraint derives everything.
bool Derives(const KnowledgeBase& kb, const Clause& alpha);

// Operational acceptance of a request by the current state: a fact request
// must be entailed, a denial request must have no satisfied ground body.
bool RequestHolds(const KnowledgeBase& kb, const Clause& alpha);

// alpha joined to the whole kb: the closure must satisfy every constraint,
// and a denial alpha additionally requires its body to be underivable.
bool ConsistentWithKb(const KnowledgeBase& kb, const Clause& alpha);

// alpha against the immutable background only (rules + constraints, no
// updatable facts).
bool ConsistentWithBackground(const KnowledgeBase& kb, const Clause& alpha);

// Exact check of request interchangeability: for every set E of ground facts
// over the Herbrand base, KB_I ∪ E ∪ KB_IC derives alpha iff it derives beta.
// Requires |Herbrand base| <= kKbEquivalenceBound.
inline constexpr int kKbEquivalenceBound = 16;
bool KbEquivalent(const KnowledgeBase& kb, const Clause& alpha,
                  const Clause& beta);

}  // namespace hkb

#endif  // HKB_MODEL_H_
